"""
Subdividing a triangle by intervals
===================================

Every pair of faces A <= B of a complex, with A nonempty, is an interval.
Intervals are ordered by containment and the chains of that order form a
new complex that subdivides the old one.
"""

from intsubdiv import enumerate_intervals, f_interval, f_vector, interval_complex, parse_facets

K = parse_facets("1 2 3")
print("f(K)      =", f_vector(K))

# 19 intervals: one per vertex, three per edge, seven with the whole
# triangle as upper face
intervals = enumerate_intervals(K)
print(len(intervals), "intervals:", " ".join(map(str, intervals)))

###############################################################################
# Building the order complex explicitly is the slow route.  The closed form
# gets the same numbers from f(K) alone.

L, labels = interval_complex(K)
print("f(Int K)  =", f_vector(L), "(constructed)")
print("f(Int K)  =", f_interval(f_vector(K)), "(closed form)")

# vertex 1 of Int K is the interval [1,1], and so on in lexicographic order
print(labels.sidecar().splitlines()[:4])

"""
The h-vector of an interval subdivision
=======================================

The h-vector of Int K depends linearly on the h-vector of K.  The matrix
has descent counts of signed permutations as entries.
"""

from intsubdiv import (analysis_report, f_vector, h_from_f, h_interval, parse_facets, r_matrix)

for row in r_matrix(4).rows:
    print(" ".join(f"{x:4d}" for x in row))

###############################################################################
# A non-pure complex: a tetrahedron glued to two triangles.

K = parse_facets("1 2 3 4\n1 2 5\n3 4 5")
h = h_from_f(f_vector(K))
hi = h_interval(h)
print("h(K)     =", h)
print("h(Int K) =", hi)

# the third entry shrinks, so entrywise growth needs non-negative input
print("h_3 went from", h[3], "to", hi[3])

###############################################################################
# For non-negative h the result is real-rooted.

print(analysis_report(h_interval((1, 4, 0, 2))))

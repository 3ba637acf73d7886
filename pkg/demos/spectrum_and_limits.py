"""
Eigenvalues and limiting roots
==============================

Iterating the subdivision multiplies the facet count by 2^(d-1) d! each
time.  The roots of the f-polynomial settle to values that depend
only on the dimension.
"""

import numpy as np

from intsubdiv import expected_spectrum, f_matrix, iterate_f, limit_convergence_report, verify_spectrum
from intsubdiv.spectral import eigenvectors

d = 3
print("F_3:")
for row in f_matrix(d).rows:
    print("   ", row)
print("spectrum", expected_spectrum(d), "verified:", verify_spectrum("F", d).ok)
print("top eigenvector of R_3:", eigenvectors("R", d)[expected_spectrum(d)[-1]])

for n in range(4):
    print(n, tuple(iterate_f((1, 3, 3, 1), n)))

###############################################################################
# Two different 2-dimensional complexes, same limit.

for facets in [(1, 3, 3, 1), (1, 4, 5, 2)]:
    traj = limit_convergence_report(facets, 12)
    print(facets, np.round(np.sort(traj.limit.real), 9), "converged:", traj.converged)

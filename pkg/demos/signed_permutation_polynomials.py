"""
Descents of signed permutations
===============================

Fix the first letter j of a signed permutation and the sign of its last
letter, then count descents with the convention that position 0 holds a 0.
"""

from intsubdiv import a_poly, bminus_poly, bplus_poly, enumerate_B, t_poly
from intsubdiv.signed import descent_count_B

for w in enumerate_B(3, first=2, last_sign="+"):
    print(w, "descents:", descent_count_B(w))

###############################################################################
# The descent polynomials for d = 4.  Three routes give the same answer.

for j in range(1, 5):
    polys = {m: bplus_poly(4, j, m).poly for m in ("enumerate", "recurrence", "e2")}
    assert len(set(polys.values())) == 1
    print(f"B+(4,{j}) = {polys['enumerate']}    B-(4,{j}) = {bminus_poly(4, j)}")

###############################################################################
# Interleaving B+ and B- gives T, which factors through the type A polynomial.

p = t_poly(4, 1).poly
print("T(4,1) =", p)
print("(1+t)^3 * A(4,1) =", (type(p)([1, 1]) ** 3) * a_poly(4, 1).poly)

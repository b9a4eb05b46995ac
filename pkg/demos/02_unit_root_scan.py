"""
An eigenvalue on the unit circle is not enough
==============================================

For A->BBBCCC, B->BACCB, C->ABBBC the only direction that could keep the
Parikh path at bounded distance from a hyperplane is f = (3, -1, 0), the
left eigenvector for the eigenvalue -1. Along powers of single letters
f . Psi stays bounded, yet along a family of prefixes F_k it equals k + 2.
"""

from bdlword import candidate_normal_space, fk_build, scan_boundedness
from bdlword import fixtures as F
from bdlword.wordcore import FiniteWord, parikh

s = F.PSI_UNIT
f = F.PSI_UNIT_NORMAL

space = candidate_normal_space(s.incidence)
print("candidate normal space:", space.exact_basis)

# f . Psi(psi^n(a)) alternates and never grows
for n in range(6):
    row = [parikh(FiniteWord(F.ABC, s.iterate(a, n))).dot(f) for a in "ABC"]
    print(f"n={n}: A {row[0]:+d}  B {row[1]:+d}  C {row[2]:+d}")

# %%
# The prefixes psi^2k(BA) psi^2k-1(ABB) ... psi(ABB) BAC tell a different
# story: each extra pair of blocks adds exactly one.
for k in range(8):
    fam = fk_build(k, expand=False)
    print(f"F_{k}: length {fam.length:>14}, f . Psi = {fam.value}")

# %%
# A direct scan over a million letters on each side shows the same slow
# (logarithmic) growth in the dyadic block maxima.
report = scan_boundedness(s, f, 10 ** 6)
print(report)

"""
Eigenvalues decide (most of) the story
======================================

A substitution fixed point admits a non-trivial bounded-distance lattice
representation when some eigenvalue of the incidence matrix is strictly
inside the unit circle, and cannot admit one (for primitive substitutions)
when all of them are strictly outside. This script prints the spectrum of
a few substitutions and the resulting verdict.
"""

from bdlword import classify, eigen_classify
from bdlword import fixtures as F

examples = {
    "A->BBBCCC, B->BACCB, C->ABBBC": F.PSI_UNIT,
    "A->AABBBCCCC, B->AAB, C->AA": F.PSI_SMALL,
    "Thue-Morse": F.THUE_MORSE,
    "Fibonacci": F.FIBONACCI,
}

for name, s in examples.items():
    print(f"== {name}")
    print(eigen_classify(s.incidence).table())
    print(classify(s))
    print()

# %%
# The first substitution is the interesting one. Its characteristic
# polynomial factors as (x + 1)(x^2 - 4x - 6), so -1 is an exact root and
# the classifier certifies it as lying on the unit circle. The remaining
# roots 2 +- sqrt(10) both have modulus > 1. That is the boundary case
# where the spectrum alone does not settle the question.
rep = eigen_classify(F.PSI_UNIT.incidence)
print("characteristic polynomial:", rep.char_poly)
for e in rep.roots:
    label = e.exact or (f"{e.value.real:.10g}" if e.is_real else str(e.value))
    print(f"  {label}: {e.modulus_class}")

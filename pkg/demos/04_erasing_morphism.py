"""
Erasing a letter can destroy the property
=========================================

The fixed point u of A->AABBBCCCC, B->AAB, C->AA has a bounded
representation. Deleting every C gives a word over {A, B} that has none.
Two independent checks: the linear constraints on a would-be normal leave
only zero, and no small integer direction stays bounded in a scan.
"""

from itertools import product

from bdlword import image_normal_constraints, image_of_fixed_point, parikh_path, scan_path
from bdlword import fixtures as F
from bdlword.morphimage import hyperplane_basis, transported_hyperplane
from bdlword.spectral import candidate_normal_space
from bdlword.substitution import Morphism

phi = F.PHI_ERASE_C
cons = image_normal_constraints(phi.incidence, F.PSI_SMALL.incidence)
print("constraint rank:", cons.rank, "singular values:", cons.singular_values)
print("only the zero normal survives:", cons.only_zero)

N = 100_000
path = parikh_path(image_of_fixed_point(phi, F.PSI_SMALL, None, N, N))
best = min((scan_path(path, f, N) for f in product(range(-5, 6), repeat=2) if any(f)),
           key=lambda r: r.max_abs)
print(f"best grid direction {best.normal}: max {best.max_abs}, {best.verdict}")

# %%
# Compare with a bijective relabelling: the transported hyperplane still
# works and the scan stays small.
rotate = Morphism(F.ABC, F.ABC, {"A": "B", "B": "C", "C": "A"})
f = candidate_normal_space(F.PSI_SMALL.incidence).basis[0]
hp = transported_hyperplane(rotate.incidence, hyperplane_basis(f), 3)
img = parikh_path(image_of_fixed_point(rotate, F.PSI_SMALL, None, N, N))
print(scan_path(img, tuple(hp.normal), N))

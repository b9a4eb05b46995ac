"""
Geometric representations and their deviation from a lattice
============================================================

Give each letter a length, lay the bi-infinite word out on the line and
compare the n-th point x_n with eta * n. We do it first by hand on a short
window and then for the substitution A->AABBBCCCC, B->AAB, C->AA, whose
small eigenvalue (about 0.5956) gives a bounded deviation.
"""

from fractions import Fraction
from pathlib import Path

import numpy as np

from bdlword import (build_representation, candidate_normal_space, deviation_series,
                     generate_window, parikh_path, representation_from_lengths)
from bdlword import fixtures as F
from bdlword.render import representation_svg

path = parikh_path(F.SAMPLE_WINDOW)
rep = representation_from_lengths((Fraction(3, 2), Fraction(1, 2), 1), path, eta=1)
print(F.SAMPLE_WINDOW.dump())
for n in range(-3, 4):
    print(f"x_{n} = {rep.x(n)}")

# %%
# The unit normal h of the candidate hyperplane gives lengths h + eta with
# eta = 1 + max|h|, all positive and not all equal.
s = F.PSI_SMALL
h = candidate_normal_space(s.incidence).basis[0]
window = generate_window(s, None, 50_000, 50_000)
rep = build_representation(h, parikh_path(window))
dev = deviation_series(rep)
print("lengths:", np.round(rep.lengths, 6), "eta:", round(rep.eta, 6))
print("max |x_n - eta n| over |n| <= 50000:", dev.max())

out = Path("representation.svg")
letters = "".join(window.letter(n) for n in range(-8, 8))
out.write_text(representation_svg(rep, letters, -8))
print("wrote", out)

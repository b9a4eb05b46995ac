import random

import numpy as np
import pytest

from bdlword import fixtures as F
from bdlword.bdl import Growth, scan_path
from bdlword.fixedpoint import Window, generate_window, parikh_path
from bdlword.morphimage import (hyperplane_basis, image_normal_constraints, image_of_fixed_point,
                                image_window, parikh_transport_holds, transported_hyperplane)
from bdlword.spectral import candidate_normal_space
from bdlword.substitution import IntMatrix, Morphism
from bdlword.wordcore import FiniteWord, parikh

ROTATE = Morphism(F.ABC, F.ABC, {"A": "B", "B": "C", "C": "A"})


def test_image_examples():
    img = image_window(F.PHI_ERASE_C, Window(F.ABC, "CAB", "ACBC"))
    assert img.dump() == "AB|AB"
    ident = Morphism(F.ABC, F.ABC, {a: a for a in "ABC"})
    w = generate_window(F.PSI_UNIT, None, 50, 50)
    assert image_window(ident, w).dump() == w.dump()


@pytest.mark.parametrize("phi", [F.PHI_ERASE_C, ROTATE,
                                 Morphism(F.ABC, F.AB, {"A": "AB", "B": "", "C": "BBA"})],
                         ids=["erase", "rotate", "mixed"])
def test_block_decomposition(phi):
    rng = random.Random(1)
    img = image_of_fixed_point(phi, F.PSI_SMALL, None, 3000, 3000)
    src_path = parikh_path(img.source)
    img_path = parikh_path(img)
    M = phi.incidence
    for _ in range(100):
        for m in (rng.randint(0, img.n_right - 1), -rng.randint(1, img.n_left)):
            n, v = img.block_decomposition(m)
            block = phi.apply_str(img.source.letter(n))
            assert block.startswith(v) and len(v) < len(block)
            assert img_path.at(m) == M @ src_path.at(n) + parikh(FiniteWord(phi.target, v))


def test_parikh_transport():
    rng = random.Random(2)
    for phi in (F.PHI_ERASE_C, ROTATE):
        for _ in range(50):
            w = FiniteWord(F.ABC, "".join(rng.choice("ABC") for _ in range(rng.randint(0, 40))))
            assert parikh_transport_holds(phi, w)


def test_transported_hyperplane_rotate():
    space = candidate_normal_space(F.PSI_SMALL.incidence)
    f = space.basis[0]
    hp = transported_hyperplane(ROTATE.incidence, hyperplane_basis(f), 3)
    assert len(hp.basis) == 2
    for b in hp.basis:
        assert abs(hp.normal @ b) < 1e-9
    # the rotation permutes coordinates, so the normal is permuted the same way
    expected = np.array(ROTATE.incidence.tolist(), float) @ f
    assert abs(abs(hp.normal @ expected) - 1) < 1e-9
    img = image_of_fixed_point(ROTATE, F.PSI_SMALL, None, 100_000, 100_000)
    rep = scan_path(parikh_path(img), tuple(hp.normal), 100_000)
    assert rep.verdict is Growth.BOUNDED_SO_FAR and rep.max_abs < 10


def test_transported_hyperplane_full_span():
    dup = Morphism(F.ABC, F.AB, {"A": "A", "B": "B", "C": "AB"})
    with pytest.raises(ValueError):
        transported_hyperplane(dup.incidence, hyperplane_basis((0.2, 0.3, 0.9)), 2)


def test_constraints_erasing_example():
    c = image_normal_constraints(F.PHI_ERASE_C.incidence, F.PSI_SMALL.incidence)
    assert c.rank == 2 and c.only_zero
    assert len(c.eigenvalues) == 2


def test_constraints_identity_recover_normal():
    c = image_normal_constraints(IntMatrix.identity(3), F.PSI_UNIT.incidence)
    assert len(c.null_space) == 1
    v = c.null_space[0]
    v = v / v[0] * 3
    assert v == pytest.approx([3, -1, 0], abs=1e-9)


def test_image_needs_matching_alphabet():
    with pytest.raises(Exception):
        image_window(F.PHI_ERASE_C, Window(F.AB, "AB", "BA"))

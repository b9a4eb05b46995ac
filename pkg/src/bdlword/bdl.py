"""Bounded distance equivalence to a lattice (BDL) for substitution fixed points.

A geometric representation places the n-th point at x_n = l . Psi_n(u). It is
BDL to eta*Z exactly when (l - eta) . Psi_n(u) stays bounded, i.e. when the
Parikh path keeps a bounded distance from the hyperplane with normal l - eta.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import fixtures
from .fixedpoint import ParikhPath, generate_window, parikh_path
from .spectral import (DEFAULT_TOL, ModulusClass, SpectralReport, eigen_classify,
                       eigenvector)
from .substitution import IntMatrix, SeedPair, Substitution, is_primitive
from .wordcore import FiniteWord, ParikhVector, parikh


class Verdict(str, enum.Enum):
    GUARANTEED = "GUARANTEED"   # an eigenvalue of modulus < 1
    IMPOSSIBLE = "IMPOSSIBLE"   # primitive and every eigenvalue of modulus > 1
    OPEN = "OPEN"

    def __str__(self) -> str:
        return self.value


class Growth(str, enum.Enum):
    BOUNDED_SO_FAR = "BOUNDED_SO_FAR"
    GROWING = "GROWING"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BdlVerdict:
    verdict: Verdict
    spectrum: SpectralReport
    primitive: bool
    #: some eigenvalue of modulus <= 1 (None: undecided)
    necessary_condition: bool | None
    #: some eigenvalue of modulus < 1
    sufficient_condition: bool
    warnings: tuple[str, ...] = ()

    @property
    def min_modulus_class(self) -> ModulusClass:
        return self.spectrum.min_modulus_class

    def as_dict(self) -> dict:
        return {"verdict": str(self.verdict), "primitive": self.primitive,
                "min_modulus_class": str(self.min_modulus_class),
                "some_modulus_at_most_one": self.necessary_condition,
                "some_modulus_below_one": self.sufficient_condition,
                "warnings": list(self.warnings),
                "spectrum": self.spectrum.as_dict()}

    def __str__(self) -> str:
        lines = [f"verdict: {self.verdict}",
                 f"primitive: {self.primitive}",
                 f"some |lambda| < 1:  {self.sufficient_condition}",
                 f"some |lambda| <= 1: {self.necessary_condition}"]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def classify(s: Substitution, tol: float = DEFAULT_TOL) -> BdlVerdict:
    spec = eigen_classify(s.incidence, tol)
    primitive = is_primitive(s.incidence)
    notes = []
    if spec.some_below_one:
        verdict = Verdict.GUARANTEED
    elif spec.some_at_most_one is False:
        if primitive:
            verdict = Verdict.IMPOSSIBLE
        else:
            verdict = Verdict.OPEN
            notes.append("all eigenvalues exceed 1 in modulus but the substitution is not "
                         "primitive, so the necessary condition does not apply")
            warnings.warn(notes[-1], stacklevel=2)
    else:
        verdict = Verdict.OPEN
        if spec.min_modulus_class is ModulusClass.BOUNDARY_UNCERTAIN:
            notes.append("an eigenvalue could not be separated from the unit circle")
    return BdlVerdict(verdict, spec, primitive, spec.some_at_most_one,
                      spec.some_below_one, tuple(notes))


def letter_frequencies(s: Substitution) -> np.ndarray:
    """Perron-Frobenius right eigenvector of the incidence matrix, summing to 1."""
    spec = eigen_classify(s.incidence)
    top = spec.roots[0]
    v = np.real(eigenvector(s.incidence, top)) if top.multiplicity == 1 else None
    if v is None or np.any(v < -1e-12):
        raise ValueError("no positive dominant eigenvector; is the substitution primitive?")
    return v / v.sum()


# -- geometric representations -------------------------------------------------

@dataclass(frozen=True)
class GeometricRepresentation:
    lengths: tuple
    eta: object
    path: ParikhPath = field(repr=False)
    positions: np.ndarray = field(repr=False)  # x_n for n in path.indices

    @property
    def indices(self) -> np.ndarray:
        return self.path.indices

    @property
    def nontrivial(self) -> bool:
        return len(set(self.lengths)) >= 2

    def x(self, n: int):
        return self.positions[n + self.path.n_left]


def _exact(values) -> bool:
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


def representation_from_lengths(lengths: Sequence, path: ParikhPath, eta=None) -> GeometricRepresentation:
    """x_n = lengths . Psi_n for every n in the path."""
    lengths = tuple(lengths)
    if len(lengths) != path.d:
        raise ValueError(f"need {path.d} lengths")
    if any(l <= 0 for l in lengths):
        raise ValueError("lengths must be positive")
    if eta is None:
        if len(set(lengths)) == 1:
            eta = lengths[0]
        else:
            # average gap over the window
            n = path.n_right or path.n_left
            counts = path.vectors[-1] if path.n_right else -path.vectors[0]
            eta = sum(Fraction(int(c)) * Fraction(l) for c, l in zip(counts, lengths)) / n \
                if _exact(lengths) else float(np.dot(counts, lengths)) / n
    if _exact(lengths):
        positions = path.vectors.astype(object) @ np.array([Fraction(l) for l in lengths], dtype=object)
    else:
        positions = path.vectors.astype(np.float64) @ np.asarray(lengths, dtype=np.float64)
    return GeometricRepresentation(lengths, eta, path, positions)


def build_representation(h: Sequence[float], path: ParikhPath, tol: float = DEFAULT_TOL) -> GeometricRepresentation:
    """Lengths l_a = h_a + eta from a unit normal h, with eta = 1 + max |h_a|."""
    h = np.asarray(h, dtype=float)
    if h.shape != (path.d,):
        raise ValueError(f"normal must have {path.d} components")
    if abs(np.linalg.norm(h) - 1) > tol:
        raise ValueError("normal must be a unit vector")
    if np.all(h == h[0]):
        raise ValueError("constant normal gives only the trivial representation")
    eta = 1 + float(np.abs(h).max())
    lengths = tuple(float(x) for x in h + eta)
    return representation_from_lengths(lengths, path, eta)


def deviation_series(rep: GeometricRepresentation) -> np.ndarray:
    """|x_n - eta n| for every n; the lattice bijection is x_n -> eta n."""
    n = rep.indices
    if rep.positions.dtype == object:
        return np.array([abs(x - rep.eta * int(k)) for x, k in zip(rep.positions, n)], dtype=object)
    return np.abs(rep.positions - rep.eta * n)


# -- boundedness scans ---------------------------------------------------------

def block_maxima(ns: np.ndarray, values: np.ndarray) -> tuple[object, list]:
    """(|value| at n = 0, [max |value| over 2^j <= |n| < 2^(j+1)] for j = 0, 1, ...)."""
    ns = np.asarray(ns)
    a = np.abs(np.asarray(values))
    absn = np.abs(ns)
    initial = a[absn == 0].max() if np.any(absn == 0) else 0
    top = int(absn.max()) if len(absn) else 0
    out = []
    j = 0
    while top >= 2 ** j:
        mask = (absn >= 2 ** j) & (absn < 2 ** (j + 1))
        out.append(a[mask].max() if mask.any() else 0)
        j += 1
    return initial, out


def growth_verdict(initial, blocks: Sequence) -> Growth:
    """Heuristic: the record keeps being beaten late in the scan.

    GROWING when at least two of the last five dyadic blocks set a new record
    and together they raise the earlier record by at least 10%.
    """
    if len(blocks) < 6:
        return Growth.BOUNDED_SO_FAR
    record = max([initial] + list(blocks[:-5]))
    start = record
    rises = 0
    for m in blocks[-5:]:
        if m > record:
            rises += 1
            record = m
    if rises >= 2 and record > start and record >= 1.1 * start:
        return Growth.GROWING
    return Growth.BOUNDED_SO_FAR


def doubling_rule(blocks: Sequence) -> bool:
    """Last five block maxima strictly increasing and the last at least twice
    the one five blocks earlier. Much stricter than ``growth_verdict``; it
    cannot fire on logarithmic growth."""
    if len(blocks) < 6:
        return False
    tail = blocks[-5:]
    return all(a < b for a, b in zip(tail, tail[1:])) and blocks[-1] >= 2 * blocks[-6]


@dataclass(frozen=True)
class ScanReport:
    normal: tuple
    window: int
    ns: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)  # f . Psi_n
    initial: object
    block_maxima: tuple
    max_abs: object
    verdict: Growth
    exact: bool
    error_bound: float
    doubling_rule: bool

    def as_dict(self) -> dict:
        num = (lambda v: int(v)) if self.exact else float
        return {"normal": [str(x) for x in self.normal], "window": self.window,
                "exact": self.exact, "max": num(self.max_abs),
                "block_maxima": [num(m) for m in self.block_maxima],
                "verdict": str(self.verdict), "heuristic": True,
                "doubling_rule": self.doubling_rule,
                "error_bound": self.error_bound}

    def __str__(self) -> str:
        lines = [f"normal: ({', '.join(str(x) for x in self.normal)})",
                 f"window: |n| <= {self.window} ({'exact integer' if self.exact else 'floating point'})",
                 f"max |f.Psi_n|: {self.max_abs}",
                 "dyadic block maxima: " + " ".join(str(m) for m in self.block_maxima),
                 f"verdict (heuristic): {self.verdict}"]
        if not self.exact:
            lines.append(f"rounding error bound: {self.error_bound:.3g}")
        return "\n".join(lines)


def _normal_array(f):
    f = tuple(f)
    if _exact(f) and all(isinstance(x, int) or x.denominator == 1 for x in f):
        return f, np.array([int(x) for x in f], dtype=np.int64), True
    return f, np.asarray([float(x) for x in f]), False


def scan_path(path: ParikhPath, f, window: int | None = None) -> ScanReport:
    """Scan f . Psi_n over a path (restricted to |n| <= window if given)."""
    f, arr, exact = _normal_array(f)
    if window is None:
        window = min(path.n_left, path.n_right)
    values = path.functional(arr)
    ns = path.indices
    keep = np.abs(ns) <= window
    ns, values = ns[keep], values[keep]
    initial, blocks = block_maxima(ns, values)
    max_abs = max([initial] + list(blocks))
    if exact:
        initial, max_abs = int(initial), int(max_abs)
        blocks = [int(b) for b in blocks]
        err = 0.0
    else:
        initial, max_abs = float(initial), float(max_abs)
        blocks = [float(b) for b in blocks]
        err = window * path.d * float(np.abs(arr).max(initial=0)) * float(np.finfo(float).eps)
    return ScanReport(f, window, ns, values, initial, tuple(blocks), max_abs,
                      growth_verdict(initial, blocks), exact, err, doubling_rule(blocks))


def scan_boundedness(s: Substitution, f, N: int, seed: SeedPair | None = None) -> ScanReport:
    if N < 2:
        raise ValueError("N must be at least 2")
    path = parikh_path(generate_window(s, seed, N, N))
    return scan_path(path, f, N)


@dataclass(frozen=True)
class FactorCheck:
    max_factor: object
    prefix_bound: object | None
    within_twice_prefix_bound: bool | None


def sample_factors(path: ParikhPath, count: int, max_len: int, rng=None) -> list[tuple[int, int]]:
    """Random index pairs (i, j), i <= j, j - i <= max_len, inside the path."""
    rng = np.random.default_rng(rng)
    lo, hi = -path.n_left, path.n_right
    out = []
    for _ in range(count):
        length = int(rng.integers(0, min(max_len, hi - lo) + 1))
        i = int(rng.integers(lo, hi - length + 1))
        out.append((i, i + length))
    return out


def factor_functional_bound_check(f, samples: Iterable, path: ParikhPath | None = None) -> FactorCheck:
    """max |f . Psi(w)| over sampled factors w.

    ``samples`` are index pairs into ``path`` (then Psi(u[i,j)) = Psi_j - Psi_i
    and the prefix bound D over the path is reported with the check
    max <= 2 D) or finite words.
    """
    if path is None:
        vals = [abs(parikh(w).dot(f)) for w in samples]
        return FactorCheck(max(vals, default=0), None, None)
    f, arr, exact = _normal_array(f)
    v = path.functional(arr)
    off = path.n_left
    best = 0
    for i, j in samples:
        best = max(best, abs(v[j + off] - v[i + off]))
    prefix = np.abs(v).max()
    if exact:
        best, prefix = int(best), int(prefix)
    else:
        best, prefix = float(best), float(prefix)
    return FactorCheck(best, prefix, best <= 2 * prefix)


# -- the prefix family F_k of PSI_UNIT ------------------------------------------

@dataclass(frozen=True)
class FkFamily:
    k: int
    word: FiniteWord | None
    parikh: ParikhVector  # via matrix powers
    value: int  # (3, -1, 0) . Psi(F_k)

    @property
    def length(self) -> int:
        return self.parikh.total()


def fk_word(k: int) -> str:
    """psi^2k(BA) psi^(2k-1)(ABB) ... psi^2(BA) psi(ABB) BAC for PSI_UNIT."""
    if k < 0:
        raise ValueError("k must be >= 0")
    psi = fixtures.PSI_UNIT
    parts = []
    for i in range(k, 0, -1):
        parts.append(psi.iterate("BA", 2 * i))
        parts.append(psi.iterate("ABB", 2 * i - 1))
    parts.append("BAC")
    return "".join(parts)


def fk_parikh(k: int) -> ParikhVector:
    """Sum of Psi(psi^i(A)), Psi(psi^i(B)) for i <= 2k, Psi(psi^(2i-1)(B)) for
    1 <= i <= k, and Psi(C), through exact powers of the incidence matrix."""
    if k < 0:
        raise ValueError("k must be >= 0")
    M = fixtures.PSI_UNIT.incidence
    A, B, C = range(3)
    total = ParikhVector.zero(3)
    P = IntMatrix.identity(3)
    for i in range(2 * k + 1):
        total = total + P.column(A) + P.column(B)
        if i % 2 == 1:
            total = total + P.column(B)
        P = P @ M
    return total + ParikhVector((0, 0, 1))


def fk_build(k: int, expand: bool | None = None) -> FkFamily:
    if k < 0:
        raise ValueError("k must be >= 0")
    if expand is None:
        expand = k <= 4
    vec = fk_parikh(k)
    word = FiniteWord(fixtures.ABC, fk_word(k)) if expand else None
    if word is not None and parikh(word) != vec:
        raise ArithmeticError(f"F_{k}: word and matrix-power Parikh vectors disagree")
    return FkFamily(k, word, vec, vec.dot(fixtures.PSI_UNIT_NORMAL))

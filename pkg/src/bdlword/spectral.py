"""Exact characteristic polynomials and certified eigenvalue moduli.

Rational eigenvalues are found exactly. The others are located by Weierstrass
(Durand-Kerner) iteration in multiprecision; each approximation z_i comes
with the inclusion radius ``n * |W_i|``, where W_i is the Weierstrass
correction. Pairwise disjoint disks each hold exactly one root. A modulus is
only declared equal to 1 when the root is a rational +-1 or a root of unity
dividing the polynomial.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from . import polynomial as P
from .substitution import IntMatrix

DEFAULT_TOL = 1e-9


class ModulusClass(str, enum.Enum):
    LT1 = "LT1"
    EQ1_CERTIFIED = "EQ1_CERTIFIED"
    GT1 = "GT1"
    BOUNDARY_UNCERTAIN = "BOUNDARY_UNCERTAIN"

    def __str__(self) -> str:
        return self.value


LT1 = ModulusClass.LT1
EQ1 = ModulusClass.EQ1_CERTIFIED
GT1 = ModulusClass.GT1
UNCERTAIN = ModulusClass.BOUNDARY_UNCERTAIN


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial, coefficients highest degree first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_poly(self) -> P.Poly:
        return P.from_high(self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def at_matrix(self, M: IntMatrix) -> IntMatrix:
        """Horner evaluation p(M), exactly."""
        d = M.dim
        acc = IntMatrix.zeros(d)
        eye = IntMatrix.identity(d)
        for c in self.coefficients:
            acc = acc @ M + eye.scale(c)
        return acc

    def __str__(self) -> str:
        return P.to_str(self.as_poly())


def char_poly(M: IntMatrix) -> CharPoly:
    """det(xI - M) by the Faddeev-LeVerrier recurrence over Z."""
    n = M.dim
    coeffs = [1]
    Mk = IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + eye.scale(coeffs[-1])
        t = (M @ Mk).trace()
        if t % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-t // k)
    cp = CharPoly(tuple(coeffs))
    if not cp.at_matrix(M).is_zero():
        raise ArithmeticError("Cayley-Hamilton check failed")
    return cp


@dataclass(frozen=True)
class EigenClass:
    value: complex
    error_radius: float
    modulus_class: ModulusClass
    multiplicity: int = 1
    exact: str | None = None  # e.g. "-1" or "exp(2*pi*i*1/3)"

    @property
    def modulus(self) -> float:
        return abs(self.value)

    @property
    def is_rational(self) -> bool:
        return self.exact is not None and "exp" not in self.exact

    @property
    def rational_value(self) -> Fraction | None:
        return Fraction(self.exact) if self.is_rational else None

    @property
    def is_real(self) -> bool:
        return self.value.imag == 0

    def as_dict(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag,
                "radius": self.error_radius, "class": str(self.modulus_class),
                "multiplicity": self.multiplicity, "exact": self.exact}


_ORDER = [LT1, UNCERTAIN, EQ1, GT1]


@dataclass(frozen=True)
class SpectralReport:
    char_poly: CharPoly
    roots: tuple[EigenClass, ...]  # distinct roots
    diagonalizable: str  # "yes" | "no" | "unknown"
    tol: float = DEFAULT_TOL

    @property
    def eigen_classes(self) -> list[EigenClass]:
        """One entry per eigenvalue counted with multiplicity."""
        return [r for r in self.roots for _ in range(r.multiplicity)]

    @property
    def min_modulus_class(self) -> ModulusClass:
        classes = {r.modulus_class for r in self.roots}
        for c in _ORDER:
            if c in classes:
                return c
        raise ValueError("empty spectrum")

    @property
    def some_below_one(self) -> bool:
        return any(r.modulus_class is LT1 for r in self.roots)

    @property
    def some_at_most_one(self) -> bool | None:
        """True/False when decided, None when only uncertain roots remain."""
        if any(r.modulus_class in (LT1, EQ1) for r in self.roots):
            return True
        if all(r.modulus_class is GT1 for r in self.roots):
            return False
        return None

    def moduli(self) -> list[float]:
        return sorted((r.modulus for r in self.eigen_classes), reverse=True)

    def as_dict(self) -> dict:
        return {
            "char_poly": [str(c) for c in self.char_poly.coefficients],
            "char_poly_text": str(self.char_poly),
            "roots": [r.as_dict() for r in self.roots],
            "min_modulus_class": str(self.min_modulus_class),
            "diagonalizable": self.diagonalizable,
        }

    def table(self) -> str:
        lines = [f"characteristic polynomial: {self.char_poly}",
                 f"{'eigenvalue':>30}  {'|lambda|':>14}  {'radius':>9}  mult  class"]
        for r in sorted(self.roots, key=lambda r: -r.modulus):
            z = r.value
            txt = r.exact if r.exact else (f"{z.real:.10g}" if z.imag == 0
                                          else f"{z.real:.10g}{z.imag:+.10g}i")
            lines.append(f"{txt:>30}  {r.modulus:14.10f}  {r.error_radius:9.2e}  "
                         f"{r.multiplicity:>4}  {r.modulus_class}")
        lines.append(f"diagonalizable: {self.diagonalizable}")
        return "\n".join(lines)


# -- root location -----------------------------------------------------------

def _weierstrass(q: P.Poly, dps: int, max_iter: int = 2000):
    """Roots and inclusion radii of a squarefree monic rational polynomial."""
    n = P.deg(q)
    with mpmath.workdps(dps):
        c = [mpmath.mpf(x.numerator) / x.denominator for x in P.monic(q)]
        init = np.roots([float(x) for x in reversed(c)]) if n > 1 else np.array([-float(c[0])])
        z = [mpmath.mpc(complex(v)) for v in init]
        # nudge coincident starting values apart; the iteration needs distinct points
        for i in range(n):
            for j in range(i):
                if abs(z[i] - z[j]) < mpmath.mpf(10) ** (-8):
                    z[i] += mpmath.mpc(1e-6, 1e-6) * (i + 1)
        eps = mpmath.mpf(10) ** (-(dps - 8))

        def corr(zs):
            out = []
            for i in range(n):
                den = mpmath.mpf(1)
                for j in range(n):
                    if j != i:
                        den *= zs[i] - zs[j]
                out.append(mpmath.polyval(list(reversed(c)), zs[i]) / den)
            return out

        for _ in range(max_iter):
            w = corr(z)
            z = [zi - wi for zi, wi in zip(z, w)]
            if max(abs(x) for x in w) < eps * max(1, max(abs(x) for x in z)):
                break
        w = corr(z)
        # rounding slack on top of the inclusion radius
        slack = mpmath.mpf(10) ** (-(dps - 12)) * max(1, max(abs(x) for x in z))
        radii = [n * abs(wi) + slack for wi in w]
        return z, radii


def _disjoint(z, radii) -> bool:
    n = len(z)
    return all(abs(z[i] - z[j]) > radii[i] + radii[j] for i in range(n) for j in range(i))


def _classify_disk(zi, ri) -> ModulusClass | None:
    m = abs(zi)
    if m + ri < 1:
        return LT1
    if m - ri > 1:
        return GT1
    return None


def _locate(q: P.Poly, d_total: int, tol: float):
    """(value, radius, class, exact_label) for each root of q."""
    cyc = P.cyclotomic_indices(q, 2 * d_total * d_total)
    recip = P.pgcd(q, P.reciprocal(q))
    recip_c = [mpmath.mpf(x.numerator) / x.denominator for x in reversed(recip)]
    unit_roots = [(k, m) for m in cyc for k in range(1, m + 1) if math.gcd(k, m) == 1]
    dps = 40
    while True:
        z, radii = _weierstrass(q, dps)
        isolated = _disjoint(z, radii)
        results = []
        pending = not isolated or max(radii) > tol
        for zi, ri in zip(z, radii):
            cls, label = _classify_disk(zi, ri), None
            if cls is None:
                with mpmath.workdps(dps):
                    for k, m in unit_roots:
                        if abs(zi - mpmath.expjpi(mpmath.mpf(2 * k) / m)) < ri:
                            cls, label = EQ1, f"exp(2*pi*i*{k}/{m})"
                            break
            if cls is None:
                # |lambda| = 1 forces 1/lambda = conj(lambda) to be a root too,
                # so only roots of gcd(q, reciprocal q) can sit on the circle
                if P.deg(recip) > 0 and abs(mpmath.polyval(recip_c, zi)) < mpmath.mpf(10) ** (-dps // 2):
                    cls = UNCERTAIN
                else:
                    pending = True
            results.append((zi, ri, cls, label))
        if not pending or dps >= 640:
            break
        dps *= 2
    out = []
    for i, (zi, ri, cls, label) in enumerate(results):
        value = complex(zi)
        radius = float(ri + abs(zi - mpmath.mpc(value)))
        if isolated and abs(zi.imag) <= ri:
            # the mirror disk meets no other disk, so the root equals its conjugate
            mirror = mpmath.conj(zi)
            if all(abs(mirror - zj) > ri + rj for j, (zj, rj) in enumerate(zip(z, radii)) if j != i):
                value = complex(value.real, 0.0)
        if cls is None or not isolated:
            cls = UNCERTAIN if cls is None or not isolated else cls
        out.append((value, radius, cls, label))
    return out


def _diagonalizable(M: IntMatrix, p: P.Poly) -> str:
    rad = P.integer_coefficients(P.radical(p))
    if rad is None:
        return "unknown"
    return "yes" if CharPoly(tuple(reversed(rad))).at_matrix(M).is_zero() else "no"


def eigen_classify(M: IntMatrix, tol: float = DEFAULT_TOL) -> SpectralReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    cp = char_poly(M)
    p = cp.as_poly()
    d = cp.degree
    roots: list[EigenClass] = []
    for factor, mult in P.squarefree_decomposition(p):
        rest = factor
        for r in P.integer_roots(factor):
            rest = P.div_exact(rest, P.poly([-r, 1]))
            cls = LT1 if abs(r) < 1 else EQ1 if abs(r) == 1 else GT1
            roots.append(EigenClass(complex(r), 0.0, cls, mult, str(r)))
        if P.deg(rest) > 0:
            for value, radius, cls, label in _locate(rest, d, tol):
                roots.append(EigenClass(value, radius, cls, mult, label))
    roots.sort(key=lambda r: (-r.modulus, -r.value.real, -r.value.imag))
    return SpectralReport(cp, tuple(roots), _diagonalizable(M, p), tol)


# -- eigenvectors and invariant subspaces -------------------------------------

def nullspace_exact(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel over Q by Gauss-Jordan elimination."""
    A = [[Fraction(x) for x in r] for r in rows]
    if not A:
        return []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        lead = A[r][c]
        A[r] = [x / lead for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest integer multiple, first non-zero entry positive."""
    ints = P.content_free(list(reversed([Fraction(x) for x in v])))[::-1] if any(v) else [0] * len(v)
    ints = list(ints) + [0] * (len(v) - len(ints))
    first = next((x for x in ints if x), 1)
    return tuple(x if first > 0 else -x for x in ints)


def _shifted(M: IntMatrix, lam: Fraction) -> list[list[Fraction]]:
    return [[Fraction(M[i, j]) - (lam if i == j else 0) for j in range(M.dim)] for i in range(M.dim)]


def _matmul_q(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


def generalized_eigenspace_exact(M: IntMatrix, lam: Fraction, mult: int) -> list[tuple[int, ...]]:
    """ker (M - lam I)^mult as primitive integer vectors."""
    S = _shifted(M, Fraction(lam))
    A = S
    for _ in range(mult - 1):
        A = _matmul_q(A, S)
    return [primitive_integer(v) for v in nullspace_exact(A)]


def eigenvector(M: IntMatrix, eig: EigenClass, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvector scaled so its first non-zero component is 1."""
    if eig.multiplicity != 1:
        raise ValueError("eigenvector() needs a simple eigenvalue; use the invariant subspace path")
    d = M.dim
    if eig.is_rational:
        basis = generalized_eigenspace_exact(M, eig.rational_value, 1)
        x = np.array(basis[0], dtype=float)
    else:
        with mpmath.workdps(40):
            lam = mpmath.mpc(eig.value)
            A = mpmath.matrix([[M[i, j] - (lam if i == j else 0) for j in range(d)] for i in range(d)])
            _, _, V = mpmath.svd_c(A)
            x = np.array([complex(V[d - 1, j].conjugate()) for j in range(d)])
        if eig.is_real:
            x = x.real if np.abs(x.imag).max() < 1e-12 * np.abs(x).max() else x
    k = int(np.argmax(np.abs(x) > 1e-8 * np.abs(x).max()))
    x = x / x[k]
    Mf = np.array(M.tolist(), dtype=float)
    resid = np.linalg.norm(Mf @ x - eig.value * x)
    if resid > 10 * tol * np.linalg.norm(x):
        raise ArithmeticError(f"eigenvector residual {resid:.3g} exceeds tolerance")
    return x


@dataclass(frozen=True)
class NormalSpace:
    """Real invariant subspace of M^T for eigenvalues of modulus <= 1."""

    basis: tuple[np.ndarray, ...] = field(repr=False)
    exact_basis: tuple[tuple[int, ...], ...] | None
    uncertain: bool
    eigenvalues: tuple[EigenClass, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _orthonormal(vectors: Sequence[Sequence[float]]) -> list[np.ndarray]:
    if not vectors:
        return []
    Q, _ = np.linalg.qr(np.array(vectors, dtype=float).T)
    out = []
    for j in range(Q.shape[1]):
        q = Q[:, j]
        k = int(np.argmax(np.abs(q) > 1e-12))
        out.append(q if q[k] > 0 else -q)
    return out


def candidate_normal_space(M: IntMatrix, tol: float = DEFAULT_TOL,
                           report: SpectralReport | None = None) -> NormalSpace:
    """Vectors f orthogonal to every (generalized) eigenvector of M whose
    eigenvalue has modulus > 1; equivalently ker q(M^T) where q collects the
    eigenvalues of modulus <= 1."""
    report = report or eigen_classify(M, tol)
    small = [r for r in report.roots if r.modulus_class is not GT1]
    uncertain = any(r.modulus_class is UNCERTAIN for r in small)
    if not small:
        return NormalSpace((), (), uncertain, ())
    MT = M.T
    if all(r.is_rational for r in small):
        exact = []
        for r in small:
            exact.extend(generalized_eigenspace_exact(MT, r.rational_value, r.multiplicity))
        return NormalSpace(tuple(_orthonormal(exact)), tuple(exact), uncertain, tuple(small))
    d = M.dim
    k = sum(r.multiplicity for r in small)
    with mpmath.workdps(50):
        A = mpmath.matrix(MT.tolist())
        Q = mpmath.eye(d)
        for r in small:
            if r.is_rational:
                lam = mpmath.mpf(r.rational_value.numerator) / r.rational_value.denominator
            else:
                lam = mpmath.mpc(r.value)
            for _ in range(r.multiplicity):
                Q = Q * (A - lam * mpmath.eye(d))
        Q = Q / max(mpmath.mnorm(Q, 1), 1)
        _, _, V = mpmath.svd_c(Q)
        rows = [[V[i, j] for j in range(d)] for i in range(d - k, d)]
        # conjugate pairs make the kernel real; take real and imaginary parts
        vecs = []
        for row in rows:
            vecs.append([float(mpmath.re(x)) for x in row])
            vecs.append([float(mpmath.im(x)) for x in row])
    U, s, _ = np.linalg.svd(np.array(vecs).T, full_matrices=False)
    basis = _orthonormal(U[:, :k].T.tolist())
    return NormalSpace(tuple(basis), None, uncertain, tuple(small))


def integer_direction(v: Sequence[float], max_denominator: int = 1000,
                      tol: float = 1e-10) -> tuple[int, ...] | None:
    """Primitive integer vector parallel to v, if one with small entries exists."""
    v = np.asarray(v, dtype=float)
    k = int(np.argmax(np.abs(v)))
    if v[k] == 0:
        return None
    ratios = [Fraction(float(x / v[k])).limit_denominator(max_denominator) for x in v]
    cand = primitive_integer(ratios)
    c = np.array(cand, dtype=float)
    c, u = c / np.linalg.norm(c), v / np.linalg.norm(v)
    return cand if min(np.linalg.norm(c - u), np.linalg.norm(c + u)) < tol else None

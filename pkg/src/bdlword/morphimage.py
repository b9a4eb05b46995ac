"""Images of bi-infinite words under morphisms and transport of BDL normals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fixedpoint import FixedPointWindow, ParikhPath, Window, generate_window
from .spectral import DEFAULT_TOL, GT1, eigen_classify, eigenvector
from .substitution import IntMatrix, Morphism, SeedPair, Substitution
from .wordcore import AlphabetError, FiniteWord, ParikhVector, parikh


@dataclass(frozen=True)
class ImageWindow(Window):
    """phi(u) around the delimiter, which sits just before phi(u_0).

    ``starts[n + source.n_left]`` is the image position where phi(u_n)
    begins, for n in [-n_left, n_right] of the source window.
    """

    source: Window = field(default=None, compare=False, repr=False)
    morphism: Morphism = field(default=None, compare=False, repr=False)
    starts: np.ndarray = field(default=None, compare=False, repr=False)

    def block_decomposition(self, m: int) -> tuple[int, str]:
        """(n, v) with Psi_m(phi(u)) = M_phi Psi_n(u) + Psi(v) and v a proper
        prefix of phi(u_n)."""
        if not (-self.n_left <= m < self.n_right):
            raise IndexError(f"position {m} outside image window")
        off = self.source.n_left
        # largest n with start_n <= m; erased letters share a start with their successor
        k = int(np.searchsorted(self.starts, m, side="right")) - 1
        n = k - off
        v = self.factor(int(self.starts[k]), m).letters
        return n, v


def image_window(phi: Morphism, w: Window) -> ImageWindow:
    if w.alphabet != phi.source:
        raise AlphabetError("window is not over the morphism's source alphabet")
    left = phi.apply_str(w.left)
    right = phi.apply_str(w.right)
    lens = np.array([len(img) for img in phi.rules], dtype=np.int64)
    idx = phi.source.index
    lc = np.array([lens[idx[a]] for a in w.left], dtype=np.int64)
    rc = np.array([lens[idx[a]] for a in w.right], dtype=np.int64)
    starts = np.concatenate([-np.cumsum(lc[::-1])[::-1], [0], np.cumsum(rc)])
    return ImageWindow(phi.target, left, right, source=w, morphism=phi, starts=starts)


def image_of_fixed_point(phi: Morphism, s: Substitution, seed: SeedPair | None,
                         n_left: int, n_right: int) -> ImageWindow:
    """Image window with at least n_left / n_right letters on each side."""
    size_l, size_r = max(n_left, 1), max(n_right, 1)
    for _ in range(64):
        img = image_window(phi, generate_window(s, seed, size_l, size_r))
        if img.n_left >= n_left and img.n_right >= n_right:
            return img
        if img.n_left < n_left:
            size_l *= 2
        if img.n_right < n_right:
            size_r *= 2
    raise ValueError("morphism erases (almost) everything; image window cannot be filled")


# -- transported hyperplanes -----------------------------------------------------

@dataclass(frozen=True)
class Hyperplane:
    basis: tuple[np.ndarray, ...]
    normal: np.ndarray


def _as_float(M) -> np.ndarray:
    return np.array(M.tolist() if isinstance(M, IntMatrix) else M, dtype=float)


def transported_hyperplane(M_phi: IntMatrix | np.ndarray, H_basis: Sequence[Sequence[float]],
                           target_dim: int | None = None, tol: float = DEFAULT_TOL) -> Hyperplane:
    """A hyperplane of the target space containing M_phi H.

    The span of M_phi H is completed by Gram-Schmidt against e_0, e_1, ...
    in order until it has dimension target_dim - 1.
    """
    A = _as_float(M_phi)
    if target_dim is None:
        target_dim = A.shape[0]
    images = [A @ np.asarray(h, dtype=float) for h in H_basis]
    basis: list[np.ndarray] = []

    def push(v):
        for b in basis:
            v = v - (b @ v) * b
        nv = np.linalg.norm(v)
        if nv > tol * max(1.0, scale):
            basis.append(v / nv)
            return True
        return False

    scale = max((np.linalg.norm(v) for v in images), default=1.0)
    for v in images:
        push(v)
    if len(basis) >= target_dim:
        raise ValueError("M_phi H spans the whole target space; no hyperplane contains it "
                         "(needs #target alphabet >= #source alphabet)")
    scale = 1.0
    for j in range(target_dim):
        if len(basis) == target_dim - 1:
            break
        push(np.eye(target_dim)[j])
    normal = None
    for j in range(target_dim):
        v = np.eye(target_dim)[j]
        for b in basis:
            v = v - (b @ v) * b
        if np.linalg.norm(v) > 1e-6:
            normal = v / np.linalg.norm(v)
            break
    return Hyperplane(tuple(basis), normal)


def hyperplane_basis(normal: Sequence[float]) -> list[np.ndarray]:
    """Orthonormal basis of the hyperplane orthogonal to ``normal``."""
    f = np.asarray(normal, dtype=float)
    f = f / np.linalg.norm(f)
    _, _, Vt = np.linalg.svd(f[None, :])
    return [Vt[i] for i in range(1, len(f))]


# -- constraints on image normals ------------------------------------------------

@dataclass(frozen=True)
class NormalConstraintSystem:
    rows: np.ndarray  # real constraint rows; f must satisfy rows @ f = 0
    eigenvalues: tuple[complex, ...]
    coefficients: tuple[complex, ...]  # s_i: coordinate of e_first along each eigenvector
    singular_values: np.ndarray
    rank: int
    null_space: tuple[np.ndarray, ...]

    @property
    def only_zero(self) -> bool:
        return len(self.null_space) == 0


def image_normal_constraints(M_phi: IntMatrix, M_psi: IntMatrix, tol: float = DEFAULT_TOL,
                             letter: int = 0) -> NormalConstraintSystem:
    """Conditions on f for f . Psi(phi(psi^n(a))) to stay bounded.

    With M_psi = R diag(lambda) R^-1 this quantity is
    sum_i (f . M_phi r_i) s_i lambda_i^n, where r_i are the eigenvectors and
    s_i = (R^-1)[i, a]. Every |lambda_i| > 1 with s_i != 0 forces
    f . M_phi r_i = 0.
    """
    spec = eigen_classify(M_psi, tol)
    if any(r.multiplicity > 1 for r in spec.roots):
        raise ValueError("repeated eigenvalues are not supported here")
    d = M_psi.dim
    eigs = list(spec.roots)
    R = np.column_stack([eigenvector(M_psi, e, tol).astype(complex) for e in eigs])
    S = np.linalg.inv(R)
    A = _as_float(M_phi)
    rows, lams, coefs = [], [], []
    for i, e in enumerate(eigs):
        if e.modulus_class is not GT1:
            continue
        s_i = S[i, letter]
        if abs(s_i) <= 1e-12:
            continue
        r = A @ R[:, i]
        rows.append(r.real)
        if np.abs(r.imag).max() > 0:
            rows.append(r.imag)
        lams.append(e.value)
        coefs.append(complex(s_i))
    n_target = A.shape[0]
    if not rows:
        return NormalConstraintSystem(np.zeros((0, n_target)), (), (), np.zeros(0), 0,
                                      tuple(np.eye(n_target)))
    C = np.array(rows)
    # rows are scaled so the rank threshold is relative
    C = C / np.linalg.norm(C, axis=1, keepdims=True)
    _, sv, Vt = np.linalg.svd(C)
    rank = int(np.sum(sv > tol * max(1.0, sv.max())))
    null = tuple(Vt[rank:])
    return NormalConstraintSystem(C, tuple(lams), tuple(coefs), sv, rank, null)


def parikh_transport_holds(phi: Morphism, w: FiniteWord) -> bool:
    """Psi(phi(w)) == M_phi Psi(w)."""
    return parikh(phi(w)) == phi.incidence @ parikh(w)

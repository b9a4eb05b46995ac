"""Finite windows of bi-infinite fixed points and their Parikh paths.

A window holds ``left = u[-n_left:0)`` and ``right = u[0:n_right)``; public
indexing follows n in Z with the delimiter between positions -1 and 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .substitution import SeedPair, SpecError, Substitution, default_seed
from .wordcore import Alphabet, AlphabetError, FiniteWord, ParikhVector


@dataclass(frozen=True)
class Window:
    """Letters around the delimiter of a bi-infinite word."""

    alphabet: Alphabet
    left: str
    right: str

    def __post_init__(self):
        self.alphabet.check(self.left)
        self.alphabet.check(self.right)

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "Window":
        """Parse ``'CBCBCB|CBACC'``."""
        if text.count("|") != 1:
            raise AlphabetError("window text needs exactly one '|' delimiter")
        left, right = text.split("|")
        return cls(alphabet, left, right)

    @property
    def n_left(self) -> int:
        return len(self.left)

    @property
    def n_right(self) -> int:
        return len(self.right)

    def __len__(self) -> int:
        return len(self.left) + len(self.right)

    def letter(self, n: int) -> str:
        if 0 <= n < len(self.right):
            return self.right[n]
        if -len(self.left) <= n < 0:
            return self.left[n]
        raise IndexError(f"position {n} outside window [{-self.n_left}, {self.n_right})")

    def factor(self, i: int, j: int) -> FiniteWord:
        """u[i, j) for -n_left <= i <= j <= n_right."""
        if not (-self.n_left <= i <= j <= self.n_right):
            raise IndexError(f"factor [{i}, {j}) outside window")
        text = self.left + self.right
        off = self.n_left
        return FiniteWord(self.alphabet, text[i + off:j + off])

    def dump(self) -> str:
        return f"{self.left}|{self.right}"

    def __str__(self) -> str:
        return self.dump()


@dataclass(frozen=True)
class FixedPointWindow(Window):
    substitution: Substitution = field(default=None, compare=False)
    seed: SeedPair = field(default=None, compare=False)


def _seed_power(s: Substitution, seed: SeedPair) -> Substitution:
    if seed.power < 1:
        raise SpecError("seed power must be >= 1")
    for x in (seed.a, seed.b):
        if x not in s.alphabet:
            raise SpecError(f"seed letter {x!r} not in alphabet")
    sk = s.power(seed.power)
    ia, ib = sk.image(seed.a), sk.image(seed.b)
    if len(ia) < 2 or ia[0] != seed.a or ia[1:] != seed.w:
        raise SpecError(f"seed {seed}: psi^{seed.power}({seed.a}) = {ia!r} does not start with {seed.a!r}")
    if len(ib) < 2 or ib[-1] != seed.b or ib[:-1] != seed.v:
        raise SpecError(f"seed {seed}: psi^{seed.power}({seed.b}) = {ib!r} does not end with {seed.b!r}")
    return sk


def _grow_right(sk: Substitution, start: str, block: str, n: int) -> str:
    parts = [start]
    have = len(start)
    while have < n:
        need = n - have
        if len(block) >= need:
            parts.append(block[:need])
            break
        parts.append(block)
        have += len(block)
        # images are non-empty, so a prefix of `need` letters maps onto >= need letters
        block = sk.apply_str(block[:n - have])
    return "".join(parts)[:n]


def _grow_left(sk: Substitution, end: str, block: str, n: int) -> str:
    parts = [end]
    have = len(end)
    while have < n:
        need = n - have
        if len(block) >= need:
            parts.append(block[-need:])
            break
        parts.append(block)
        have += len(block)
        block = sk.apply_str(block[-(n - have):])
    text = "".join(reversed(parts))
    return text[len(text) - n:] if n else ""


def generate_window(s: Substitution, seed: SeedPair | None = None,
                    n_left: int = 0, n_right: int = 0) -> FixedPointWindow:
    """Letters u[-n_left, n_right) of the fixed point
    ... psi^2k(v) psi^k(v) v b | a w psi^k(w) psi^2k(w) ...
    """
    if n_left < 0 or n_right < 0:
        raise ValueError("window sizes must be non-negative")
    if seed is None:
        seed = default_seed(s)
    sk = _seed_power(s, seed)
    right = _grow_right(sk, seed.a, seed.w, n_right)
    left = _grow_left(sk, seed.b, seed.v, n_left)
    return FixedPointWindow(s.alphabet, left, right, substitution=s, seed=seed)


def is_prefix_of_fixed_point(s: Substitution, seed: SeedPair | None, p: FiniteWord | str) -> bool:
    text = p.letters if isinstance(p, FiniteWord) else p
    if not text:
        return True
    return generate_window(s, seed, 0, len(text)).right == text


def letter_codes(alphabet: Alphabet, letters: str) -> np.ndarray:
    """Letter indices of a string as an int array."""
    if not letters:
        return np.zeros(0, dtype=np.int64)
    cps = np.frombuffer(letters.encode("utf-32-le"), dtype=np.uint32)
    keys = np.array([ord(a) for a in alphabet.letters], dtype=np.uint32)
    order = np.argsort(keys)
    pos = np.searchsorted(keys[order], cps)
    pos = np.clip(pos, 0, len(keys) - 1)
    if np.any(keys[order][pos] != cps):
        raise AlphabetError("letters outside alphabet")
    return order[pos].astype(np.int64)


@dataclass(frozen=True)
class ParikhPath:
    """Signed prefix Parikh vectors for n in [-n_left, n_right].

    ``vectors[n + n_left]`` is the count vector of n; entries are exact int64
    (they are bounded by the window length).
    """

    alphabet: Alphabet
    n_left: int
    n_right: int
    vectors: np.ndarray = field(repr=False)
    codes: np.ndarray = field(repr=False)  # letter index of u_n, n in [-n_left, n_right)

    @property
    def d(self) -> int:
        return self.alphabet.d

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.n_left, self.n_right + 1)

    def __len__(self) -> int:
        return self.n_left + self.n_right + 1

    def at(self, n: int) -> ParikhVector:
        if not (-self.n_left <= n <= self.n_right):
            raise IndexError(f"n={n} outside path range")
        return ParikhVector(int(c) for c in self.vectors[n + self.n_left])

    def letter_index(self, n: int) -> int:
        return int(self.codes[n + self.n_left])

    def functional(self, f) -> np.ndarray:
        """f . Psi_n for every n; exact int64 when ``f`` is integral."""
        f = np.asarray(f)
        if f.shape != (self.d,):
            raise ValueError(f"functional must have {self.d} components")
        if f.dtype.kind in "iu":
            bound = int(np.abs(f).max(initial=0)) * max(self.n_left, self.n_right) * self.d
            if bound >= 2 ** 62:
                obj = self.vectors.astype(object) @ f.astype(object)
                return obj
            return self.vectors @ f.astype(np.int64)
        return self.vectors.astype(np.float64) @ f.astype(np.float64)


def parikh_path(window: Window) -> ParikhPath:
    d = window.alphabet.d
    eye = np.eye(d, dtype=np.int64)
    rc = letter_codes(window.alphabet, window.right)
    lc = letter_codes(window.alphabet, window.left)
    pos = np.cumsum(eye[rc], axis=0) if len(rc) else np.zeros((0, d), np.int64)
    # Psi_{-m} = -Psi(u[-m, 0)), accumulated from the delimiter outward
    neg = -np.cumsum(eye[lc[::-1]], axis=0) if len(lc) else np.zeros((0, d), np.int64)
    vectors = np.concatenate([neg[::-1], np.zeros((1, d), np.int64), pos])
    codes = np.concatenate([lc, rc])
    return ParikhPath(window.alphabet, len(lc), len(rc), vectors, codes)

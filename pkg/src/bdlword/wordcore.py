"""Alphabets, finite words and Parikh vectors.

Words are stored as Python strings of single-character letters; counts are
plain Python ints so they never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class AlphabetError(ValueError):
    """Raised when letters or words do not fit the declared alphabet."""


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise AlphabetError("alphabet must contain at least one letter")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise AlphabetError(f"letters must be single characters, got {a!r}")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"duplicate letters in {letters!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "index", {a: i for i, a in enumerate(letters)})

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, a) -> bool:
        return a in self.index

    @property
    def d(self) -> int:
        return len(self.letters)

    def word(self, letters: str = "") -> "FiniteWord":
        return FiniteWord(self, letters)

    def check(self, letters: str) -> None:
        bad = set(letters) - self.index.keys()
        if bad:
            raise AlphabetError(
                f"symbols {sorted(bad)!r} are not in alphabet {''.join(self.letters)!r}")

    def unit(self, a: str) -> "ParikhVector":
        counts = [0] * self.d
        counts[self.index[a]] = 1
        return ParikhVector(counts)


@dataclass(frozen=True)
class FiniteWord:
    alphabet: Alphabet
    letters: str = ""

    def __post_init__(self):
        if not isinstance(self.letters, str):
            object.__setattr__(self, "letters", "".join(self.letters))
        self.alphabet.check(self.letters)

    @classmethod
    def from_symbols(cls, alphabet: Alphabet, symbols: Sequence[int]) -> "FiniteWord":
        return cls(alphabet, "".join(alphabet.letters[i] for i in symbols))

    @property
    def symbols(self) -> tuple[int, ...]:
        idx = self.alphabet.index
        return tuple(idx[a] for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        return concat(self, other)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return FiniteWord(self.alphabet, self.letters[item])
        return self.letters[item]

    def count(self, a: str) -> int:
        return self.letters.count(a)


@dataclass(frozen=True)
class ParikhVector:
    """Letter counts. Signed prefix vectors may carry negative entries."""

    counts: tuple[int, ...]

    def __init__(self, counts: Iterable[int]):
        object.__setattr__(self, "counts", tuple(int(c) for c in counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def _other(self, other) -> tuple[int, ...]:
        o = other.counts if isinstance(other, ParikhVector) else tuple(other)
        if len(o) != len(self.counts):
            raise AlphabetError("Parikh vectors of different dimension")
        return o

    def __add__(self, other) -> "ParikhVector":
        return ParikhVector(a + b for a, b in zip(self.counts, self._other(other)))

    def __sub__(self, other) -> "ParikhVector":
        return ParikhVector(a - b for a, b in zip(self.counts, self._other(other)))

    def __neg__(self) -> "ParikhVector":
        return ParikhVector(-a for a in self.counts)

    def __mul__(self, k: int) -> "ParikhVector":
        return ParikhVector(k * a for a in self.counts)

    __rmul__ = __mul__

    def total(self) -> int:
        return sum(self.counts)

    def dot(self, f: Sequence):
        """Pair with a linear functional; exact when ``f`` is exact."""
        if len(f) != len(self.counts):
            raise AlphabetError("functional has wrong dimension")
        return sum(fa * c for fa, c in zip(f, self.counts))

    @classmethod
    def zero(cls, d: int) -> "ParikhVector":
        return cls([0] * d)


def parikh(w: FiniteWord) -> ParikhVector:
    return ParikhVector(w.letters.count(a) for a in w.alphabet.letters)


def concat(u: FiniteWord, v: FiniteWord) -> FiniteWord:
    if u.alphabet != v.alphabet:
        raise AlphabetError("cannot concatenate words over different alphabets")
    return FiniteWord(u.alphabet, u.letters + v.letters)

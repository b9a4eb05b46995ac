"""Morphisms, substitutions and their incidence matrices."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .wordcore import Alphabet, AlphabetError, FiniteWord, ParikhVector


class SpecError(ValueError):
    """Invalid substitution or morphism description."""


@dataclass(frozen=True)
class IntMatrix:
    """Square or rectangular matrix of exact Python integers."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, d: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "IntMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def dim(self) -> int:
        n, m = self.shape
        if n != m:
            raise ValueError("matrix is not square")
        return n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.shape[1] != other.shape[0]:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        vec = tuple(other)
        if len(vec) != self.shape[1]:
            raise ValueError("shape mismatch")
        out = [sum(a * b for a, b in zip(r, vec)) for r in self.rows]
        return ParikhVector(out) if isinstance(other, ParikhVector) else out

    def __pow__(self, n: int) -> "IntMatrix":
        if n < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_positive(self) -> bool:
        return all(a > 0 for r in self.rows for a in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        width = max((len(str(a)) for r in self.rows for a in r), default=1)
        return "\n".join(" ".join(str(a).rjust(width) for a in r) for r in self.rows)


@dataclass(frozen=True)
class Morphism:
    source: Alphabet
    target: Alphabet
    rules: tuple[str, ...]  # image of source.letters[i]

    def __init__(self, source: Alphabet, target: Alphabet, rules: Mapping[str, str] | Sequence[str]):
        if isinstance(rules, Mapping):
            missing = [a for a in source.letters if a not in rules]
            extra = [a for a in rules if a not in source]
            if missing:
                raise SpecError(f"no rule for letters {missing!r}")
            if extra:
                raise SpecError(f"rules for unknown letters {extra!r}")
            images = tuple(rules[a] for a in source.letters)
        else:
            images = tuple(rules)
            if len(images) != source.d:
                raise SpecError("one rule per source letter required")
        for img in images:
            try:
                target.check(img)
            except AlphabetError as exc:
                raise SpecError(str(exc)) from None
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "rules", images)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet, alphabet.letters)

    def image(self, a: str) -> str:
        return self.rules[self.source.index[a]]

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.source.letters, self.rules))

    @cached_property
    def _table(self) -> dict:
        return str.maketrans(self.as_dict())

    def apply_str(self, letters: str) -> str:
        """Image of a raw letter string (no alphabet check)."""
        return letters.translate(self._table)

    def __call__(self, w: FiniteWord) -> FiniteWord:
        return apply(self, w)

    @property
    def is_erasing(self) -> bool:
        return any(img == "" for img in self.rules)

    @cached_property
    def incidence(self) -> IntMatrix:
        return incidence_matrix(self)


class Substitution(Morphism):
    """Non-erasing endomorphism of a single alphabet."""

    def __init__(self, alphabet: Alphabet, rules: Mapping[str, str] | Sequence[str]):
        super().__init__(alphabet, alphabet, rules)
        empty = [a for a, img in zip(alphabet.letters, self.rules) if not img]
        if empty:
            raise SpecError(f"erasing rules for {empty!r}; a substitution must be non-erasing")

    @classmethod
    def from_rules(cls, rules: Mapping[str, str], letters: Sequence[str] | None = None) -> "Substitution":
        return cls(Alphabet(letters if letters is not None else list(rules)), rules)

    @property
    def alphabet(self) -> Alphabet:
        return self.source

    @property
    def d(self) -> int:
        return self.source.d

    def power(self, k: int) -> "Substitution":
        if k < 1:
            raise ValueError("power must be >= 1")
        images = list(self.source.letters)
        for _ in range(k):
            images = [self.apply_str(img) for img in images]
        return Substitution(self.source, images)

    def iterate(self, word: str, n: int) -> str:
        for _ in range(n):
            word = self.apply_str(word)
        return word

    def __repr__(self) -> str:
        body = ", ".join(f"{a}->{img}" for a, img in zip(self.source.letters, self.rules))
        return f"Substitution({body})"


@dataclass(frozen=True)
class SeedPair:
    """Letters ``a``, ``b`` with psi^power(a) = a.w and psi^power(b) = v.b."""

    power: int
    a: str
    b: str
    v: str
    w: str

    def __str__(self) -> str:
        return f"(k={self.power}, a={self.a}, b={self.b})"


def apply(m: Morphism, w: FiniteWord) -> FiniteWord:
    if w.alphabet != m.source:
        raise AlphabetError("word is not over the morphism's source alphabet")
    return FiniteWord(m.target, m.apply_str(w.letters))


def incidence_matrix(m: Morphism) -> IntMatrix:
    return IntMatrix([[img.count(b) for img in m.rules] for b in m.target.letters])


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """outer o inner, i.e. a -> outer(inner(a))."""
    if inner.target != outer.source:
        raise AlphabetError("inner target alphabet differs from outer source alphabet")
    images = [outer.apply_str(img) for img in inner.rules]
    if inner.source == outer.target and all(images):
        return Substitution(inner.source, images)
    return Morphism(inner.source, outer.target, images)


def is_primitive(M: IntMatrix) -> bool:
    """Wielandt: a primitive d x d matrix has M^((d-1)^2+1) > 0."""
    d = M.dim
    if any(a < 0 for r in M.rows for a in r):
        raise ValueError("matrix must be non-negative")
    # only the zero pattern matters; clamp to 0/1 to keep entries small
    B = IntMatrix([[int(a > 0) for a in r] for r in M.rows])
    P = B
    for _ in range((d - 1) ** 2):
        P = IntMatrix([[int(a > 0) for a in r] for r in (P @ B).rows])
    return P.is_positive()


def find_seed_pairs(s: Substitution, max_power: int | None = None) -> list[SeedPair]:
    if max_power is None:
        max_power = 2 * s.d
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    out = []
    images = list(s.source.letters)
    for k in range(1, max_power + 1):
        images = [s.apply_str(img) for img in images]
        starts = [(a, img) for a, img in zip(s.source.letters, images)
                  if len(img) >= 2 and img[0] == a]
        ends = [(b, img) for b, img in zip(s.source.letters, images)
                if len(img) >= 2 and img[-1] == b]
        for a, ia in starts:
            for b, ib in ends:
                out.append(SeedPair(k, a, b, v=ib[:-1], w=ia[1:]))
    return out


def default_seed(s: Substitution, max_power: int | None = None) -> SeedPair:
    seeds = find_seed_pairs(s, max_power)
    if not seeds:
        raise SpecError(f"no seed pair found up to power {max_power or 2 * s.d}")
    return seeds[0]


def check_primitive(s: Morphism) -> bool:
    ok = is_primitive(s.incidence)
    if not ok:
        warnings.warn(f"{s!r} is not primitive", stacklevel=2)
    return ok


# -- JSON descriptions -------------------------------------------------------

def _letters(obj, key: str) -> Alphabet:
    if key not in obj:
        raise SpecError(f"missing field {key!r}")
    raw = obj[key]
    if isinstance(raw, str):
        raw = list(raw)
    if not isinstance(raw, list):
        raise SpecError(f"field {key!r} must be a list of letters")
    try:
        return Alphabet(raw)
    except AlphabetError as exc:
        raise SpecError(f"field {key!r}: {exc}") from None


def _rules(obj) -> dict[str, str]:
    rules = obj.get("rules")
    if not isinstance(rules, dict):
        raise SpecError("field 'rules' must be an object mapping letters to strings")
    for a, img in rules.items():
        if not isinstance(img, str):
            raise SpecError(f"rules[{a!r}] must be a string")
    return rules


def substitution_from_dict(obj) -> Substitution:
    if not isinstance(obj, dict):
        raise SpecError("top-level JSON value must be an object")
    alphabet = _letters(obj, "alphabet")
    rules = _rules(obj)
    for a, img in rules.items():
        if img == "":
            raise SpecError(f"rules[{a!r}]: empty image; substitutions must be non-erasing")
    return Substitution(alphabet, rules)


def morphism_from_dict(obj) -> Morphism:
    if not isinstance(obj, dict):
        raise SpecError("top-level JSON value must be an object")
    if "source_alphabet" in obj:
        source = _letters(obj, "source_alphabet")
        target = _letters(obj, "target_alphabet")
    else:
        source = target = _letters(obj, "alphabet")
    return Morphism(source, target, _rules(obj))


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_substitution(text: str) -> Substitution:
    return substitution_from_dict(_load(text))


def parse_morphism(text: str) -> Morphism:
    return morphism_from_dict(_load(text))


def substitution_to_dict(s: Substitution) -> dict:
    return {"alphabet": list(s.source.letters), "rules": s.as_dict()}


def morphism_to_dict(m: Morphism) -> dict:
    return {"source_alphabet": list(m.source.letters),
            "target_alphabet": list(m.target.letters),
            "rules": m.as_dict()}

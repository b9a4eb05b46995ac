"""Dense univariate polynomials over Q.

A polynomial is a list of ``Fraction`` coefficients, lowest degree first,
with no trailing zeros; ``[]`` is the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

Poly = list  # list[Fraction]


def poly(coeffs: Sequence) -> Poly:
    return trim([Fraction(c) for c in coeffs])


def from_high(coeffs: Sequence) -> Poly:
    return poly(list(coeffs)[::-1])


def to_high(p: Poly) -> list:
    return list(p[::-1])


def trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: Poly) -> int:
    return len(p) - 1


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lc = p[-1]
    return [c / lc for c in p]


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lc = q[-1]
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        c = r[-1] / lc
        quot[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = trim(r)
    return trim(quot), r


def div_exact(p: Poly, q: Poly) -> Poly:
    quot, rem = divmod_(p, q)
    if rem:
        raise ArithmeticError("division is not exact")
    return quot


def pgcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def derivative(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic p = prod a_i**i with a_i squarefree, coprime."""
    p = monic(p)
    out = []
    if deg(p) < 1:
        return out
    dp = derivative(p)
    a = pgcd(p, dp)
    b = div_exact(p, a)
    c = div_exact(dp, a)
    dd = sub(c, derivative(b))
    i = 1
    while deg(b) > 0:
        a = pgcd(b, dd)
        if deg(a) > 0:
            out.append((a, i))
        b = div_exact(b, a)
        c = div_exact(dd, a)
        dd = sub(c, derivative(b))
        i += 1
    return out


def radical(p: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of p."""
    return div_exact(monic(p), pgcd(p, derivative(p)))


def reciprocal(p: Poly) -> Poly:
    """x^deg(p) p(1/x)."""
    return trim(list(reversed(p)))


def integer_coefficients(p: Poly) -> list[int] | None:
    if all(c.denominator == 1 for c in p):
        return [int(c) for c in p]
    return None


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def integer_roots(p: Poly, candidates: Sequence[int] | None = None) -> list[int]:
    """Integer roots of a monic integer polynomial (each listed once)."""
    roots = []
    if not p:
        raise ValueError("zero polynomial")
    if p[0] == 0:
        roots.append(0)
        while p and p[0] == 0:
            p = p[1:]
    if deg(p) < 1:
        return roots
    c0 = p[0]
    if c0.denominator != 1:
        return roots
    if candidates is None:
        cands = _divisors(int(c0))
        cands = [s * k for k in cands for s in (1, -1)]
    else:
        cands = [r for r in candidates if r != 0 and int(c0) % r == 0]
    for r in cands:
        if evaluate(p, r) == 0 and r not in roots:
            roots.append(r)
    return roots


_cyclotomic_cache: dict[int, Poly] = {}


def cyclotomic(m: int) -> Poly:
    """m-th cyclotomic polynomial, via x^m - 1 = prod_{k | m} Phi_k."""
    if m < 1:
        raise ValueError("index must be >= 1")
    if m not in _cyclotomic_cache:
        q = poly([-1] + [0] * (m - 1) + [1])
        for k in range(1, m):
            if m % k == 0:
                q = div_exact(q, cyclotomic(k))
        _cyclotomic_cache[m] = q
    return _cyclotomic_cache[m]


def cyclotomic_indices(p: Poly, max_index: int) -> list[int]:
    """All m <= max_index with Phi_m dividing p."""
    out = []
    for m in range(1, max_index + 1):
        c = cyclotomic(m)
        if deg(c) > deg(p):
            continue
        if not divmod_(p, c)[1]:
            out.append(m)
    return out


def content_free(p: Poly) -> list[int]:
    """Primitive integer multiple of p (positive leading coefficient)."""
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def to_str(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            coef = "" if a == 1 else f"{a}*"
            body = coef + (var if i == 1 else f"{var}^{i}")
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out

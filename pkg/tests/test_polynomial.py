from fractions import Fraction

from hypothesis import given, strategies as st

from bdlword import polynomial as P

small = st.lists(st.integers(-6, 6), min_size=1, max_size=5).map(P.poly)


@given(small, small)
def test_divmod_reconstructs(a, b):
    if P.deg(b) < 0:
        return
    q, r = P.divmod_(a, b)
    assert P.add(P.mul(q, b), r) == P.trim(a)
    assert P.deg(r) < P.deg(b)


@given(small, small)
def test_gcd_divides(a, b):
    g = P.pgcd(a, b)
    if P.deg(g) < 0:
        return
    for p in (a, b):
        assert P.deg(P.divmod_(p, g)[1]) < 0


def test_integer_roots():
    p = P.from_high([1, -3, -10, -6])
    assert P.integer_roots(p) == [-1]
    assert sorted(P.integer_roots(P.from_high([1, 0, -4]))) == [-2, 2]
    assert P.integer_roots(P.from_high([1, 0, 1])) == []


def test_evaluate_and_derivative():
    p = P.from_high([2, 0, -1])
    assert P.evaluate(p, Fraction(1, 2)) == Fraction(-1, 2)
    assert P.derivative(p) == P.poly([0, 4])


def test_cyclotomic():
    assert P.cyclotomic(1) == P.poly([-1, 1])
    assert P.cyclotomic(3) == P.poly([1, 1, 1])
    assert P.cyclotomic(6) == P.poly([1, -1, 1])


def test_radical_and_reciprocal():
    x1 = P.poly([-1, 1])
    assert P.radical(P.mul(x1, P.mul(x1, x1))) == x1
    assert P.reciprocal(P.from_high([1, -3, 2])) == P.from_high([2, -3, 1])

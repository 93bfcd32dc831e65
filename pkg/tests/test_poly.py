from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.poly import DualPoly, DualRing, POLY_RING, Poly


def test_poly_arithmetic():
    x, y = Poly.var("x"), Poly.var("y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (p - p).is_zero()
    assert Poly.const(0).is_zero()
    assert (x * 0).is_zero()


def test_poly_subst():
    x, y = Poly.var("x"), Poly.var("y")
    p = x * x + y
    assert p.subst({"x": y}) == y * y + y
    assert p.subst({"y": Poly.const(1)}) == x * x + 1


def test_poly_const_part_and_coeff():
    x = Poly.var("x")
    p = x * 3 + Fraction(1, 2)
    assert p.const_part() == Fraction(1, 2)
    assert p.coeff((("x", 1),)) == 3


def test_dual_square_zero():
    ring = DualRing(POLY_RING)
    t = DualPoly(POLY_RING.zero, POLY_RING.one)
    assert (t * t) == ring.zero
    a = DualPoly(Poly.var("x"), Poly.const(1))
    b = DualPoly(Poly.const(2), Poly.var("x"))
    prod = a * b
    assert prod.a0 == Poly.var("x") * 2
    assert prod.a1 == Poly.var("x") * Poly.var("x") + 2


def test_dual_inverse():
    ring = DualRing(POLY_RING)
    a = DualPoly(Poly.const(2), Poly.var("x"))
    inv = ring.inv(a)
    assert (a * inv) == ring.one


poly_strategy = st.lists(
    st.tuples(st.sampled_from(["x", "y", "z"]), st.integers(1, 3),
              st.fractions(min_value=-3, max_value=3, max_denominator=4)),
    max_size=4,
)


def _mk(terms):
    p = Poly.const(0)
    for v, e, c in terms:
        mono = Poly.const(c)
        for _ in range(e):
            mono = mono * Poly.var(v)
        p = p + mono
    return p


@settings(max_examples=40, deadline=None)
@given(poly_strategy, poly_strategy, poly_strategy)
def test_poly_ring_axioms(t1, t2, t3):
    a, b, c = _mk(t1), _mk(t2), _mk(t3)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a

import random
from fractions import Fraction

import pytest

from hopfcyclic.errors import NotUnipotent, SingularLinearPart, TruncationOverflow
from hopfcyclic.jets import (
    AffineMap,
    Jet,
    affine_apply,
    alpha_var,
    compose,
    generator_action_table,
    infinitesimal_action,
    invert,
    kac_factorize,
    right_action,
    symbolic_njet,
)
from hopfcyclic.poly import Poly


def jet1(coeffs, order):
    """1-d jet from {degree: coefficient}, monomial normalization."""
    j = Jet(1, order)
    for d, c in coeffs.items():
        j.set_coeff(1, (1,) * d, c)
    return j


def random_jet(rng, n, order, unipotent=False):
    j = Jet.identity(n, order)
    from hopfcyclic.jets import monomials_upto

    for i in range(1, n + 1):
        for m in monomials_upto(n, order, min_deg=2):
            j.set_coeff(i, m, Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        if not unipotent:
            for k in range(1, n + 1):
                j.set_coeff(i, (k,), (1 if i == k else 0) + Fraction(rng.randint(-1, 1), 2))
    return j


def test_compose_identity():
    psi = jet1({1: 1, 2: Fraction(1, 2)}, 3)
    ident = Jet.identity(1, 3)
    assert compose(ident, psi) == psi
    assert compose(psi, ident) == psi


def test_compose_cubic_example():
    f = jet1({1: 1, 2: 1}, 3)  # x + x^2
    g = jet1({1: 1, 3: 1}, 3)  # x + x^3
    assert compose(f, g) == jet1({1: 1, 2: 1, 3: 1}, 3)


def test_compose_rational_example():
    a = Fraction(2, 3)
    f = jet1({1: 1, 2: a}, 3)
    assert compose(f, f) == jet1({1: 1, 2: 2 * a, 3: 2 * a * a}, 3)


def test_invert_quadratic():
    f = jet1({1: 1, 2: 1}, 3)
    assert invert(f) == jet1({1: 1, 2: -1, 3: 2}, 3)


def test_invert_requires_njet():
    with pytest.raises(NotUnipotent):
        invert(jet1({1: 2}, 2))


def test_invert_alpha_sign():
    rng = random.Random(7)
    for n in (1, 2):
        psi = random_jet(rng, n, 3, unipotent=True)
        inv = invert(psi)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(j, n + 1):
                    assert inv.alpha(i, (j, k)) + psi.alpha(i, (j, k)) == 0


def test_associativity_random():
    rng = random.Random(3)
    for n in (1, 2):
        f, g, h = (random_jet(rng, n, 4, unipotent=True) for _ in range(3))
        assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_kac_trivial_cases():
    aff = AffineMap(matrix=((Fraction(2),),), translation=(Fraction(1),))
    phi = affine_apply(aff, Jet.identity(1, 2))
    a, psi = kac_factorize(phi)
    assert a == aff and psi == Jet.identity(1, 2)

    nj = jet1({1: 1, 2: Fraction(1, 3)}, 2)
    a, psi = kac_factorize(nj)
    assert psi == nj
    assert a.matrix == ((Fraction(1),),) and a.translation == (Fraction(0),)


def test_kac_quadratic_example():
    phi = jet1({0: 1, 1: 2, 2: 1}, 2)  # 1 + 2x + x^2
    a, psi = kac_factorize(phi)
    assert a.matrix == ((Fraction(2),),)
    assert a.translation == (Fraction(1),)
    assert psi == jet1({1: 1, 2: Fraction(1, 2)}, 2)
    assert affine_apply(a, psi) == phi


def test_kac_singular():
    with pytest.raises(SingularLinearPart):
        kac_factorize(jet1({2: 1}, 2))


def test_kac_roundtrip_random():
    rng = random.Random(11)
    for n in (1, 2):
        phi = random_jet(rng, n, 3)
        try:
            a, psi = kac_factorize(phi)
        except SingularLinearPart:
            continue
        assert affine_apply(a, psi) == phi


def test_right_action_neutral():
    psi = jet1({1: 1, 2: Fraction(2, 5)}, 3)
    ident_aff = AffineMap(matrix=((Fraction(1),),), translation=(Fraction(0),))
    assert right_action(psi, ident_aff) == psi
    some_aff = AffineMap(matrix=((Fraction(3),),), translation=(Fraction(1, 2),))
    assert right_action(Jet.identity(1, 3), some_aff) == Jet.identity(1, 3)


def test_right_action_translation_coefficient():
    a = Fraction(1, 2)
    t = Fraction(1, 3)
    psi = jet1({1: 1, 2: a}, 2)
    tr = AffineMap(matrix=((Fraction(1),),), translation=(t,))
    acted = right_action(psi, tr)
    assert acted.coeff(1, (1, 1)) == a / (1 + 2 * a * t)


def test_right_action_axiom():
    rng = random.Random(5)
    for n in (1, 2):
        psi = random_jet(rng, n, 3, unipotent=True)
        for _ in range(3):
            m1 = [[Fraction(rng.randint(1, 2)) if i == j else Fraction(rng.randint(0, 1)) for j in range(n)] for i in range(n)]
            m2 = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
            b1 = [Fraction(rng.randint(-1, 1)) for _ in range(n)]
            b2 = [Fraction(rng.randint(-1, 1), 2) for _ in range(n)]
            phi1 = AffineMap(tuple(map(tuple, m1)), tuple(b1))
            phi2 = AffineMap(tuple(map(tuple, m2)), tuple(b2))
            # phi1 o phi2 as affine maps
            m12 = tuple(
                tuple(sum(m1[i][k] * m2[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
            b12 = tuple(sum(m1[i][k] * b2[k] for k in range(n)) + b1[i] for i in range(n))
            phi12 = AffineMap(m12, b12)
            lhs = right_action(right_action(psi, phi1), phi2)
            rhs = right_action(psi, phi12)
            assert lhs == rhs


def a(i, S):
    return Poly.var(alpha_var(i, tuple(sorted(S))))


def test_infinitesimal_action_y_weight():
    # n=1: Y |> alpha_11 has weight 1
    out = infinitesimal_action(("Y", 1, 1), a(1, (1, 1)), 1, 3)
    assert out == a(1, (1, 1))


def test_infinitesimal_action_x_on_alpha2():
    out = infinitesimal_action(("X", 1), a(1, (1, 1)), 1, 3)
    assert out == a(1, (1, 1, 1)) - a(1, (1, 1)) * a(1, (1, 1))


def test_infinitesimal_action_overflow():
    with pytest.raises(TruncationOverflow):
        infinitesimal_action(("X", 1), a(1, (1, 1, 1)), 1, 3)


def test_infinitesimal_action_is_derivation():
    f = a(1, (1, 1))
    g = a(1, (1, 1, 1))
    lhs = infinitesimal_action(("X", 1), f * g, 1, 4)
    rhs = infinitesimal_action(("X", 1), f, 1, 4) * g + f * infinitesimal_action(("X", 1), g, 1, 4)
    assert lhs == rhs


def test_symbolic_njet_roundtrip():
    # composing a symbolic jet with its inverse gives the identity
    psi = symbolic_njet(1, 4)
    assert compose(psi, invert(psi)) == Jet.identity(1, 4, ring=psi.ring)

from hopfcyclic.bicomplex import engine
from hopfcyclic.chern import (
    build_C,
    conjugacy_classes,
    cycle_permutation,
    partitions,
    sign_invariance_report,
    theta_basis,
    theta_span_report,
    verify_relative_classes,
)


def test_partitions():
    assert partitions(0) == [()]
    assert partitions(2) == [(2,), (1, 1)]
    assert len(partitions(4)) == 5
    assert conjugacy_classes(3) == [(3,), (2, 1), (1, 1, 1)]


def test_cycle_permutation():
    assert cycle_permutation((2,)) == (2, 1)
    assert cycle_permutation((1, 1)) == (1, 2)
    assert cycle_permutation((3,)) == (2, 3, 1)
    assert cycle_permutation((2, 1)) == (2, 1, 3)


def test_build_C_n1_is_gv():
    eng = engine(1, 1, "relative")
    c = build_C(1, 1, (1,), eng)
    assert dict(c.terms) == {((((1, (1, 1), ()),),), ()): 1}


def test_build_C_n2_distinct_classes():
    eng = engine(2, 2, "relative")
    c2 = build_C(2, 2, (2,), eng)       # lambda = (2)
    c11 = build_C(2, 2, (1, 1), eng)    # lambda = (1,1)
    assert not c2.is_zero() and not c11.is_zero()
    assert c2 != c11 and c2 != c11.scale(-1)


def test_build_C_weight_and_bidegree():
    eng = engine(2, 2, "relative")
    for p, lam in [(1, (1,)), (2, (2,)), (2, (1, 1))]:
        c = build_C(2, p, lam, eng)
        for (fword, wedge) in c.terms:
            assert len(fword) == p and len(wedge) == 2 - p
            weight = sum(sum(1 + len(k[2]) for k in fm) for fm in fword) + len(wedge)
            assert weight == 2


def test_relative_classes_n1():
    r = verify_relative_classes(1)
    assert r["passed"], r
    assert r["expected_count"] == 2


def test_relative_classes_n2():
    r = verify_relative_classes(2)
    assert r["passed"], r
    assert r["expected_count"] == 4
    assert r["cohomology_dims_weight_n"] == {"0": 0, "1": 0, "2": 4}


def test_theta_span_n2():
    r = theta_span_report(2, 2, 2)
    assert r["passed"], r


def test_theta_gv_word():
    eng = engine(1, 1, "relative")
    basis = theta_basis(1, 1, 0)
    assert len(basis) == 1
    (_, t), = basis
    assert dict(t.terms) == {((((1, (1, 1), ()),),), ()): 1}


def test_sign_invariance():
    r = sign_invariance_report(3)
    assert r["passed"], r

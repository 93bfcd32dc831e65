"""Acceptance gate: one test per criterion, exact tolerances, pass/fail lines.

Every dimension is an integer computed over Q, so "tolerance" means exact
equality throughout; runtime budgets are asserted where stated.
"""

import time

import pytest

from hopfcyclic.bicomplex import goncarova_check, hochschild_dims, total_cohomology
from hopfcyclic.chern import sign_invariance_report, theta_span_report, verify_relative_classes
from hopfcyclic.cyclic import (
    check_cocyclic_identities,
    check_mixed_complex,
    gv_cocycle_report,
    standard_h1_module,
)
from hopfcyclic.faa import bicrossed_crosscheck, check_matched_pair, two_route_coproduct_check
from hopfcyclic.hopf import bianchi_check, confluence_smoke_test, verify_hopf_axioms


def _line(num: int, ok: bool, text: str):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {text}")
    assert ok, text


def test_criterion_1_hopf_axioms():
    t0 = time.time()
    r1 = verify_hopf_axioms(1, 4, 3)
    r2 = verify_hopf_axioms(2, 2, 2)
    elapsed = time.time() - t0
    ok = r1["passed"] and r2["passed"] and elapsed < 60
    _line(1, ok, f"Hopf axioms n=1 (W=4,D=3) and n=2 (W=2,D=2) in {elapsed:.1f}s")


def test_criterion_2_bianchi_and_confluence():
    t0 = time.time()
    b = bianchi_check(2)
    c = confluence_smoke_test(n_max=2, words=1000, max_len=5, seed=0)
    elapsed = time.time() - t0
    ok = b["passed"] and c["passed"] and elapsed < 60
    _line(2, ok, f"Bianchi n=2 ({b['instances']} instances) + confluence (1000 words) in {elapsed:.1f}s")


def test_criterion_3_matched_pair_and_bicrossed():
    t0 = time.time()
    mp1 = check_matched_pair(1, 5)
    mp2 = check_matched_pair(2, 3)
    bi1 = bicrossed_crosscheck(1, 5, 3, 3)
    bi2 = bicrossed_crosscheck(2, 5, 3, 2)
    elapsed = time.time() - t0
    ok = all(r["passed"] for r in (mp1, mp2, bi1, bi2)) and elapsed < 120
    _line(3, ok, f"matched pair mp1-mp5 (n=1 J=5, n=2 J=3) + bicrossed weight<=3 in {elapsed:.1f}s")


def test_criterion_4_two_route_coproduct():
    r1 = two_route_coproduct_check(1, 5, 4)
    r2 = two_route_coproduct_check(2, 3, 2)
    ok = r1["passed"] and r2["passed"]
    _line(4, ok, f"Faa-di-Bruno vs commutator coproduct, {r1['checked']}+{r2['checked']} generators, exact")


def test_criterion_5_cocyclic_identities():
    mod = standard_h1_module(4, 2)
    ids = check_cocyclic_identities(mod, 3)
    mixed = check_mixed_complex(mod, 3)
    ok = ids["passed"] and mixed["passed"]
    counts = {k: v["checked"] for k, v in ids["identities"].items()}
    _line(5, ok, f"cocyclic identities deg<=3 W<=4 incl. tau^(n+1)=1 and b/B relations ({counts})")


def test_criterion_6_h1_cyclic_cohomology():
    t0 = time.time()
    r = total_cohomology(1, 2, 7)
    dims = {}
    by_weight = {}
    for b in r["blocks"]:
        dims[b["degree"]] = dims.get(b["degree"], 0) + b["dim"]
        by_weight.setdefault(b["degree"], set()).add(b["weight"])
    gv = [c for b in r["blocks"] for c in b["certificates"] if c["label"] == "godbillon-vey"]
    elapsed = time.time() - t0
    ok = (
        dims.get(0) == 1
        and dims.get(1) == 2
        and by_weight.get(1) == {1, 2}
        and dims.get(2) == 5
        and len(gv) == 1
        and gv[0]["cocycle_checked"]
        and gv[0]["non_coboundary_checked"]
        and gv[0]["representative"] == [["1", "1 ⊗ e[1;1,1|] ⊗ 1"]]
        and elapsed < 600
    )
    _line(6, ok, f"HC(H_1) dims {dims} at w_max=7, GV non-coboundary certified, {elapsed:.1f}s")


def test_criterion_7_h1_hochschild():
    r = hochschild_dims(1, 2, 7)
    dims, weights = {}, {}
    for b in r["blocks"]:
        dims[b["degree"]] = dims.get(b["degree"], 0) + b["dim"]
        weights.setdefault(b["degree"], []).extend([b["weight"]] * b["dim"])
    ok = (
        dims.get(0) == 1
        and dims.get(1) == 3
        and sorted(weights.get(1, [])) == [0, 1, 2]
        and dims.get(2) == 6
        and sorted(weights.get(2, [])) == [1, 2, 2, 3, 5, 7]
    )
    _line(7, ok, f"Hochschild(H_1) dims {dims}, class weights {dict(sorted(weights.items()))}")


def test_criterion_8_goncarova():
    r = goncarova_check(2, 8)
    by_k = {b["k"]: b for b in r["blocks"]}
    ok = (
        r["passed"]
        and by_k[1]["dims_by_weight"] == {"1": 1, "2": 1}
        and by_k[2]["dims_by_weight"] == {"5": 1, "7": 1}
    )
    _line(8, ok, "row cohomology two-dimensional per degree at weights {1,2} and {5,7}, zero elsewhere <= 8")


def test_criterion_9_relative_classes_n2():
    t0 = time.time()
    thm = verify_relative_classes(2)
    signs = sign_invariance_report(3)
    elapsed = time.time() - t0
    ok = (
        thm["passed"]
        and thm["expected_count"] == 4
        and len(thm["classes"]) == 4
        and all(c["beta_closed"] and c["del_closed"] for c in thm["classes"])
        and thm["independent"]
        and thm["wrong_parity_zero"]
        and signs["passed"]
        and elapsed < 600
    )
    _line(9, ok, f"relative Chern basis n=2: 4 classes, cocycles, independent, wrong parity 0, signs p<=3, {elapsed:.1f}s")


def test_criterion_10_gln_coinvariants():
    r = theta_span_report(2, 2, 2)
    ok = r["passed"] and all(
        b["theta_span_rank"] == b["coinvariant_dim"] and b["h_invariant"] for b in r["blocks"]
    )
    _line(10, ok, "theta(sigma,pi) span equals brute-force coinvariants for n=2, p<=2, q<=2")

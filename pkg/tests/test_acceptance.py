"""Acceptance gate: thirteen exact-identity criteria plus the full-run budget.

One test per criterion, so `pytest -v tests/test_acceptance.py` emits one
pass/fail line per criterion.  All checks are exact integer or cyclotomic
arithmetic (no tolerances); each criterion also enforces its wall-clock
budget in seconds.
"""

import time

from qsl2 import (
    SuiteConfig,
    negative_control,
    run_suites,
    suite_names,
    verify_annulus_TN,
    verify_braided_associativity,
    verify_cobraiding,
    verify_dual_frobenius,
    verify_freshman_dream,
    verify_hopf_axioms,
    verify_monogon_noncentrality,
    verify_pairing_tables,
    verify_phi_braided,
    verify_phi_homomorphism,
    verify_root_identities,
    verify_square_lemma,
    verify_torus_chebyshev,
)
from qsl2.cli import main


def _run(budget_s, fn, *args, **kwargs):
    start = time.perf_counter()
    report = fn(*args, **kwargs)
    elapsed = time.perf_counter() - start
    failures = [
        f"{c.id}: lhs={c.lhs} rhs={c.rhs}" for c in report.cases if c.status == "fail"
    ]
    assert not failures, failures
    assert elapsed < budget_s, f"{report.suite} took {elapsed:.2f}s, budget {budget_s}s"
    return report


def _ids(report, suffix=""):
    return [c.id for c in report.cases if c.id.endswith(suffix)]


def test_criterion_01_gauss_binomial_vanishing():
    # [N k] at w^8 equals 0 for 0 < k < N and 1 at k in {0, N}, n <= 64, < 5 s.
    report = _run(5, verify_root_identities, list(range(1, 65)))
    assert len(_ids(report, "/vanishing")) == 64


def test_criterion_02_torus_freshman_dream():
    # (x+y)^N = x^N + y^N in the two-generator torus, n <= 40, plus the
    # non-collapse control at exponents 2 <= M < N; < 10 s.
    report = _run(10, verify_freshman_dream, list(range(1, 41)))
    assert len(_ids(report, "/binomial-collapse")) == 40
    controls = [c for c in report.cases if "/collapse-control-M=" in c.id]
    assert len(controls) >= 35
    # The only skips are the orders with N <= 2, where no exponent 2 <= M < N exists.
    assert [c.id for c in report.cases if c.status == "skip"] == [
        f"n={n}/collapse-control" for n in (1, 2, 4, 8, 16)
    ]


def test_criterion_03_torus_chebyshev_identity():
    # T_N(x + x^-1 + y) = x^N + x^-N + y^N for all n <= 40; < 30 s.
    report = _run(30, verify_torus_chebyshev, list(range(1, 41)))
    assert len(_ids(report, "/power-sum-collapse")) == 40
    assert report.skipped == 0


def test_criterion_04_coordinate_ring_chebyshev_identity():
    # T_N(a+d) = a^N + d^N in PBW form for all n <= 40; < 60 s.
    report = _run(60, verify_annulus_TN, list(range(1, 41)))
    assert len(_ids(report, "/trace-power")) == 40
    assert report.skipped == 0


def test_criterion_05_framed_square_powers():
    # Closed form against the recursion for m <= 10 over the generic ring,
    # and the two-term collapse of X^(N) for all n <= 40; < 30 s.
    report = _run(30, verify_square_lemma, 10, list(range(1, 41)))
    assert len([c for c in report.cases if c.id.startswith("generic/m=")]) == 10
    assert len(_ids(report, "/collapse")) == 40
    assert report.skipped == 0


def test_criterion_06_hopf_axioms_and_cobraiding():
    # Coassociativity, counit, antipode, relation respect of the dual braiding
    # form, and the commutation law: degree <= 4 basis plus 200 samples; < 60 s.
    start = time.perf_counter()
    hopf = verify_hopf_axioms(degree_bound=4, samples=200, seed=0)
    cob = verify_cobraiding(samples=200, seed=0)
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"took {elapsed:.2f}s, budget 60s"
    for report in (hopf, cob):
        assert report.failed == 0 and report.skipped == 0
    hopf_ids = _ids(hopf)
    for case_id in ("coassociativity", "counit-left-right", "antipode-left",
                    "antipode-right", "multiplicativity-random"):
        assert case_id in hopf_ids
    cob_ids = _ids(cob)
    for case_id in ("generator-table", "respects-relations-on-words",
                    "commutation-law-generators", "commutation-law-random"):
        assert case_id in cob_ids
    assert hopf.params["degree_bound"] == 4 and hopf.params["samples"] == 200


def test_criterion_07_pairing_value_tables():
    # <a^m, K^e> = q^(2em), <b^m, E^(p)> = delta_(m,p), <c^m, F^(p)> = delta_(m,p),
    # and the stated zero/delta_(0,p) entries, m, p <= 8; < 30 s.
    report = _run(30, verify_pairing_tables, 8, 8)
    assert report.params == {"m_max": 8, "p_max": 8}
    ids = _ids(report)
    for case_id in ("a-powers/closed-forms", "d-powers/closed-forms",
                    "b-powers/divided-power-column", "c-powers/divided-power-column"):
        assert case_id in ids


def test_criterion_08_dual_frobenius_pairing():
    # Generator table plus 100 random monomial/word pairs per order,
    # n in {1, 3, 4, 5, 8, 12, 16, 24}, under eta -> w^(N^2); < 60 s.
    orders = [1, 3, 4, 5, 8, 12, 16, 24]
    report = _run(60, verify_dual_frobenius, orders, samples=100, seed=0)
    assert report.params["samples"] == 100
    assert len(_ids(report, "/generator-table")) == len(orders)
    assert len(_ids(report, "/duality-random")) == len(orders)
    assert report.skipped == 0


def test_criterion_09_power_map_is_a_hopf_morphism():
    # Relation preservation, coalgebra compatibility, counit/antipode
    # compatibility, and co-R compatibility for all n <= 24; < 120 s.
    report = _run(120, verify_phi_homomorphism, list(range(1, 25)))
    for suffix in ("/relations", "/coalgebra", "/counit-antipode", "/co-r"):
        assert len(_ids(report, suffix)) == 24
    assert report.skipped == 0


def test_criterion_10_negative_controls():
    # For generic q and wrong powers M != ord(w^8) the defining identities
    # must fail; every control asserts a failure IS found; < 30 s.
    report = _run(30, negative_control, list(range(1, 25)))
    assert report.skipped == 0
    generic = [c.id for c in report.cases if c.id.startswith("generic/")]
    assert len(generic) == 10
    covered = {c.id.split("/")[0] for c in report.cases if "/wrong-power-M=" in c.id}
    assert covered == {f"n={n}" for n in range(1, 25)}


def test_criterion_11_monogon_noncentrality():
    # x^m w - w x^m equals the displayed binomial sum and is nonzero, m <= 6; < 10 s.
    report = _run(10, verify_monogon_noncentrality, 6)
    assert len(_ids(report, "/commutator-matches-displayed-sum")) == 6
    assert len(_ids(report, "/noncentral")) == 6


def test_criterion_12_scalar_ledger_identities():
    # Root-of-unity scalar facts (Chebyshev value at -q^2 - q^-2, eta inverse
    # normalization, eta square, sign, order-two power) for all n <= 64; < 5 s.
    report = _run(5, verify_root_identities, list(range(1, 65)))
    for suffix in ("/chebyshev-at-minus-q2-sum", "/eta-inverse-normalization",
                   "/eta-square", "/sign", "/order-two-power"):
        assert len(_ids(report, suffix)) == 64


def test_criterion_13_braided_tensor_square():
    # Associativity on 200 random triples and power-map multiplicativity on
    # 100 samples for n in {3, 5, 12}; < 60 s.
    start = time.perf_counter()
    assoc = verify_braided_associativity(samples=200, seed=0)
    phi = verify_phi_braided([3, 5, 12], samples=100, seed=0)
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"took {elapsed:.2f}s, budget 60s"
    assert assoc.failed == 0 and assoc.skipped == 0
    assert assoc.params["samples"] == 200
    assert "random-triples" in _ids(assoc)
    assert phi.failed == 0 and phi.skipped == 0
    assert phi.params["samples"] == 100
    for n in (3, 5, 12):
        assert f"n={n}/random-samples" in _ids(phi)


def test_full_verify_all_orders_1_to_40_under_five_minutes(capsys):
    start = time.perf_counter()
    code = main(["verify", "all", "--orders", "1..40"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0, out.splitlines()[-1]
    assert elapsed < 300, f"verify all took {elapsed:.2f}s, budget 300s"
    summary = out.strip().splitlines()[-1]
    assert " 0 failed" in summary


def test_verify_all_covers_every_registered_suite():
    cfg = SuiteConfig(suites=suite_names(), orders=[1, 3], m_max=2, samples=2,
                      degree_bound=1)
    reports = run_suites(cfg)
    assert [rep.suite for rep in reports] == suite_names()

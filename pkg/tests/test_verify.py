import json

import pytest

from conjkex.verify import (
    ClaimResult,
    center_claims,
    class_size_claims,
    commuting_growth_claims,
    default_param_grid,
    heisenberg_orbit_claims,
    run_suites,
    summary_table,
    sylow_claims,
)

SMALL_GRID = [(3, 2, 1), (3, 2, 2), (5, 2, 1)]


def test_default_grid_is_pinned():
    grid = default_param_grid()
    assert grid == [
        (p, m, n)
        for p in (3, 5, 7)
        for m in (2, 3)
        for n in (1, 2)
        if p ** (m + n) <= 10 ** 5
    ]
    assert len(grid) == 12
    assert default_param_grid(max_order=500) == [
        (3, 2, 1), (3, 2, 2), (3, 3, 1), (3, 3, 2), (5, 2, 1), (7, 2, 1)
    ]


def test_class_size_claims_pass():
    for result in class_size_claims(grid=SMALL_GRID):
        assert result.passed, result.to_json()


def test_center_claims_pass():
    results = center_claims(grid=SMALL_GRID)
    assert len(results) == 2 * len(SMALL_GRID)
    for result in results:
        assert result.passed, result.to_json()
    orders = {r.params: r.measured_value for r in results if r.claim_id == "center.order"}
    assert orders["p=3,m=2,n=1"] == "3"
    assert orders["p=3,m=2,n=2"] == "9"
    assert orders["p=5,m=2,n=1"] == "5"


def test_heisenberg_orbit_claims_pass():
    for result in heisenberg_orbit_claims(primes=(3, 5, 7)):
        assert result.passed, result.to_json()


def test_sylow_claims_pass():
    results = sylow_claims(ks=(2, 3))
    for result in results:
        assert result.passed, result.to_json()
    derived = {r.params: r.measured_value for r in results if r.claim_id == "sylow.derived-order"}
    assert derived == {"k=2": "1", "k=3": "8"}
    agreement = [r for r in results if r.claim_id == "sylow.min-gen-agreement"]
    assert len(agreement) == 1 and agreement[0].passed


def test_sylow_k4_orders_without_long():
    results = sylow_claims(ks=(4,), long=False)
    ids = {r.claim_id for r in results}
    assert ids == {"sylow.s-order", "sylow.a-order"}
    for result in results:
        assert result.passed


def test_growth_claims_pass():
    for k in (2, 3):
        for result in commuting_growth_claims(k):
            assert result.passed, result.to_json()


def test_run_suites_sorted_and_deterministic():
    first = run_suites(["center", "orbit"], max_order=500)
    second = run_suites(["center", "orbit"], max_order=500)
    strip = lambda rs: [(r.claim_id, r.params, r.paper_value, r.measured_value, r.passed) for r in rs]
    assert strip(first) == strip(second)
    assert strip(first) == sorted(strip(first), key=lambda t: (t[0], t[1]))
    with pytest.raises(ValueError):
        run_suites(["nosuch"])


def test_claim_result_json_shape():
    result = ClaimResult("x.y", "p=3", "1", "1", True, 0.5)
    data = json.loads(result.to_json())
    assert data == {
        "claim_id": "x.y",
        "params": "p=3",
        "paper_value": "1",
        "measured_value": "1",
        "pass": True,
        "elapsed_ms": 0.5,
    }


def test_summary_table_counts_failures():
    results = [
        ClaimResult("a", "p=3", "1", "1", True, 0.1),
        ClaimResult("b", "p=3", "2", "3", False, 0.1),
    ]
    table = summary_table(results)
    assert "1/2 claims passed" in table
    assert "FAIL" in table and "PASS" in table

from __future__ import annotations

import json

import pytest

from zfgraph import verify
from zfgraph.fixtures import subdivided_star
from zfgraph.forcing import weakened_rule
from zfgraph.graph import CapExceededError, canonical_form, parse_graph6


@pytest.fixture(scope="module")
def sweep():
    return verify.Sweep(jobs=1)


def test_registry_lists_twenty_statements():
    assert list(verify.REGISTRY) == [f"T{i}" for i in range(1, 21)]
    for check in verify.REGISTRY.values():
        assert check.statement
        assert check.graph_class in verify.DEFAULT_CAPS
        assert (check.family is None) != (check.predicate is None)


@pytest.mark.parametrize("cid", ["T4", "T8"])
def test_labeled_checks_pass_at_order_6(sweep, cid):
    rep = verify.run_check(cid, 6, sweep=sweep)
    assert rep.passed and rep.counterexamples == []
    assert rep.orders[-1] == 6 and rep.checked > 0


def test_t17_extremal_trees_are_subdivided_stars(sweep):
    rep = verify.run_check("T17", 9, sweep=sweep)
    assert rep.passed
    assert sorted(rep.extremal) == list(range(5, 10))
    for n, codes in rep.extremal.items():
        assert len(codes) == 1
        assert canonical_form(parse_graph6(codes[0])) == canonical_form(subdivided_star(n))


def test_cap_semantics(sweep):
    reports = verify.run_all({"graphs": 4}, jobs=1, ids=["T8", "T11"])
    assert [r.orders for r in reports] == [[4], [4]]
    with pytest.raises(CapExceededError):
        verify.run_check("T4", 8, sweep=sweep)
    with pytest.raises(KeyError):
        verify.run_check("T99")


def test_family_checks():
    for cid in ("T9", "T14"):
        rep = verify.run_check(cid, 12)
        assert rep.passed and rep.checked == len(rep.orders)


def test_iff_parts_reported_separately(sweep):
    rep = verify.run_check("T6", 5, sweep=sweep)
    assert set(rep.parts) == {"=>", "<="}
    assert rep.parts["=>"]["applicable"] == rep.parts["<="]["applicable"]
    assert rep.parts["=>"]["applicable"] > 0


def test_reports_are_deterministic(sweep):
    a = verify.run_check("T12", 5, sweep=sweep).as_dict()
    b = verify.run_check("T12", 5, sweep=verify.Sweep(jobs=1)).as_dict()
    a.pop("ms")
    b.pop("ms")
    assert a == b


def test_parallel_sweep_matches_serial():
    serial = verify.Sweep(jobs=1).records("graphs", 5)
    parallel = verify.Sweep(jobs=2, chunk=97).records("graphs", 5)
    assert serial == parallel
    serial = verify.Sweep(jobs=1).records("unicyclic", 7, True)
    parallel = verify.Sweep(jobs=2, chunk=5).records("unicyclic", 7, True)
    assert serial == parallel


def test_json_schema(sweep):
    rep = verify.run_check("T19", 8, sweep=sweep)
    d = json.loads(json.dumps(rep.as_dict()))
    for key in ("id", "paper_ref", "class", "orders", "checked", "counterexamples", "verdict", "ms"):
        assert key in d
    assert d["verdict"] == "pass"
    assert d["scope"] == "verified for 6 <= n <= 8"


def test_weakened_rule_produces_counterexamples():
    with weakened_rule():
        reports = verify.run_all({"graphs": 5}, jobs=1, ids=["T5", "T6"])
    assert not any(r.passed for r in reports)
    for r in reports:
        assert r.verdict == "fail"
        ex = r.counterexamples[0]
        assert ex["graph6"] and {"Z", "Z_complement", "delta", "witness", "tags"} <= set(ex["detail"])


def test_table_states_finite_scope(sweep):
    text = verify.format_table([verify.run_check("T15", 4, sweep=sweep)])
    assert "not a proof" in text and "T15" in text

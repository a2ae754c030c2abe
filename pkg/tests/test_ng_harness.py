# tests/test_ng_harness.py
import pytest

from trcng.core.exceptions import InvalidParameterError
from trcng.schemas.scan import FindingKind, Verdict
from trcng.schemas.solver import Budget, Method, TrcResult
from trcng.services import families
from trcng.services.graph_core import complement, emit_graph6, is_spider, parse_graph6
from trcng.services.ng_harness import (
    atlas_graph6,
    check_diameter_pair,
    check_double_star_bound,
    ng_bound,
    ng_scan,
    probe_two_connected,
    tightness_pair,
    verdict_for,
)
from trcng.utils.cache import ResultCache, get_cache_key


def _exact(value: int) -> TrcResult:
    return TrcResult(lo=value, hi=value, method=Method.THEORY)


def _is_path(graph6: str) -> bool:
    graph = parse_graph6(graph6)
    return graph.m == graph.n - 1 and all(graph.degree(v) <= 2 for v in range(graph.n))


def _argmax_records(records, summary):
    return {r.graph6: r for r in records if r.graph6 in summary.argmax}


def test_ng_bound():
    assert [ng_bound(n) for n in (4, 5, 6, 9)] == [10, 11, 12, 18]
    with pytest.raises(InvalidParameterError):
        ng_bound(3)


def test_verdicts():
    assert verdict_for(_exact(5), _exact(5), 10) == Verdict.HOLDS
    assert verdict_for(_exact(6), _exact(5), 10) == Verdict.VIOLATED
    interval = TrcResult(lo=5, hi=7, method=Method.SEARCH, unknown=True)
    assert verdict_for(interval, _exact(5), 10) == Verdict.UNKNOWN
    assert verdict_for(interval, _exact(3), 10) == Verdict.HOLDS


def test_atlas_covers_small_orders():
    assert len(atlas_graph6(4)) == 11
    assert len(atlas_graph6(5)) == 34
    with pytest.raises(InvalidParameterError):
        atlas_graph6(8)


def test_scan_order_4():
    records, summary = ng_scan(atlas_graph6(4))
    assert summary.scanned == 11
    assert summary.co_connected == 1
    assert summary.max_sum == 10
    assert len(summary.argmax) == 1
    assert not summary.violations
    assert records[0].verdict == Verdict.HOLDS
    (witness,) = _argmax_records(records, summary).values()
    assert _is_path(witness.graph6)
    assert (witness.trc_lo, witness.cotrc_lo) == (5, 5)


def test_scan_order_5():
    records, summary = ng_scan(atlas_graph6(5))
    assert summary.n == 5
    assert summary.max_sum == 11
    assert not summary.violations
    assert summary.unknowns == 0
    assert all(record.sum_hi <= record.bound for record in records)
    assert summary.findings
    assert summary.failed_findings() == []
    # arbre à trois feuilles (6) et son complémentaire (5)
    witnesses = _argmax_records(records, summary)
    assert set(witnesses) == {"DBc", "Db["}
    assert witnesses["DBc"].exact
    assert (witnesses["DBc"].trc_lo, witnesses["DBc"].cotrc_lo) == (6, 5)
    assert is_spider(parse_graph6("DBc"))


@pytest.mark.slow
def test_scan_order_6_in_parallel():
    records, summary = ng_scan(atlas_graph6(6), jobs=2)
    assert summary.max_sum == 12
    assert not summary.violations
    assert summary.unknowns == 0
    paths = [r for r in _argmax_records(records, summary).values() if _is_path(r.graph6)]
    assert len(paths) == 1
    assert (paths[0].trc_lo, paths[0].cotrc_lo) == (9, 3)


def test_scan_skips_malformed_lines_and_keeps_order():
    lines = ["Ch", "", "# commentaire", "C", "Ch"]
    records, summary = ng_scan(lines, checks=False)
    assert summary.malformed == 1
    assert [r.graph6 for r in records] == ["Ch", "Ch"]
    assert summary.findings == []


def test_scan_parallel_matches_sequential():
    lines = atlas_graph6(5)
    sequential, _ = ng_scan(lines, jobs=1)
    parallel, _ = ng_scan(lines, jobs=2)
    assert [r.csv_row() for r in parallel] == [r.csv_row() for r in sequential]


def test_scan_writes_and_reuses_the_cache(cache_path):
    cache = ResultCache(cache_path)
    ng_scan(["Ch"], cache=cache)
    assert cache.get(get_cache_key("g", "Ch")).value == 5
    assert cache.get(get_cache_key("co", "Ch")).value == 5

    reloaded = ResultCache(cache_path)
    records, _ = ng_scan(["Ch"], cache=reloaded, budget=Budget(node_cap=1, time_cap=1.0))
    assert records[0].sum_lo == 10


def test_diameter_pair_checks():
    path = families.path(6)
    findings = check_diameter_pair(path, complement(path))
    kinds = {f.kind for f in findings}
    assert FindingKind.DIAMETER_PAIR in kinds
    assert all(f.ok for f in findings)


def test_double_star_check_on_p4(p4):
    finding = check_double_star_bound(p4, _exact(5))
    assert finding.kind == FindingKind.DOUBLE_STAR_BOUND
    assert finding.ok
    assert check_double_star_bound(families.path(6), _exact(3)) is None


def test_probe_two_connected(c5):
    finding = probe_two_connected(c5)
    assert finding.kind == FindingKind.TWO_CONNECTED_PROBE
    assert finding.ok
    assert probe_two_connected(families.path(5)) is None


@pytest.mark.parametrize("n", [5, 6, 9, 10, 20, 40])
def test_tightness_pair_reaches_the_bound(n):
    record = tightness_pair(n)
    assert record.graph6 == emit_graph6(families.path(n))
    assert (record.trc_lo, record.trc_hi) == (2 * n - 3, 2 * n - 3)
    assert (record.cotrc_lo, record.cotrc_hi) == (3, 3)
    assert record.sum_lo == record.sum_hi == 2 * n
    assert record.bound == ng_bound(n)
    assert record.verdict == Verdict.HOLDS
    assert record.method_gbar == Method.CONSTRUCTION

"""Theorem registry and sweep engine.

Each registered statement is a predicate over one graph class, evaluated on
every graph of every order up to a cap.  Reports list counterexamples with
enough data to redo the computation by hand.  A finite sweep is evidence,
not proof: reports say "verified for n <= cap".
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import forcing
from .enumeration import graph_from_mask, pair_list, trees, unicyclic
from .graph import (
    CapExceededError,
    Graph,
    complement,
    cycle_graph,
    emit_graph6,
    is_connected,
    parse_graph6,
    path_graph,
)
from .pathcover import path_cover_number, path_cover_number_tree
from .structure import (
    classify,
    has_induced_p4,
    is_c3_star_leaf_sum,
    is_complete,
    is_cycle,
    is_path,
    is_subdivided_star_edge,
    sorted_tags,
)

DEFAULT_CAPS = {"graphs": 6, "trees": 10, "unicyclic": 9, "family": 10}
MAX_CAPS = {"graphs": 7, "trees": 12, "unicyclic": 9, "family": 20}
CLASS_MIN_ORDER = {"graphs": 1, "trees": 2, "unicyclic": 3, "family": 1}


@dataclass
class GraphRecord:
    """Invariants of one graph, shared by every check over its class."""

    graph6: str
    n: int
    edges: int
    min_deg: int
    max_deg: int
    connected: bool
    co_connected: bool
    z: int
    witness: list[int]
    clique: int
    cut_bound: int
    has_p4: bool
    is_path: bool
    is_complete: bool
    is_cycle: bool
    is_subdivided_star: bool
    is_c3_leaf_sum: bool
    path_cover: int | None = None
    z_bar: int | None = None
    min_deg_bar: int | None = None

    @property
    def ng_sum(self) -> int:
        assert self.z_bar is not None
        return self.z + self.z_bar

    @property
    def delta_sum(self) -> int:
        assert self.min_deg_bar is not None
        return self.min_deg + self.min_deg_bar

    def detail(self) -> dict:
        out = {
            "n": self.n,
            "Z": self.z,
            "witness": self.witness,
            "Z_complement": self.z_bar,
            "delta": self.min_deg,
            "delta_complement": self.min_deg_bar,
            "P": self.path_cover,
            "clique": self.clique,
            "cut_vertex_bound": self.cut_bound,
            "connected": self.connected,
            "co_connected": self.co_connected,
        }
        return out


def make_record(g: Graph, path_cover: bool = False, tree: bool = False) -> GraphRecord:
    zres = forcing.zero_forcing_number(g)
    degs = g.degrees()
    connected = is_connected(g)
    gbar = complement(g)
    rec = GraphRecord(
        graph6=emit_graph6(g),
        n=g.n,
        edges=sum(degs) // 2,
        min_deg=min(degs),
        max_deg=max(degs),
        connected=connected,
        co_connected=connected and is_connected(gbar),
        z=zres.z,
        witness=zres.witness.to_list(),
        clique=zres.bounds.clique + 1,
        cut_bound=zres.bounds.cut_vertex,
        has_p4=has_induced_p4(g),
        is_path=is_path(g),
        is_complete=is_complete(g),
        is_cycle=is_cycle(g),
        is_subdivided_star=is_subdivided_star_edge(g),
        is_c3_leaf_sum=is_c3_star_leaf_sum(g),
        min_deg_bar=g.n - 1 - max(degs),
    )
    if path_cover:
        rec.path_cover = (path_cover_number_tree(g) if tree else path_cover_number(g))[0]
    return rec


# -- registry -----------------------------------------------------------------

# A predicate returns (part, applicable, holds) triples; "=>" and "<=" parts
# of an equivalence are reported separately.
Outcome = list[tuple[str, bool, bool]]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    graph_class: str
    min_order: int
    predicate: Callable[[GraphRecord], Outcome] | None = None
    family: Callable[[int], Outcome] | None = None
    needs_path_cover: bool = False
    extremal: Callable[[GraphRecord], bool] | None = None
    extremal_label: str = ""


def _iff(lhs: bool, rhs: bool) -> Outcome:
    return [("=>", lhs, rhs or not lhs), ("<=", rhs, lhs or not rhs)]


def _t9(n: int) -> Outcome:
    return [("Z(complement C_n) = n-3", True, forcing.z(complement(cycle_graph(n))) == n - 3)]


def _t14(n: int) -> Outcome:
    out: Outcome = []
    for name, build in (("path", path_graph), ("cycle", cycle_graph)):
        g = build(n)
        total = forcing.z(g) + forcing.z(complement(g))
        want = 4 if name == "path" else 5
        out += [(f"{name} {p}", a, h) for p, a, h in _iff(total == 2 * (n - 3), n == want)]
    return out


REGISTRY: dict[str, TheoremCheck] = {}


def _register(check: TheoremCheck) -> None:
    REGISTRY[check.id] = check


_register(TheoremCheck(
    "T1", "P(G) <= Z(G) for every graph", "graphs", 1,
    lambda r: [("P <= Z", True, r.path_cover <= r.z)], needs_path_cover=True))
_register(TheoremCheck(
    "T2", "P(T) = Z(T) for every tree", "trees", 2,
    lambda r: [("P = Z", True, r.path_cover == r.z)], needs_path_cover=True))
_register(TheoremCheck(
    "T3", "P(G) = Z(G) for every unicyclic graph", "unicyclic", 3,
    lambda r: [("P = Z", True, r.path_cover == r.z)], needs_path_cover=True))
_register(TheoremCheck(
    "T4", "Z(G) >= min degree for every graph of order n >= 2", "graphs", 2,
    lambda r: [("Z >= delta", True, r.z >= r.min_deg)]))
_register(TheoremCheck(
    "T5", "connected G, n >= 2: Z(G) = 1 iff G is the path P_n", "graphs", 2,
    lambda r: _iff(r.z == 1, r.is_path) if r.connected else []))
_register(TheoremCheck(
    "T6", "connected G, n >= 2: Z(G) = n-1 iff G is the complete graph K_n", "graphs", 2,
    lambda r: _iff(r.z == r.n - 1, r.is_complete) if r.connected else []))
_register(TheoremCheck(
    "T7", "connected G: Z(G) >= 1 - k + sum Z(G_i) at every cut vertex", "graphs", 2,
    lambda r: [("Z >= cut-vertex bound", True, r.z >= r.cut_bound)] if r.connected else []))
_register(TheoremCheck(
    "T8", "G and complement connected, n >= 4: Z(G) <= n-3", "graphs", 4,
    lambda r: [("Z <= n-3", True, r.z <= r.n - 3)] if r.co_connected else []))
_register(TheoremCheck(
    "T9", "Z(complement of C_n) = n-3 for n >= 5", "family", 5, family=_t9))
_register(TheoremCheck(
    "T10", "Z(G) >= n-2 implies G has no induced P4", "graphs", 1,
    lambda r: [("no induced P4", r.z >= r.n - 2, r.z < r.n - 2 or not r.has_p4)]))
_register(TheoremCheck(
    "T11",
    "G and complement connected, n >= 4: delta(G)+delta(Gbar) <= Z(G)+Z(Gbar) <= 2(n-3)",
    "graphs", 4,
    lambda r: [
        ("lower", True, r.delta_sum <= r.ng_sum),
        ("upper", True, r.ng_sum <= 2 * (r.n - 3)),
    ] if r.co_connected else []))
_register(TheoremCheck(
    "T12",
    "min degree 1, G and complement connected, n >= 4: "
    "Z(G)+Z(Gbar) = delta(G)+delta(Gbar) iff G = P_n",
    "graphs", 4,
    lambda r: _iff(r.ng_sum == r.delta_sum, r.is_path)
    if r.co_connected and r.min_deg == 1 else []))
_register(TheoremCheck(
    "T13",
    "unicyclic G with connected complement: "
    "Z(G)+Z(Gbar) = delta(G)+delta(Gbar) iff G = C_n with n >= 5",
    "unicyclic", 3,
    lambda r: _iff(r.ng_sum == r.delta_sum, r.is_cycle and r.n >= 5) if r.co_connected else [],
    extremal=lambda r: r.co_connected and r.ng_sum == r.delta_sum,
    extremal_label="lower-bound equality"))
_register(TheoremCheck(
    "T14", "Z(G)+Z(Gbar) = 2(n-3) holds for P_n iff n = 4 and for C_n iff n = 5",
    "family", 4, family=_t14))
_register(TheoremCheck(
    "T15", "Z(G) >= clique number - 1", "graphs", 1,
    lambda r: [("Z >= omega-1", True, r.z >= r.clique - 1)]))
_register(TheoremCheck(
    "T16", "tree, n >= 5: Z(T) = n-3 implies T is a star with one edge subdivided", "trees", 5,
    lambda r: [("=>", r.z == r.n - 3, r.z != r.n - 3 or r.is_subdivided_star)],
    extremal=lambda r: r.z == r.n - 3, extremal_label="Z = n-3"))
_register(TheoremCheck(
    "T17",
    "tree, n >= 5, complement connected: Z(T)+Z(Tbar) = 2(n-3) iff T is a subdivided star",
    "trees", 5,
    lambda r: _iff(r.ng_sum == 2 * (r.n - 3), r.is_subdivided_star) if r.co_connected else [],
    extremal=lambda r: r.co_connected and r.ng_sum == 2 * (r.n - 3),
    extremal_label="Z+Zbar = 2(n-3)"))
_register(TheoremCheck(
    "T18", "unicyclic, n = 5, G and complement connected: Z(G) = 2 = Z(Gbar)", "unicyclic", 5,
    lambda r: [("Z = 2 = Zbar", True, r.z == 2 and r.z_bar == 2)]
    if r.n == 5 and r.co_connected else []))
_register(TheoremCheck(
    "T19",
    "unicyclic, n >= 6, complement connected: Z(G) = n-3 iff G is the C3 + star leaf sum",
    "unicyclic", 6,
    lambda r: _iff(r.z == r.n - 3, r.is_c3_leaf_sum) if r.co_connected else [],
    extremal=lambda r: r.co_connected and r.z == r.n - 3, extremal_label="Z = n-3"))
_register(TheoremCheck(
    "T20",
    "unicyclic, n >= 5, complement connected: Z(G)+Z(Gbar) = 2(n-3) iff n = 5 "
    "or G is the C3 + star leaf sum",
    "unicyclic", 5,
    lambda r: _iff(r.ng_sum == 2 * (r.n - 3), r.n == 5 or r.is_c3_leaf_sum)
    if r.co_connected else [],
    extremal=lambda r: r.co_connected and r.ng_sum == 2 * (r.n - 3),
    extremal_label="Z+Zbar = 2(n-3)"))


# -- sweeping -----------------------------------------------------------------


def _init_worker(threshold: int) -> None:
    forcing.set_rule_threshold(threshold)


def _labeled_chunk(args: tuple[int, int, int, bool]) -> list[GraphRecord]:
    n, lo, hi, pc = args
    pairs = pair_list(n)
    return [make_record(graph_from_mask(n, m, pairs), pc) for m in range(lo, hi)]


def _graph_chunk(args: tuple[list[Graph], bool, bool]) -> list[GraphRecord]:
    graphs, pc, tree = args
    out = []
    for g in graphs:
        rec = make_record(g, pc, tree)
        rec.z_bar = forcing.z(complement(g))
        out.append(rec)
    return out


class Sweep:
    """Per-class record cache, so that one enumeration serves many checks."""

    def __init__(self, jobs: int | None = None, chunk: int = 512):
        self.jobs = max(1, jobs or os.cpu_count() or 1)
        self.chunk = chunk
        self._cache: dict[tuple[str, int], tuple[bool, list[GraphRecord]]] = {}

    def _map(self, fn, tasks: list) -> list:
        if self.jobs == 1 or len(tasks) == 1:
            return [fn(t) for t in tasks]
        with ProcessPoolExecutor(
            self.jobs, initializer=_init_worker, initargs=(forcing.rule_threshold(),)
        ) as pool:
            return list(pool.map(fn, tasks))

    def records(self, cls: str, n: int, path_cover: bool = False) -> list[GraphRecord]:
        key = (cls, n)
        cached = self._cache.get(key)
        if cached and (cached[0] or not path_cover):
            return cached[1]
        if cls == "graphs":
            total = 1 << (n * (n - 1) // 2)
            step = self.chunk
            tasks = [(n, lo, min(lo + step, total), path_cover) for lo in range(0, total, step)]
            recs = [r for part in self._map(_labeled_chunk, tasks) for r in part]
            full = total - 1
            for mask, rec in enumerate(recs):
                rec.z_bar = recs[full ^ mask].z
        else:
            graphs = list(trees(n) if cls == "trees" else unicyclic(n))
            step = max(1, self.chunk // 16)
            tasks = [(graphs[i:i + step], path_cover, cls == "trees")
                     for i in range(0, len(graphs), step)]
            recs = [r for part in self._map(_graph_chunk, tasks) for r in part]
        self._cache[key] = (path_cover, recs)
        return recs


@dataclass
class TheoremReport:
    id: str
    statement: str
    graph_class: str
    orders: list[int]
    checked: int = 0
    parts: dict[str, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    extremal: dict[int, list[str]] = field(default_factory=dict)
    extremal_label: str = ""
    ms: float = 0.0

    @property
    def verdict(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def scope_note(self) -> str:
        if not self.orders:
            return "no orders in range"
        return f"verified for {self.orders[0]} <= n <= {self.orders[-1]}"

    def as_dict(self) -> dict:
        out = {
            "id": self.id,
            "paper_ref": self.statement,
            "class": self.graph_class,
            "orders": self.orders,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "verdict": self.verdict,
            "ms": round(self.ms, 1),
            "scope": self.scope_note(),
            "parts": self.parts,
        }
        if self.extremal_label:
            out["extremal"] = {
                "label": self.extremal_label,
                "graphs": {str(k): v for k, v in self.extremal.items()},
            }
        return out


def _tally(report: TheoremReport, outcome: Outcome) -> list[str]:
    failed = []
    for part, applicable, holds in outcome:
        stats = report.parts.setdefault(part, {"applicable": 0, "failed": 0})
        if applicable:
            stats["applicable"] += 1
        if not holds:
            stats["failed"] += 1
            failed.append(part)
    return failed


def run_check(
    check_id: str,
    max_order: int | None = None,
    jobs: int | None = None,
    sweep: Sweep | None = None,
) -> TheoremReport:
    try:
        check = REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check {check_id!r}") from None
    cls = check.graph_class
    cap = DEFAULT_CAPS[cls] if max_order is None else max_order
    if cap > MAX_CAPS[cls]:
        raise CapExceededError(f"{check_id}: order {cap} above the {cls} cap {MAX_CAPS[cls]}")
    sweep = sweep or Sweep(jobs)
    first = max(CLASS_MIN_ORDER[cls], check.min_order)
    report = TheoremReport(check.id, check.statement, cls, list(range(first, cap + 1)),
                           extremal_label=check.extremal_label)
    start = time.perf_counter()
    for n in report.orders:
        if check.family is not None:
            outcome = check.family(n)
            report.checked += 1
            failed = _tally(report, outcome)
            if failed:
                report.counterexamples.append({"graph6": None, "detail": {"n": n, "failed": failed}})
            continue
        for rec in sweep.records(cls, n, check.needs_path_cover):
            outcome = check.predicate(rec)
            if not outcome:
                continue
            report.checked += 1
            failed = _tally(report, outcome)
            if failed:
                detail = rec.detail()
                detail["failed"] = failed
                detail["tags"] = sorted_tags(classify(_graph_of(rec)))
                report.counterexamples.append({"graph6": rec.graph6, "detail": detail})
            if check.extremal is not None and check.extremal(rec):
                report.extremal.setdefault(n, []).append(rec.graph6)
    report.ms = (time.perf_counter() - start) * 1000
    return report


def _graph_of(rec: GraphRecord) -> Graph:
    return parse_graph6(rec.graph6)


def run_all(
    caps: dict[str, int] | None = None,
    jobs: int | None = None,
    ids: Iterable[str] | None = None,
) -> list[TheoremReport]:
    merged = dict(DEFAULT_CAPS)
    merged.update(caps or {})
    sweep = Sweep(jobs)
    selected = list(ids) if ids is not None else list(REGISTRY)
    return [run_check(i, merged[REGISTRY[i].graph_class], sweep=sweep) for i in selected]


def all_passed(reports: Iterable[TheoremReport]) -> bool:
    return all(r.passed for r in reports)


def format_table(reports: list[TheoremReport]) -> str:
    lines = [
        "Finite verification: each statement is checked on every graph of its class",
        "up to the order shown. This is evidence for n <= cap, not a proof.",
        "",
        f"{'id':<4} {'class':<9} {'orders':<7} {'checked':>8} {'cex':>5} {'verdict':<7} {'ms':>9}",
    ]
    for r in reports:
        orders = f"{r.orders[0]}-{r.orders[-1]}" if r.orders else "-"
        lines.append(
            f"{r.id:<4} {r.graph_class:<9} {orders:<7} {r.checked:>8} "
            f"{len(r.counterexamples):>5} {r.verdict:<7} {r.ms:>9.1f}"
        )
        for ex in r.counterexamples[:5]:
            lines.append(f"     counterexample {ex['graph6']}: {ex['detail']}")
        for n, g6s in sorted(r.extremal.items()):
            lines.append(f"     {r.extremal_label} at n={n}: {' '.join(g6s)}")
    return "\n".join(lines)


__all__ = [
    "DEFAULT_CAPS",
    "REGISTRY",
    "GraphRecord",
    "Sweep",
    "TheoremCheck",
    "TheoremReport",
    "all_passed",
    "format_table",
    "make_record",
    "run_all",
    "run_check",
]

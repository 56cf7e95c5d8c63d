"""Color-change dynamics and the exact zero forcing number.

A black vertex with exactly one white neighbour turns that neighbour black.
:func:`closure` records the synchronous round-by-round trace, the solver
scans vertex subsets by size using the compiled kernels when available.
"""

from __future__ import annotations

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

from ._backend import kernels
from .graph import (
    CANONICAL_CAP,
    Graph,
    GraphError,
    VertexSet,
    bits_of,
    canonical_form,
    components,
    induced_mask,
    is_connected,
)

log = logging.getLogger(__name__)

# Number of white neighbours a black vertex may have and still force.  The
# standard rule is 1; 2 is a deliberately broken rule used for mutation tests.
_max_white = 2 if os.environ.get("ZFGRAPH_MUTANT_RULE") else 1

_z_memo: dict[tuple[int, bytes], int] = {}
_z_labeled: dict[tuple[int, tuple[int, ...]], int] = {}


def rule_threshold() -> int:
    return _max_white


def set_rule_threshold(max_white: int) -> None:
    global _max_white
    if max_white < 1:
        raise ValueError("threshold must be at least 1")
    _max_white = max_white


@contextmanager
def weakened_rule(max_white: int = 2) -> Iterator[None]:
    """Temporarily let black vertices force up to ``max_white`` white neighbours."""
    previous = _max_white
    set_rule_threshold(max_white)
    try:
        yield
    finally:
        set_rule_threshold(previous)


def clear_cache() -> None:
    _z_memo.clear()
    _z_labeled.clear()


@dataclass(frozen=True)
class ForcingTrace:
    initial: VertexSet
    rounds: tuple[tuple[tuple[int, int], ...], ...]
    final_black: VertexSet

    @property
    def round_count(self) -> int:
        return len(self.rounds)

    def forces(self) -> list[tuple[int, int]]:
        return [pair for rnd in self.rounds for pair in rnd]

    def chains(self) -> list[list[int]]:
        """Forcing chains, one per initial vertex that starts a chain, then singletons."""
        nxt = dict(self.forces())
        chains = []
        for v in self.initial:
            chain = [v]
            while chain[-1] in nxt:
                chain.append(nxt[chain[-1]])
            chains.append(chain)
        return chains

    def as_dict(self) -> dict:
        return {
            "initial": self.initial.to_list(),
            "rounds": [[list(p) for p in rnd] for rnd in self.rounds],
            "round_count": self.round_count,
            "final_black": self.final_black.to_list(),
        }


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise GraphError(f"vertex set of order {s.n} used with graph of order {g.n}")


def closure(g: Graph, s: VertexSet) -> ForcingTrace:
    """Apply the color-change rule in synchronous rounds until nothing changes.

    Every force valid at the start of a round is applied in that round.  When
    several black vertices could force the same white vertex only the
    lowest-index forcer is recorded.  Pairs are listed by ascending forcer.
    """
    _check_subset(g, s)
    black = s.bits
    rounds = []
    while True:
        forced_now: dict[int, int] = {}
        for v in bits_of(black):
            white = g.adj[v] & ~black
            if white and white.bit_count() <= _max_white:
                for u in bits_of(white):
                    forced_now.setdefault(u, v)
        if not forced_now:
            break
        pairs = sorted((v, u) for u, v in forced_now.items())
        rounds.append(tuple(pairs))
        for u in forced_now:
            black |= 1 << u
    return ForcingTrace(s, tuple(rounds), VertexSet(black, g.n))


def derived_set(g: Graph, s: VertexSet) -> VertexSet:
    _check_subset(g, s)
    return VertexSet(kernels.derived_set(g.adj, g.n, s.bits, _max_white), g.n)


def is_zero_forcing_set(g: Graph, s: VertexSet) -> bool:
    _check_subset(g, s)
    return kernels.derived_set(g.adj, g.n, s.bits, _max_white) == g.full_mask


def propagation_rounds(g: Graph, s: VertexSet) -> int:
    trace = closure(g, s)
    if trace.final_black.bits != g.full_mask:
        raise GraphError("initial set is not a zero forcing set")
    return trace.round_count


# -- lower bounds -------------------------------------------------------------


def delta_lower_bound(g: Graph) -> int:
    """Minimum degree; a lone vertex has Z = 1 by convention so K1 returns 1."""
    if g.n == 1:
        return 1
    return min(g.degrees())


def clique_lower_bound(g: Graph) -> int:
    return kernels.max_clique(g.adj, g.n) - 1


def cut_vertices(g: Graph) -> list[int]:
    full = g.full_mask
    return [v for v in range(g.n) if len(components(g, full & ~(1 << v))) > 1]


def cut_vertex_bound(g: Graph) -> int:
    """Best bound ``1 - k + sum Z(G_i)`` over cut vertices, 0 if there are none.

    ``G_i`` is a component of ``g - v`` with ``v`` added back.
    """
    if not is_connected(g):
        raise GraphError("cut-vertex bound needs a connected graph")
    full = g.full_mask
    best = 0
    for v in range(g.n):
        parts = components(g, full & ~(1 << v))
        if len(parts) < 2:
            continue
        total = 1 - len(parts)
        for part in parts:
            total += _z_value(induced_mask(g, part | 1 << v))
        best = max(best, total)
    return best


def _z_value(g: Graph) -> int:
    # exact-labeling lookup first; canonical form only on a miss
    fast = (_max_white, g.adj)
    z = _z_labeled.get(fast)
    if z is not None:
        return z
    if g.n > CANONICAL_CAP:
        z = zero_forcing_number(g).z
    else:
        key = (_max_white, canonical_form(g))
        z = _z_memo.get(key)
        if z is None:
            z = _z_memo[key] = zero_forcing_number(g).z
    _z_labeled[fast] = z
    return z


# -- solver ---------------------------------------------------------------------


@dataclass(frozen=True)
class ZBounds:
    delta: int
    clique: int
    cut_vertex: int
    path_cover: int | None = None

    def best(self) -> int:
        vals = [self.delta, self.clique, self.cut_vertex]
        if self.path_cover is not None:
            vals.append(self.path_cover)
        return max(vals)

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "clique": self.clique,
            "cut_vertex": self.cut_vertex,
            "path_cover": self.path_cover,
        }


@dataclass(frozen=True)
class ZResult:
    z: int
    witness: VertexSet
    bounds: ZBounds
    subsets_tested: int
    bound_violated: bool = field(default=False)

    def binding_bounds(self) -> list[str]:
        return [name for name, val in self.bounds.as_dict().items() if val == self.z]

    def as_dict(self) -> dict:
        return {
            "z": self.z,
            "witness": self.witness.to_list(),
            "bounds": self.bounds.as_dict(),
            "subsets_tested": self.subsets_tested,
        }


def lower_bounds(g: Graph, with_path_cover: bool = False) -> ZBounds:
    cut = cut_vertex_bound(g) if g.n > 2 and is_connected(g) else 0
    pc = None
    if with_path_cover:
        from .pathcover import path_cover_number

        pc = path_cover_number(g)[0]
    return ZBounds(delta_lower_bound(g), clique_lower_bound(g), cut, pc)


def zero_forcing_number(g: Graph, with_path_cover: bool = False) -> ZResult:
    """Exact Z(G) with the lexicographically least minimum witness.

    The scan starts at the best lower bound ``L``.  All subsets of size
    ``L - 1`` are checked first, which certifies (by monotonicity) that no
    smaller set forces; should one force anyway the bound is reported as
    violated and the search restarts from size 1.
    """
    bounds = lower_bounds(g, with_path_cover)
    start = max(1, bounds.best())
    tested = 0
    violated = False
    if start > 1:
        mask, count = kernels.first_forcing_subset(g.adj, g.n, start - 1, _max_white)
        tested += count
        if mask >= 0:
            log.warning("lower bound %d beaten by a forcing set of size %d", start, start - 1)
            violated = True
            start = 1
    for k in range(start, g.n + 1):
        mask, count = kernels.first_forcing_subset(g.adj, g.n, k, _max_white)
        tested += count
        if mask >= 0:
            return ZResult(k, VertexSet(mask, g.n), bounds, tested, violated)
    raise AssertionError("the full vertex set always forces")  # pragma: no cover


def zero_forcing_brute(g: Graph) -> int:
    """Reference Z(G): plain scan from size 0 with no bounds."""
    for k in range(g.n + 1):
        if kernels.first_forcing_subset(g.adj, g.n, k, _max_white)[0] >= 0:
            return k
    raise AssertionError("unreachable")  # pragma: no cover


def z(g: Graph) -> int:
    return zero_forcing_number(g).z

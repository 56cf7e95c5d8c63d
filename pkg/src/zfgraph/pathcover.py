"""Induced path covers.

A cover here is a partition of the vertex set into vertex sequences, each of
which is a path of the graph with no chords.  Single vertices count as paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .graph import CapExceededError, Graph, GraphError
from .structure import is_tree

BRUTE_FORCE_CAP = 12


@dataclass(frozen=True)
class PathPartition:
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts) -> "PathPartition":
        return cls(tuple(tuple(p) for p in parts))

    def __len__(self) -> int:
        return len(self.parts)

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def is_induced_path_partition(g: Graph, p: PathPartition) -> bool:
    seen = 0
    for part in p.parts:
        if not part:
            return False
        mask = 0
        for v in part:
            if not 0 <= v < g.n or mask >> v & 1:
                return False
            mask |= 1 << v
        if seen & mask:
            return False
        seen |= mask
        for i, v in enumerate(part):
            expected = 0
            if i > 0:
                expected |= 1 << part[i - 1]
            if i + 1 < len(part):
                expected |= 1 << part[i + 1]
            if g.adj[v] & mask != expected:
                return False
    return seen == g.full_mask


def path_cover_number(g: Graph, cap: int = BRUTE_FORCE_CAP) -> tuple[int, PathPartition]:
    """Exact P(G) by branch and bound, with a witness partition."""
    if g.n > cap:
        raise CapExceededError(f"path cover brute force capped at order {cap}, got {g.n}")
    count, paths = kernels.path_cover(g.adj, g.n)
    return count, PathPartition.of(paths)


def path_cover_number_tree(t: Graph) -> tuple[int, PathPartition]:
    """P(T) for a tree in linear time.

    Post-order greedy: a vertex joins up to two children that are still
    chain ends; it stays open to its parent only if it joined fewer than two.
    """
    if not is_tree(t):
        raise GraphError("input is not a tree")
    n = t.n
    parent = [-1] * n
    order = [0]
    seen = 1
    for v in order:
        for u in range(n):
            if t.adj[v] >> u & 1 and not seen >> u & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
    open_end = [True] * n
    links: list[list[int]] = [[] for _ in range(n)]
    for v in reversed(order):
        kids = [u for u in range(n) if parent[u] == v and open_end[u]]
        for u in kids[:2]:
            links[v].append(u)
            links[u].append(v)
        open_end[v] = len(kids) < 2
    parts = []
    done = [False] * n
    for v in range(n):
        if done[v] or len(links[v]) == 2:
            continue
        seq = [v]
        done[v] = True
        prev, cur = -1, v
        while True:
            nxt = [u for u in links[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
            done[cur] = True
        parts.append(seq)
    return len(parts), PathPartition.of(parts)

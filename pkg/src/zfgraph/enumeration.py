"""Graph streams over the classes the theorem checks quantify over.

Labeled graphs are indexed by an edge mask whose bit ``k`` is the ``k``-th
vertex pair in graph6 column order, so stream order is numeric mask order.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .graph import (
    CapExceededError,
    Graph,
    canonical_graph,
    complement,
    emit_graph6,
    is_connected,
)

LABELED_CAP = 7
TREE_CAP = 12
UNICYCLIC_DEDUPE_CAP = 9
UNICYCLIC_CAP = 10

CLASSES = ("all", "connected", "co-connected", "trees", "unicyclic")


def pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs or pair_list(n)
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return Graph(n, tuple(rows))


def edge_mask(g: Graph) -> int:
    mask = 0
    for k, (i, j) in enumerate(pair_list(g.n)):
        if g.adj[i] >> j & 1:
            mask |= 1 << k
    return mask


def labeled_graphs(
    n: int, connected: bool = False, co_connected: bool = False, cap: int = LABELED_CAP
) -> Iterator[Graph]:
    if not 1 <= n <= cap:
        raise CapExceededError(f"labeled sweep needs 1 <= n <= {cap}, got {n}")
    pairs = pair_list(n)
    for mask in range(1 << len(pairs)):
        g = graph_from_mask(n, mask, pairs)
        if connected and not is_connected(g):
            continue
        if co_connected and not is_connected(complement(g)):
            continue
        yield g


def prufer_decode(seq: tuple[int, ...] | list[int], n: int) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    rows = [0] * n
    for v in seq:
        leaf = degree.index(1)
        rows[leaf] |= 1 << v
        rows[v] |= 1 << leaf
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    rows[u] |= 1 << w
    rows[w] |= 1 << u
    return Graph(n, tuple(rows))


def _check_tree_order(n: int) -> None:
    if not 2 <= n <= TREE_CAP:
        raise CapExceededError(f"tree enumeration needs 2 <= n <= {TREE_CAP}, got {n}")


def _unlabeled_trees(n: int) -> list[Graph]:
    # every tree on n vertices is a tree on n-1 vertices plus one leaf
    reps = {emit_graph6(Graph(2, (2, 1))): Graph(2, (2, 1))}
    for m in range(3, n + 1):
        nxt: dict[str, Graph] = {}
        for t in reps.values():
            for v in range(m - 1):
                rows = list(t.adj) + [1 << v]
                rows[v] |= 1 << (m - 1)
                canon = canonical_graph(Graph(m, tuple(rows)), cap=TREE_CAP)
                nxt.setdefault(emit_graph6(canon), canon)
        reps = nxt
    return [reps[k] for k in sorted(reps)]


def trees(n: int, dedupe: bool = True) -> Iterator[Graph]:
    """All trees of order n.

    Without dedupe: every labeled tree, decoded from Prüfer sequences in
    lexicographic order.  With dedupe: one canonical representative per
    isomorphism class, sorted by canonical graph6.
    """
    _check_tree_order(n)
    if dedupe:
        yield from _unlabeled_trees(n)
        return
    if n == 2:
        yield Graph(2, (2, 1))
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def unicyclic(n: int, dedupe: bool = True) -> Iterator[Graph]:
    """Connected unicyclic graphs of order n: each unlabeled tree plus one absent edge."""
    cap = UNICYCLIC_DEDUPE_CAP if dedupe else UNICYCLIC_CAP
    if not 3 <= n <= cap:
        raise CapExceededError(f"unicyclic enumeration needs 3 <= n <= {cap}, got {n}")
    seen: dict[str, Graph] = {}
    for t in _unlabeled_trees(n):
        for i, j in pair_list(n):
            if t.adj[i] >> j & 1:
                continue
            rows = list(t.adj)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            g = Graph(n, tuple(rows))
            if not dedupe:
                yield g
                continue
            canon = canonical_graph(g, cap=cap)
            seen.setdefault(emit_graph6(canon), canon)
    if dedupe:
        for key in sorted(seen):
            yield seen[key]


def stream(cls: str, n: int, dedupe: bool = True) -> Iterator[Graph]:
    if cls == "all":
        return labeled_graphs(n)
    if cls == "connected":
        return labeled_graphs(n, connected=True)
    if cls == "co-connected":
        return labeled_graphs(n, connected=True, co_connected=True)
    if cls == "trees":
        return trees(n, dedupe)
    if cls == "unicyclic":
        return unicyclic(n, dedupe)
    raise ValueError(f"unknown graph class {cls!r}; choose from {', '.join(CLASSES)}")

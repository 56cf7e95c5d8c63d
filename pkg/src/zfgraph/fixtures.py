"""Named built-in graphs, including the illustrated extremal families.

Label maps (order ``n``):

``fig2-tree``   subdivided star.  0 = hub v, 1 = s, 2.. = leaves l1..l_{n-2};
                v ~ s, s ~ l1, v ~ l2..l_{n-2}.
``fig3a``       C5 (v1..v5 = 0..4) with n-5 leaves on v1.
``fig3b``       C5 with leaves split between v1 and v2 (v1 gets the extra one).
``fig3c``       C4 (v1..v4 = 0..3) with n-4 leaves on v1.
``fig3d``       C4 with leaves split between v1 and v2.
``fig4a``       triangle v1 v2 v3 = 0,1,2; s = 3 with v1 ~ s; s carries n-4 leaves.
``fig4b``       as fig4a but v1 also carries leaves (split with s).
``fig4c``       triangle with leaves on v1 and v3.
``fig4d``       triangle with leaves on v1, v2 and v3.
``fig5``        same family as fig4a with its own labels: 0 = v1, 1 = v2,
                2.. = l1..l_{n-2}; triangle v1 l1 l2, v1 ~ v2, v2 ~ l3..l_{n-2}.
``bowtie``      two triangles sharing vertex 0 (order 5).
"""

from __future__ import annotations

from typing import Callable

from .graph import (
    Graph,
    GraphError,
    complement,
    complete_graph,
    cycle_graph,
    from_edge_list,
    path_graph,
    star_graph,
)


def _with_leaves(base: list[tuple[int, int]], size: int, hosts: list[tuple[int, int]]) -> Graph:
    """Attach ``count`` pendant leaves to each ``(host, count)``."""
    edges = list(base)
    nxt = size
    for host, count in hosts:
        for _ in range(count):
            edges.append((host, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def _split(total: int, parts: int) -> list[int]:
    return [total // parts + (1 if i < total % parts else 0) for i in range(parts)]


def _need(n: int, least: int, name: str) -> None:
    if n < least:
        raise GraphError(f"fixture {name} needs order >= {least}, got {n}")


def subdivided_star(n: int) -> Graph:
    _need(n, 4, "fig2-tree")
    edges = [(0, 1), (1, 2)] + [(0, i) for i in range(3, n)]
    return from_edge_list(n, edges)


def c3_star_leaf_sum(n: int) -> Graph:
    _need(n, 5, "fig4a")
    return _with_leaves([(0, 1), (1, 2), (0, 2), (0, 3)], 4, [(3, n - 4)])


def fig5(n: int) -> Graph:
    _need(n, 5, "fig5")
    edges = [(0, 2), (0, 3), (2, 3), (0, 1)] + [(1, i) for i in range(4, n)]
    return from_edge_list(n, edges)


def c3_star_center_sum(n: int) -> Graph:
    """Triangle glued at the center of a star (Delta = n - 1)."""
    _need(n, 4, "c3-star-center")
    return _with_leaves([(0, 1), (1, 2), (0, 2)], 3, [(0, n - 3)])


def fig3a(n: int) -> Graph:
    _need(n, 6, "fig3a")
    return _with_leaves([(i, (i + 1) % 5) for i in range(5)], 5, [(0, n - 5)])


def fig3b(n: int) -> Graph:
    _need(n, 7, "fig3b")
    a, b = _split(n - 5, 2)
    return _with_leaves([(i, (i + 1) % 5) for i in range(5)], 5, [(0, a), (1, b)])


def fig3c(n: int) -> Graph:
    _need(n, 5, "fig3c")
    return _with_leaves([(i, (i + 1) % 4) for i in range(4)], 4, [(0, n - 4)])


def fig3d(n: int) -> Graph:
    _need(n, 6, "fig3d")
    a, b = _split(n - 4, 2)
    return _with_leaves([(i, (i + 1) % 4) for i in range(4)], 4, [(0, a), (1, b)])


def fig4b(n: int) -> Graph:
    _need(n, 6, "fig4b")
    a, b = _split(n - 4, 2)
    return _with_leaves([(0, 1), (1, 2), (0, 2), (0, 3)], 4, [(3, a), (0, b)])


def fig4c(n: int) -> Graph:
    _need(n, 5, "fig4c")
    a, b = _split(n - 3, 2)
    return _with_leaves([(0, 1), (1, 2), (0, 2)], 3, [(0, a), (2, b)])


def fig4d(n: int) -> Graph:
    _need(n, 6, "fig4d")
    a, b, c = _split(n - 3, 3)
    return _with_leaves([(0, 1), (1, 2), (0, 2)], 3, [(0, a), (1, b), (2, c)])


def bowtie(n: int = 5) -> Graph:
    if n != 5:
        raise GraphError("bowtie has order 5")
    return from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


FIXTURES: dict[str, tuple[Callable[[int], Graph], int]] = {
    "fig2-tree": (subdivided_star, 7),
    "fig3a": (fig3a, 7),
    "fig3b": (fig3b, 8),
    "fig3c": (fig3c, 6),
    "fig3d": (fig3d, 7),
    "fig4a": (c3_star_leaf_sum, 6),
    "fig4b": (fig4b, 7),
    "fig4c": (fig4c, 6),
    "fig4d": (fig4d, 7),
    "fig5": (fig5, 6),
    "c3-star-center": (c3_star_center_sum, 6),
    "bowtie": (bowtie, 5),
    "path": (path_graph, 4),
    "cycle": (cycle_graph, 6),
    "cycle-complement": (lambda n: complement(cycle_graph(n)), 6),
    "complete": (complete_graph, 4),
    "star": (lambda n: star_graph(n - 1), 5),
}


def fixture(name: str, order: int | None = None) -> Graph:
    try:
        build, default = FIXTURES[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
    return build(default if order is None else order)

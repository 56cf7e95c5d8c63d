"""Structural predicates and measures for the extremal characterizations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from ._backend import kernels
from .graph import Graph, GraphError, VertexSet, bits_of, distance_matrix, is_connected


class ClassLabel(str, enum.Enum):
    PATH = "Path"
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    STAR = "Star"
    SUBDIVIDED_STAR_EDGE = "SubdividedStarEdge"
    C3_STAR_LEAF_SUM = "C3StarLeafSum"
    TREE = "Tree"
    UNICYCLIC = "Unicyclic"
    OTHER = "Other"


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    return is_tree(g) and max(g.degrees()) <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_complete(g: Graph) -> bool:
    return all(d == g.n - 1 for d in g.degrees())


def is_star(g: Graph) -> bool:
    """K_{1,m} with m >= 2 (so P3 counts, K2 does not)."""
    return g.n >= 3 and is_tree(g) and max(g.degrees()) == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    return g.edge_count == g.n and is_connected(g)


def unique_cycle(g: Graph) -> list[int]:
    """Vertices of the only cycle, in traversal order starting at the least one."""
    if not is_unicyclic(g):
        raise GraphError("graph is not unicyclic")
    alive = g.full_mask
    degs = g.degrees()
    leaves = [v for v in range(g.n) if degs[v] == 1]
    while leaves:
        v = leaves.pop()
        alive &= ~(1 << v)
        for u in bits_of(g.adj[v] & alive):
            degs[u] -= 1
            if degs[u] == 1:
                leaves.append(u)
    start = (alive & -alive).bit_length() - 1
    cycle = [start]
    prev = -1
    cur = start
    while True:
        nbrs = [u for u in bits_of(g.adj[cur] & alive) if u != prev]
        nxt = min(nbrs) if prev == -1 else nbrs[0]
        if nxt == start:
            return cycle
        cycle.append(nxt)
        prev, cur = cur, nxt


def max_clique_size(g: Graph) -> int:
    return kernels.max_clique(g.adj, g.n)


def has_induced_p4(g: Graph) -> bool:
    return induced_p4(g) is not None


def induced_p4(g: Graph) -> tuple[int, ...] | None:
    """Some 4-subset inducing a path on four vertices, or None."""
    for quad in combinations(range(g.n), 4):
        mask = sum(1 << v for v in quad)
        # among 4-vertex graphs only P4 has induced degrees 1,1,2,2
        if sorted((g.adj[v] & mask).bit_count() for v in quad) == [1, 1, 2, 2]:
            return quad
    return None


@dataclass(frozen=True)
class MajorVertexReport:
    major: VertexSet
    terminal_degree: dict[int, int]
    exterior_major: VertexSet

    def as_dict(self) -> dict:
        return {
            "major": self.major.to_list(),
            "terminal_degree": {str(k): v for k, v in sorted(self.terminal_degree.items())},
            "exterior_major": self.exterior_major.to_list(),
        }


def major_vertex_report(g: Graph) -> MajorVertexReport:
    """Major vertices (degree >= 3) and their terminal degrees.

    A leaf is terminal for a major vertex only when that vertex is strictly
    closer to it than every other major vertex; a tie assigns it to nobody.
    """
    if not is_connected(g):
        raise GraphError("major vertex report needs a connected graph")
    degs = g.degrees()
    major = [v for v in range(g.n) if degs[v] >= 3]
    terminal = {v: 0 for v in major}
    if major:
        dist = distance_matrix(g)
        for leaf in (v for v in range(g.n) if degs[v] == 1):
            ranked = sorted((dist[leaf][m], m) for m in major)
            if len(ranked) == 1 or ranked[0][0] < ranked[1][0]:
                terminal[ranked[0][1]] += 1
    exterior = [v for v in major if terminal[v] > 0]
    return MajorVertexReport(
        VertexSet.of(g.n, major), terminal, VertexSet.of(g.n, exterior)
    )


def is_subdivided_star_edge(g: Graph) -> bool:
    """K_{1,n-2} with one edge subdivided once, n >= 5."""
    n = g.n
    if n < 5 or not is_tree(g):
        return False
    degs = g.degrees()
    if sorted(degs) != [1] * (n - 2) + [2, n - 2]:
        return False
    hub = degs.index(n - 2)
    mid = degs.index(2)
    return g.has_edge(hub, mid)


def is_c3_star_leaf_sum(g: Graph) -> bool:
    """Triangle glued at a leaf of the star K_{1,n-3}, n >= 6.

    Equivalently: a unicyclic graph whose cycle is a triangle ``a, b, c`` with
    ``deg a = 3``, ``deg b = deg c = 2``, and ``a`` adjacent to a vertex of
    degree ``n - 3`` whose other neighbours are all leaves.
    """
    n = g.n
    if n < 6 or not is_unicyclic(g):
        return False
    cyc = unique_cycle(g)
    if len(cyc) != 3:
        return False
    degs = g.degrees()
    if sorted(degs[v] for v in cyc) != [2, 2, 3]:
        return False
    a = next(v for v in cyc if degs[v] == 3)
    (hub,) = [u for u in bits_of(g.adj[a]) if u not in cyc]
    if degs[hub] != n - 3:
        return False
    return all(degs[u] == 1 for u in bits_of(g.adj[hub]) if u != a)


def classify(g: Graph) -> set[ClassLabel]:
    tags = set()
    if is_path(g):
        tags.add(ClassLabel.PATH)
    if is_cycle(g):
        tags.add(ClassLabel.CYCLE)
    if is_complete(g):
        tags.add(ClassLabel.COMPLETE)
    if is_star(g):
        tags.add(ClassLabel.STAR)
    if is_tree(g):
        tags.add(ClassLabel.TREE)
    if is_unicyclic(g):
        tags.add(ClassLabel.UNICYCLIC)
    if is_subdivided_star_edge(g):
        tags.add(ClassLabel.SUBDIVIDED_STAR_EDGE)
    if is_c3_star_leaf_sum(g):
        tags.add(ClassLabel.C3_STAR_LEAF_SUM)
    if not tags:
        tags.add(ClassLabel.OTHER)
    return tags


def sorted_tags(tags: set[ClassLabel]) -> list[str]:
    order = list(ClassLabel)
    return [t.value for t in sorted(tags, key=order.index)]

"""Immutable simple graphs stored as bitset adjacency rows.

Vertices are the integers ``0..n-1``; row ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.  Everything here is a pure function of its
arguments, so graphs can be shared freely between threads and processes.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62
CANONICAL_CAP = 10


class GraphError(ValueError):
    """Invalid graph construction or an unmet precondition."""


class Graph6Error(GraphError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (byte {position})"
        super().__init__(message)


class Graph6LongFormError(Graph6Error):
    """graph6 strings with the multi-byte order header are not supported."""


class CapExceededError(GraphError):
    """Input order exceeds a configured search or enumeration cap."""


def _popcount(x: int) -> int:
    return x.bit_count()


def bits_of(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` held as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} exceeds order {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for order {n}")
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return _popcount(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits_of(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits_of(self.adj[v] & ((1 << v) - 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph whose vertex ``perm[v]`` plays the role of old ``v``."""
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        new_row = 0
        for u in bits_of(row):
            new_row |= 1 << perm[u]
        rows[perm[v]] = new_row
    return Graph(g.n, tuple(rows))


# -- connectivity and distances ---------------------------------------------


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by least vertex."""
    left = g.full_mask if within is None else within
    comps = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(g.adj, start, left)
        comps.append(comp)
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return reach(g.adj, 0, g.full_mask) == g.full_mask


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in bits_of(g.adj[v]):
            if dist[u] == math.inf:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> float:
    """Largest pairwise distance; ``math.inf`` for a disconnected graph."""
    if not is_connected(g):
        return math.inf
    return max(max(row) for row in distance_matrix(g))


@dataclass(frozen=True)
class GraphMetrics:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    edge_count: int
    is_connected: bool
    diameter: float

    def as_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "edge_count": self.edge_count,
            "is_connected": self.is_connected,
            "diameter": "inf" if math.isinf(self.diameter) else int(self.diameter),
        }


def graph_metrics(g: Graph) -> GraphMetrics:
    degs = tuple(g.degrees())
    return GraphMetrics(
        degrees=degs,
        min_degree=min(degs),
        max_degree=max(degs),
        edge_count=sum(degs) // 2,
        is_connected=is_connected(g),
        diameter=diameter(g),
    )


def induced_subgraph(g: Graph, w: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``w`` plus the old-to-new index map.

    New labels follow the increasing order of the old ones.
    """
    verts = list(w) if isinstance(w, VertexSet) else sorted(set(w))
    if not verts:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in bits_of(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows)), index


def induced_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, VertexSet(mask, g.n))[0]


# -- graph6 -----------------------------------------------------------------


def _pair_bits(g: Graph) -> Iterator[int]:
    # Upper triangle in column order: x[0,1], x[0,2], x[1,2], x[0,3], ...
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            yield row >> i & 1


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise Graph6LongFormError(f"order {g.n} needs the long graph6 header")
    out = [chr(g.n + 63)]
    bits = list(_pair_bits(g))
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", pos)
    if s[0] == "~":
        raise Graph6LongFormError("long-form graph6 order header is not supported", 0)
    n = ord(s[0]) - 63
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a valid graph", 0)
    body = s[1:]
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"order {n} needs {expected} data bytes, found {len(body)}", 1 + min(len(body), expected)
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if npairs % 6:
        tail = ord(body[-1]) - 63
        if tail & ((1 << (6 - npairs % 6)) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, tuple(rows))


# -- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, parts) for no, parts in lines if parts and not parts[0].startswith("#")]
    if not lines:
        raise GraphError("edge list is empty")
    no, head = lines[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphError(f"line {no}: expected header 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for no, parts in body:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphError(f"line {no}: expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {no}: invalid edge ({u}, {v}) for order {n}")
        edges.append((u, v))
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# -- canonical form ---------------------------------------------------------


def _refined_colors(g: Graph) -> list[int]:
    colors = g.degrees()
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits_of(g.adj[v]))))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def canonical_labeling(g: Graph, cap: int = CANONICAL_CAP) -> list[int]:
    """Permutation ``perm`` (old -> new) such that ``relabel(g, perm)`` is canonical.

    Searches vertex orders that list refined degree classes in a fixed
    order and keeps the one with the lexicographically least upper-triangle
    bit string.  Interchangeable vertices (same neighbourhood up to each
    other) are tried only once per search node.
    """
    n = g.n
    if n > cap:
        raise CapExceededError(f"canonical form capped at order {cap}, got {n}")
    adj = g.adj
    colors = _refined_colors(g)
    slot_color = sorted(colors)
    twins = [
        [u != v and colors[u] == colors[v] and adj[u] & ~(1 << v) == adj[v] & ~(1 << u)
         for v in range(n)]
        for u in range(n)
    ]
    order: list[int] = []
    cols: list[int] = []
    best: list[int] | None = None
    best_order: list[int] = []

    def column(v: int) -> int:
        value = 0
        for u in order:
            value = value << 1 | (adj[v] >> u & 1)
        return value

    def dfs(placed: int) -> None:
        nonlocal best, best_order
        j = len(order)
        if j == n:
            if best is None or cols < best:
                best = cols.copy()
                best_order = order.copy()
            return
        want = slot_color[j]
        tried: list[int] = []
        for v in range(n):
            if placed >> v & 1 or colors[v] != want:
                continue
            if any(twins[u][v] for u in tried):
                continue
            tried.append(v)
            col = column(v)
            if best is not None:
                # columns 0..j-1 are <= best; only an equal prefix can prune here
                if cols == best[:j] and col > best[j]:
                    continue
            order.append(v)
            cols.append(col)
            dfs(placed | 1 << v)
            order.pop()
            cols.pop()

    dfs(0)
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return perm


def canonical_graph(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    return relabel(g, canonical_labeling(g, cap))


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return emit_graph6(canonical_graph(g, cap)).encode("ascii")


def is_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Reference isomorphism test trying every vertex permutation."""
    from itertools import permutations

    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = h.adj
    for perm in permutations(range(g.n)):
        if relabel(g, perm).adj == target:
            return True
    return False


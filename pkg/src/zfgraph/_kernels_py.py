"""Pure-Python hot kernels.

Same signatures and results as the compiled ``_kernels`` module; adjacency is
a sequence of int bitset rows.  ``max_white`` is the number of white
neighbours a black vertex may have and still force (1 for the standard rule).
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def derived_set(adj: Sequence[int], n: int, black: int, max_white: int = 1) -> int:
    changed = True
    while changed:
        changed = False
        b = black
        while b:
            low = b & -b
            b ^= low
            white = adj[low.bit_length() - 1] & ~black
            if white and white.bit_count() <= max_white:
                black |= white
                changed = True
    return black


def first_forcing_subset(
    adj: Sequence[int], n: int, k: int, max_white: int = 1
) -> tuple[int, int]:
    """Scan the k-subsets of ``range(n)`` in lexicographic order.

    Returns ``(mask, tested)`` for the first subset whose derived set is
    everything, or ``(-1, tested)`` when no k-subset forces.
    """
    full = (1 << n) - 1
    if k < 0 or k > n:
        return -1, 0
    idx = list(range(k))
    tested = 0
    while True:
        mask = 0
        for i in idx:
            mask |= 1 << i
        tested += 1
        if derived_set(adj, n, mask, max_white) == full:
            return mask, tested
        # advance to the next combination
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return -1, tested
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def max_clique(adj: Sequence[int], n: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, (1 << n) - 1)
    return best


def path_cover(adj: Sequence[int], n: int) -> tuple[int, list[list[int]]]:
    """Minimum partition of the vertices into induced paths (branch and bound).

    Branches on the lowest uncovered vertex ``v`` and on every induced path
    through ``v`` in the uncovered part: the path is grown to the right of
    ``v`` first, then to the left.  A path with ``v`` inside is generated
    only with its right neighbour of ``v`` smaller than the left one.
    """
    best = n + 1
    best_paths: list[list[int]] = []
    stack: list[list[int]] = []

    def cover(uncovered: int, count: int) -> None:
        nonlocal best, best_paths
        if not uncovered:
            if count < best:
                best = count
                best_paths = [p.copy() for p in stack]
            return
        if count + 1 >= best:
            return
        low = uncovered & -uncovered
        v = low.bit_length() - 1
        grow_right(uncovered, count, [v], low)

    def commit(uncovered: int, count: int, seq: list[int], pmask: int) -> None:
        stack.append(seq)
        cover(uncovered & ~pmask, count + 1)
        stack.pop()

    def grow_right(uncovered: int, count: int, seq: list[int], pmask: int) -> None:
        end = seq[-1]
        ext = adj[end] & uncovered & ~pmask
        endbit = 1 << end
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            if adj[w] & pmask == endbit:
                grow_right(uncovered, count, seq + [w], pmask | low)
            if count + 1 >= best:
                return
        if len(seq) == 1:
            commit(uncovered, count, seq, pmask)
        else:
            grow_left(uncovered, count, seq, pmask, 0)

    def grow_left(uncovered: int, count: int, seq: list[int], pmask: int, nleft: int) -> None:
        # seq[0] is the left end; v sits at index nleft
        end = seq[0]
        ext = adj[end] & uncovered & ~pmask
        endbit = 1 << end
        right_nb = seq[nleft + 1]
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            if nleft == 0 and w < right_nb:
                continue
            if adj[w] & pmask == endbit:
                grow_left(uncovered, count, [w] + seq, pmask | low, nleft + 1)
            if count + 1 >= best:
                return
        commit(uncovered, count, seq, pmask)

    cover((1 << n) - 1, 0)
    return best, best_paths

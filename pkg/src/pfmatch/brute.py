"""Backtracking matching counters, the oracle everything else is checked against.

No linear algebra here: the counters repeatedly match the lowest-index
uncovered vertex against each free neighbor.  Vertex sets are bitmasks,
which keeps the intended desk-scale inputs (a few dozen vertices) fast.
"""

from __future__ import annotations

from typing import Iterable

from .graphs import Graph


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _free_mask(g: Graph, excluding: Iterable[int]) -> int:
    mask = (1 << g.n) - 1
    for v in excluding:
        mask &= ~(1 << v)
    return mask


def count_perfect_matchings(g: Graph, excluding: Iterable[int] = ()) -> int:
    """Number of perfect matchings of g (or of g minus `excluding`)."""
    free = _free_mask(g, excluding)
    if bin(free).count("1") % 2:
        return 0
    nbr = _neighbor_masks(g)

    def rec(free: int) -> int:
        if not free:
            return 1
        v = (free & -free).bit_length() - 1
        total = 0
        choices = nbr[v] & free
        while choices:
            wbit = choices & -choices
            choices ^= wbit
            total += rec(free & ~(wbit | (1 << v)))
        return total

    return rec(free)


def has_perfect_matching(g: Graph, excluding: Iterable[int] = ()) -> bool:
    """Early-exit variant of count_perfect_matchings (stops at the first one)."""
    free = _free_mask(g, excluding)
    if bin(free).count("1") % 2:
        return False
    nbr = _neighbor_masks(g)

    def rec(free: int) -> bool:
        if not free:
            return True
        v = (free & -free).bit_length() - 1
        choices = nbr[v] & free
        while choices:
            wbit = choices & -choices
            choices ^= wbit
            if rec(free & ~(wbit | (1 << v))):
                return True
        return False

    return rec(free)


def max_matching_size(g: Graph) -> int:
    """Maximum number of edges in a matching, by memoized branch-and-skip."""
    nbr = _neighbor_masks(g)
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        if not free:
            return 0
        cached = memo.get(free)
        if cached is not None:
            return cached
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        result = best(rest)  # leave v unmatched
        choices = nbr[v] & rest
        while choices:
            wbit = choices & -choices
            choices ^= wbit
            result = max(result, 1 + best(rest & ~wbit))
        memo[free] = result
        return result

    return best((1 << g.n) - 1)


def matchings_by_size(g: Graph) -> list[int]:
    """counts[k] = number of k-edge matchings of g (counts[0] is always 1).

    Enumerates edge subsets with disjointness pruning; meant for the
    coefficient cross-checks on small graphs, not for large inputs.
    """
    edges = sorted(g.edges)
    counts = [0] * (g.n // 2 + 1)

    def rec(i: int, covered: int, size: int) -> None:
        if i == len(edges):
            counts[size] += 1
            return
        rec(i + 1, covered, size)
        u, v = edges[i]
        bits = (1 << u) | (1 << v)
        if not covered & bits:
            rec(i + 1, covered | bits, size + 1)

    rec(0, 0, 0)
    return counts

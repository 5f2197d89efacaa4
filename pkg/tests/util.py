"""Shared test helpers: independent oracles and deterministic generators.

Every oracle here deliberately uses a different algorithm from the code
it checks: cycles come from vertex subsets, matchings from edge subsets,
grid counts from a broken-profile DP, determinants from cofactor
expansion, and characteristic polynomials from exact interpolation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from pfmatch import Graph, OrientedGraph, Tree, validate_tree


# ---------------------------------------------------------------------------
# deterministic randomness (independent of the package's splitmix64 use)
# ---------------------------------------------------------------------------

def bit_stream(seed: int):
    """xorshift64* stream; only used to make test sampling reproducible."""
    state = (seed * 2 + 1) & ((1 << 64) - 1)
    while True:
        state ^= (state >> 12) & ((1 << 64) - 1)
        state = (state ^ (state << 25)) & ((1 << 64) - 1)
        state ^= state >> 27
        yield (state * 0x2545F4914F6CDD1D) & ((1 << 64) - 1)


def random_orientation(g: Graph, seed: int) -> OrientedGraph:
    bits = bit_stream(seed)
    arcs = []
    for u, v in sorted(g.edges):
        arcs.append((u, v) if next(bits) % 2 == 0 else (v, u))
    return OrientedGraph(base=g, arcs=frozenset(arcs))


# ---------------------------------------------------------------------------
# tree enumeration: all isomorphism classes on n vertices
# ---------------------------------------------------------------------------

def _prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    # O(n^2) textbook scan, structurally different from the package's heap decode
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, s), max(leaf, s)))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = [x for x in range(n) if degree[x] == 1]
    edges.append((u, v))
    return edges


def labeled_trees(n: int):
    """Every labeled tree on n vertices, via all Prüfer sequences."""
    if n == 1:
        yield Tree(n=1, edges=frozenset(), root=0, parent=(None,))
        return
    if n == 2:
        yield validate_tree(Graph.from_edges(2, [(0, 1)]))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield validate_tree(Graph.from_edges(n, _prufer_decode(list(seq), n)))


def _ahu_canonical(t: Graph) -> str:
    """Canonical string of an unrooted tree (root at center, sort subtrees)."""
    n = t.n
    if n == 1:
        return "()"
    # peel leaves to find the 1- or 2-vertex center
    degree = [t.degree(v) for v in range(n)]
    alive = set(range(n))
    layer = [v for v in alive if degree[v] == 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in t.adjacency[v]:
                if w in alive:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt

    def rooted(v: int, parent: int) -> str:
        kids = sorted(rooted(w, v) for w in t.adjacency[v] if w != parent)
        return "(" + "".join(kids) + ")"

    return min(rooted(c, -1) for c in alive)


def nonisomorphic_trees(n: int) -> list[Tree]:
    """One representative per isomorphism class of trees on n vertices."""
    seen: dict[str, Tree] = {}
    for t in labeled_trees(n):
        key = _ahu_canonical(t)
        if key not in seen:
            seen[key] = t
    return [seen[k] for k in sorted(seen)]


def trees_up_to(n: int) -> list[Tree]:
    return [t for k in range(1, n + 1) for t in nonisomorphic_trees(k)]


# ---------------------------------------------------------------------------
# oracle: simple cycles counted via vertex subsets
# ---------------------------------------------------------------------------

def cycle_census_by_subsets(g: Graph) -> dict[int, int]:
    """length -> number of simple cycles, one per rotation/reflection class.

    For each vertex subset, counts Hamiltonian cycles of the induced
    subgraph (start fixed at the subset's first vertex, direction fixed
    by comparing the two neighbors of the start).
    """
    counts: dict[int, int] = {}
    for size in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sset = set(subset)
            start = subset[0]

            def ham(path: list[int], used: set[int]) -> int:
                v = path[-1]
                if len(path) == size:
                    return 1 if g.has_edge(v, start) and path[1] < path[-1] else 0
                total = 0
                for w in g.adjacency[v]:
                    if w in sset and w not in used:
                        used.add(w)
                        path.append(w)
                        total += ham(path, used)
                        path.pop()
                        used.remove(w)
                return total

            found = ham([start], {start})
            if found:
                counts[size] = counts.get(size, 0) + found
    return counts


# ---------------------------------------------------------------------------
# oracle: perfect matchings via edge subsets
# ---------------------------------------------------------------------------

def matching_count_by_edge_subsets(g: Graph) -> int:
    if g.n % 2:
        return 0
    total = 0
    for combo in itertools.combinations(sorted(g.edges), g.n // 2):
        seen: set[int] = set()
        for u, v in combo:
            if u in seen or v in seen:
                break
            seen.update((u, v))
        else:
            total += 1
    return total


def induced_subgraph(g: Graph, keep: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(keep)}
    kset = set(keep)
    edges = [(index[u], index[v]) for u, v in g.edges if u in kset and v in kset]
    return Graph.from_edges(len(keep), edges)


# ---------------------------------------------------------------------------
# oracle: grid dimer counts via broken-profile dynamic programming
# ---------------------------------------------------------------------------

def grid_tilings(m: int, n: int) -> int:
    """Domino tilings of the m x n grid, column by column.

    Profiles live on the smaller side (transposing the grid is a graph
    isomorphism), keeping the table at 2^min(m, n) entries.
    """
    if (m * n) % 2:
        return 0
    if m > n:
        m, n = n, m

    def transitions(incoming: int) -> list[int]:
        outs: list[int] = []

        def go(row: int, out: int) -> None:
            if row == m:
                outs.append(out)
                return
            if (incoming >> row) & 1:
                go(row + 1, out)
            else:
                go(row + 1, out | (1 << row))  # horizontal domino into the next column
                if row + 1 < m and not (incoming >> (row + 1)) & 1:
                    go(row + 2, out)  # vertical domino inside this column

        go(0, 0)
        return outs

    table = {profile: transitions(profile) for profile in range(1 << m)}
    dp = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for profile, ways in dp.items():
            for out in table[profile]:
                nxt[out] = nxt.get(out, 0) + ways
        dp = nxt
    return dp.get(0, 0)


# ---------------------------------------------------------------------------
# oracle: determinants by cofactor expansion, char polys by interpolation
# ---------------------------------------------------------------------------

def det_cofactor(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * det_cofactor(minor)
    return total


def char_poly_by_interpolation(mat: list[list[int]]) -> list[int]:
    """Coefficients of det(xI - A), constant first, via n+1 exact evaluations."""
    n = len(mat)
    points = []
    for k in range(n + 1):
        shifted = [[(k if i == j else 0) - mat[i][j] for j in range(n)] for i in range(n)]
        points.append((k, det_cofactor(shifted)))
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(points):
        term = [Fraction(yi)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            new = [Fraction(0)] * (len(term) + 1)
            for p, c in enumerate(term):
                new[p] -= c * xj
                new[p + 1] += c
            term = new
            denom *= xi - xj
        for p, c in enumerate(term):
            coeffs[p] += c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]

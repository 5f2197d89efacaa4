"""Edge orientations, skew adjacency matrices, and the Pfaffian criterion.

The constructors here realize one idea at increasing depth: orient a
graph, place copies side by side with every copy's orientation reversed
relative to its neighbor, and direct all the connecting rungs the same
way.  Applied once to a tree this doubles it; applied layer by layer it
orients P_m x T; applied twice it orients a graph isomorphic to
C_4 x T whose skew adjacency matrix is block-tridiagonal-plus-corners
in the tree's skew adjacency A:

    [[ A,  I,  I,  0],
     [-I, -A,  0,  I],
     [-I,  0, -A, -I],
     [ 0, -I,  I,  A]]

`check_pfaffian` verifies the defining property directly: every nice
even cycle must contain an odd number of arcs agreeing with each
traversal direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .brute import has_perfect_matching
from .errors import (
    EdgeListParseError,
    InvalidCycleError,
    InvalidSizeError,
    OddCycleParityError,
)
from .graphs import (
    DEFAULT_CYCLE_GUARD,
    CycleSeq,
    Graph,
    _payload_lines,
    _sorted_edge,
    cartesian_product,
    enumerate_cycles,
    is_cycle_of,
    path_graph,
    validate_tree,
)

Arc = tuple[int, int]


@dataclass(frozen=True)
class OrientedGraph:
    """A simple graph with exactly one direction chosen per edge."""

    base: Graph
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        undirected = frozenset(_sorted_edge(u, v) for u, v in self.arcs)
        if undirected != self.base.edges or len(self.arcs) != len(self.base.edges):
            raise ValueError("arcs must direct each base edge exactly once")

    @property
    def n(self) -> int:
        return self.base.n

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arcs


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        covered: set[int] = set()
        for u, v in self.edges:
            if _sorted_edge(u, v) not in self.host.edges:
                raise ValueError(f"matching edge ({u}, {v}) is not in the host graph")
            if u in covered or v in covered:
                raise ValueError(f"matching edges share vertex on ({u}, {v})")
            covered.update((u, v))

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.host.n


@dataclass(frozen=True)
class PfaffianReport:
    """Outcome of the nice-even-cycle parity check."""

    passed: bool
    nice_even_cycles: int
    violations: tuple[CycleSeq, ...]

    def __post_init__(self) -> None:
        assert self.passed == (not self.violations)


def orient_lexicographic(g: Graph) -> OrientedGraph:
    """Direct every edge from its lower to its higher endpoint."""
    return OrientedGraph(base=g, arcs=frozenset(g.edges))


def converse(d: OrientedGraph) -> OrientedGraph:
    """Reverse every arc (an involution)."""
    return OrientedGraph(base=d.base, arcs=frozenset((v, u) for u, v in d.arcs))


def orient_double(d: OrientedGraph) -> OrientedGraph:
    """Orient P_2 x G: left copy keeps d, right copy gets its converse,
    and every rung v .. n+v points left to right."""
    n = d.n
    product = cartesian_product(path_graph(2), d.base)
    arcs: set[Arc] = set()
    for u, v in d.arcs:
        arcs.add((u, v))            # left copy: as oriented
        arcs.add((n + v, n + u))    # right copy: reversed
    for j in range(n):
        arcs.add((j, n + j))
    return OrientedGraph(base=product, arcs=frozenset(arcs))


def orient_layered(d: OrientedGraph, m: int) -> OrientedGraph:
    """Orient P_m x T by stacking m copies of the tree orientation d.

    Layer i (0-based) keeps d when i is even and its converse when i is
    odd; every rung points from layer i to layer i+1.  orient_layered(d, 2)
    coincides with orient_double(d), and m = 1 returns d itself.
    """
    validate_tree(d.base)
    if m < 1:
        raise InvalidSizeError(f"need at least 1 layer, got {m}")
    if m == 1:
        return d
    n = d.n
    product = cartesian_product(path_graph(m), d.base)
    arcs: set[Arc] = set()
    for i in range(m):
        off = i * n
        for u, v in d.arcs:
            if i % 2 == 0:
                arcs.add((off + u, off + v))
            else:
                arcs.add((off + v, off + u))
    for i in range(m - 1):
        for j in range(n):
            arcs.add((i * n + j, (i + 1) * n + j))
    return OrientedGraph(base=product, arcs=frozenset(arcs))


def orient_c4_tree(d: OrientedGraph) -> OrientedGraph:
    """Orient a graph isomorphic to C_4 x T by doubling the doubling.

    The four tree layers, in the cyclic order they sit around the
    4-cycle, carry d, converse(d), d, converse(d); the resulting skew
    adjacency matrix has the block form shown in the module docstring.
    """
    validate_tree(d.base)
    return orient_double(orient_double(d))


def doubling_matching(base: Graph) -> Matching:
    """The left-right rung matching of P_2 x base (always perfect)."""
    product = cartesian_product(path_graph(2), base)
    return Matching(host=product, edges=frozenset((j, base.n + j) for j in range(base.n)))


def skew_adjacency(d: OrientedGraph) -> list[list[int]]:
    """Antisymmetric 0/1/-1 matrix: entry (u, v) is 1 iff the arc u->v exists."""
    n = d.n
    a = [[0] * n for _ in range(n)]
    for u, v in d.arcs:
        a[u][v] = 1
        a[v][u] = -1
    return a


def is_nice_cycle(g: Graph, c: CycleSeq) -> bool:
    """True iff deleting c's vertices leaves a graph with a perfect matching."""
    if not is_cycle_of(g, c):
        raise InvalidCycleError(f"{c} is not a simple cycle of the graph")
    return has_perfect_matching(g, excluding=c)


def is_oddly_oriented(d: OrientedGraph, c: CycleSeq) -> bool:
    """True iff an even cycle has an odd number of arcs along each direction.

    For even k the two traversal directions have co-directed counts f and
    k - f, which share parity, so one traversal suffices.
    """
    if not is_cycle_of(d.base, c):
        raise InvalidCycleError(f"{c} is not a simple cycle of the base graph")
    k = len(c)
    if k % 2:
        raise OddCycleParityError(f"odd orientation is undefined for odd cycle length {k}")
    forward = sum(1 for i in range(k) if (c[i], c[(i + 1) % k]) in d.arcs)
    return forward % 2 == 1


def check_pfaffian(d: OrientedGraph, max_vertices: int = DEFAULT_CYCLE_GUARD) -> PfaffianReport:
    """Exhaustively test the Pfaffian property at desk scale.

    Enumerates every cycle of the base graph, keeps the nice even ones,
    and reports each that is not oddly oriented.  Passing is equivalent
    to the orientation being Pfaffian.
    """
    base = d.base
    violations: list[CycleSeq] = []
    nice_even = 0
    for c in enumerate_cycles(base, max_vertices):
        if len(c) % 2:
            continue
        if not has_perfect_matching(base, excluding=c):
            continue
        nice_even += 1
        if not is_oddly_oriented(d, c):
            violations.append(c)
    return PfaffianReport(
        passed=not violations, nice_even_cycles=nice_even, violations=tuple(violations)
    )


# ---------------------------------------------------------------------------
# Oriented edge-list text format: '#' comments, "n m" header, m lines "u -> v".
# ---------------------------------------------------------------------------

def parse_oriented_edge_list(text: str) -> OrientedGraph:
    lines = _payload_lines(text)
    if not lines:
        raise EdgeListParseError("empty oriented edge list: missing 'n m' header")
    (lineno, header), body = lines[0], lines[1:]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise EdgeListParseError(f"line {lineno}: non-integer header {header!r}") from exc
    if len(body) != m:
        raise EdgeListParseError(f"header promises {m} arcs, found {len(body)} arc lines")
    arcs = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 3 or fields[1] != "->":
            raise EdgeListParseError(f"line {lineno}: expected 'u -> v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[2])
        except ValueError as exc:
            raise EdgeListParseError(f"line {lineno}: non-integer endpoint in {line!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListParseError(f"line {lineno}: bad arc {u} -> {v} for n={n}")
        arcs.append((u, v))
    try:
        base = Graph.from_edges(n, arcs)
        return OrientedGraph(base=base, arcs=frozenset(arcs))
    except ValueError as exc:
        raise EdgeListParseError(str(exc)) from exc


def format_oriented_edge_list(d: OrientedGraph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{d.n} {len(d.arcs)}")
    out.extend(f"{u} -> {v}" for u, v in sorted(d.arcs))
    return "\n".join(out) + "\n"

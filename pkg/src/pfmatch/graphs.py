"""Simple undirected graphs, trees, and the Cartesian products counted on.

Vertices are always the integers 0..n-1 and an edge is a sorted pair
(u, v) with u < v.  Cartesian products use *layer-major* numbering:
vertex (i, j) of g x h becomes index i*|h| + j, i.e. one contiguous copy
of h per vertex of g.  The orientation and linear-algebra modules rely
on this convention: it is what makes the skew adjacency matrices of the
product orientations fall into clean block form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    EdgeListParseError,
    InvalidSizeError,
    NotATreeError,
    SizeLimitError,
)

Edge = tuple[int, int]

#: A simple cycle c0 c1 ... c_{k-1} c0, stored as the k distinct vertices.
CycleSeq = tuple[int, ...]

#: Default vertex guard for cycle enumeration and other exponential steps.
DEFAULT_CYCLE_GUARD = 24


def _sorted_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph: vertex count plus a frozenset of sorted pairs."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not a sorted pair inside range(n)")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n=n, edges=frozenset(_sorted_edge(u, v) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, sorted ascending (deterministic iteration order)."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _sorted_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Tree(Graph):
    """A connected acyclic Graph carrying a root and parent-array witness."""

    root: int
    parent: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        super().__post_init__()
        n = self.n
        if n == 0:
            raise NotATreeError("the empty graph is not a tree")
        if len(self.edges) != n - 1:
            raise NotATreeError(f"tree on {n} vertices needs {n - 1} edges, got {len(self.edges)}")
        if len(self.parent) != n or not (0 <= self.root < n):
            raise NotATreeError("parent array / root do not match the vertex count")
        if self.parent[self.root] is not None:
            raise NotATreeError("root must have no parent")
        witness = set()
        for v, p in enumerate(self.parent):
            if v == self.root:
                continue
            if p is None:
                raise NotATreeError(f"non-root vertex {v} has no parent")
            witness.add(_sorted_edge(v, p))
        if witness != set(self.edges):
            raise NotATreeError("parent array does not reconstruct the edge set")
        if len(_component_of(self, self.root)) != n:
            raise NotATreeError("parent array is not connected to the root")

    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)


def _component_of(g: Graph, start: int) -> list[int]:
    """Vertices reachable from start, in BFS order."""
    seen = [False] * g.n
    seen[start] = True
    order = [start]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
    return order


def _tree_from_graph(g: Graph, root: int = 0) -> Tree:
    """Attach a parent-array witness; caller guarantees g is a tree."""
    parent: list[Optional[int]] = [None] * g.n
    seen = [False] * g.n
    seen[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
    return Tree(n=g.n, edges=g.edges, root=root, parent=tuple(parent))


def path_graph(m: int) -> Tree:
    """The path P_m on vertices 0..m-1 with edges {i, i+1}."""
    if m < 1:
        raise InvalidSizeError(f"a path needs at least 1 vertex, got {m}")
    edges = frozenset((i, i + 1) for i in range(m - 1))
    parent: list[Optional[int]] = [None] + [i for i in range(m - 1)]
    return Tree(n=m, edges=edges, root=0, parent=tuple(parent))


def cycle_graph(m: int) -> Graph:
    """The cycle C_m on vertices 0..m-1 with edges {i, (i+1) mod m}."""
    if m < 3:
        raise InvalidSizeError(f"a cycle needs at least 3 vertices, got {m}")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product g x h with layer-major vertex numbering.

    Vertex (i, j) maps to i*|h| + j; (i, j) ~ (i, j') iff {j, j'} in E(h),
    and (i, j) ~ (i', j) iff {i, i'} in E(g).  The result therefore has
    |g|*|h| vertices and |g|*|E(h)| + |h|*|E(g)| edges.
    """
    if g.n == 0 or h.n == 0:
        raise InvalidSizeError("Cartesian product factors must be nonempty")
    nh = h.n
    edges: list[Edge] = []
    for i in range(g.n):
        base = i * nh
        for u, v in h.edges:
            edges.append((base + u, base + v))
    for i, k in g.edges:
        for j in range(nh):
            edges.append((i * nh + j, k * nh + j))
    return Graph.from_edges(g.n * nh, edges)


def validate_tree(g: Graph) -> Tree:
    """Return a rooted Tree witness, or raise NotATreeError.

    A cycle, if present, is found via BFS parents and reported in the
    error message; disconnection is reported with the unreached count.
    """
    if isinstance(g, Tree):
        return g
    if g.n == 0:
        raise NotATreeError("the empty graph is not a tree")
    parent: list[Optional[int]] = [None] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
            elif w != parent[v]:
                cycle = _cycle_through(parent, v, w)
                raise NotATreeError(
                    "not a tree: contains cycle " + "-".join(str(x) for x in cycle)
                )
    if len(queue) != g.n:
        raise NotATreeError(
            f"not a tree: disconnected ({g.n - len(queue)} of {g.n} vertices unreachable)"
        )
    return _tree_from_graph(g)


def _cycle_through(parent: list[Optional[int]], v: int, w: int) -> list[int]:
    """Cycle formed by BFS-tree paths of v and w plus the edge {v, w}."""
    ancestors_v: dict[int, int] = {}
    x: Optional[int] = v
    depth = 0
    while x is not None:
        ancestors_v[x] = depth
        depth += 1
        x = parent[x]
    y: Optional[int] = w
    w_side = []
    while y is not None and y not in ancestors_v:
        w_side.append(y)
        y = parent[y]
    assert y is not None  # BFS tree paths always meet
    v_side = []
    x = v
    while x != y:
        v_side.append(x)
        x = parent[x]  # type: ignore[assignment]
    return v_side + [y] + list(reversed(w_side))


def _splitmix64(state: int):
    """splitmix64 stream: tiny, well documented, identical on every platform."""
    mask = (1 << 64) - 1
    while True:
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        yield z ^ (z >> 31)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree on n vertices, deterministic in the seed.

    Draws the n-2 Prüfer digits from a splitmix64 stream (with rejection
    sampling, so each digit is exactly uniform) and decodes them.  The
    same (n, seed) pair yields the identical tree on any platform.
    """
    if n < 1:
        raise InvalidSizeError(f"a tree needs at least 1 vertex, got {n}")
    if n == 1:
        return Tree(n=1, edges=frozenset(), root=0, parent=(None,))
    stream = _splitmix64(seed & ((1 << 64) - 1))
    limit = (1 << 64) - ((1 << 64) % n)
    digits = []
    while len(digits) < n - 2:
        r = next(stream)
        if r < limit:  # rejection keeps the modulo unbiased
            digits.append(r % n)
    return _tree_from_graph(Graph.from_edges(n, _prufer_decode(digits, n)))


def _prufer_decode(seq: list[int], n: int) -> list[Edge]:
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: list[Edge] = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append(_sorted_edge(leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append(_sorted_edge(u, v))
    return edges


def enumerate_cycles(g: Graph, max_vertices: int = DEFAULT_CYCLE_GUARD) -> list[CycleSeq]:
    """Every simple cycle of g exactly once (up to rotation/reflection).

    Each cycle is reported starting at its smallest vertex, traversed
    toward its smaller neighbor on the cycle.  DFS grows paths whose
    interior vertices all exceed the start vertex, so no cycle repeats.
    Exponential in general; guarded by max_vertices.
    """
    if g.n > max_vertices:
        raise SizeLimitError(
            f"cycle enumeration guard: {g.n} vertices > limit {max_vertices}; "
            "raise the limit explicitly or use the brute-force counting route"
        )
    adj = g.adjacency
    cycles: list[CycleSeq] = []
    path: list[int] = []

    def extend(v: int, start: int, onpath: int) -> None:
        for w in adj[v]:
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and not (onpath >> w) & 1:
                path.append(w)
                extend(w, start, onpath | (1 << w))
                path.pop()

    for s in range(g.n):
        path = [s]
        extend(s, s, 1 << s)
    return cycles


def is_cycle_of(g: Graph, c: CycleSeq) -> bool:
    """True iff c lists >= 3 distinct vertices forming a closed walk in g."""
    k = len(c)
    if k < 3 or len(set(c)) != k:
        return False
    if any(not (0 <= v < g.n) for v in c):
        return False
    return all(g.has_edge(c[i], c[(i + 1) % k]) for i in range(k))


# ---------------------------------------------------------------------------
# Edge-list text format (shared with the CLI): '#' comments, "n m" header,
# then m lines "u v" with 0-based indices.
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = _payload_lines(text)
    if not lines:
        raise EdgeListParseError("empty edge list: missing 'n m' header")
    (lineno, header), body = lines[0], lines[1:]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListParseError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise EdgeListParseError(f"line {lineno}: non-integer header {header!r}") from exc
    if len(body) != m:
        raise EdgeListParseError(f"header promises {m} edges, found {len(body)} edge lines")
    edges = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise EdgeListParseError(f"line {lineno}: non-integer endpoint in {line!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise EdgeListParseError(f"line {lineno}: bad edge {u} {v} for n={n}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise EdgeListParseError(str(exc)) from exc


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(out) + "\n"


def _payload_lines(text: str) -> list[tuple[int, str]]:
    """(line number, stripped content) for non-blank, non-comment lines."""
    result = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            result.append((i, line))
    return result

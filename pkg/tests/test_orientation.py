"""Orientation constructors, skew adjacency, nice cycles, the Pfaffian check."""

import pytest

from pfmatch import (
    Graph,
    InvalidCycleError,
    Matching,
    NotATreeError,
    OddCycleParityError,
    OrientedGraph,
    cartesian_product,
    check_pfaffian,
    converse,
    cycle_graph,
    doubling_matching,
    enumerate_cycles,
    format_oriented_edge_list,
    has_perfect_matching,
    identity_matrix,
    is_nice_cycle,
    is_oddly_oriented,
    orient_c4_tree,
    orient_double,
    orient_layered,
    orient_lexicographic,
    parse_oriented_edge_list,
    path_graph,
    random_tree,
    skew_adjacency,
    validate_tree,
)

from util import matching_count_by_edge_subsets, induced_subgraph, random_orientation, trees_up_to


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(i, leaves) for i in range(leaves)])


def all_forward_c4() -> OrientedGraph:
    return OrientedGraph(base=cycle_graph(4), arcs=frozenset([(0, 1), (1, 2), (2, 3), (3, 0)]))


def test_orient_lexicographic():
    assert orient_lexicographic(path_graph(3)).arcs == frozenset({(0, 1), (1, 2)})
    assert orient_lexicographic(path_graph(2)).arcs == frozenset({(0, 1)})
    assert orient_lexicographic(star(3)).arcs == frozenset({(0, 3), (1, 3), (2, 3)})


def test_converse_involution():
    d = OrientedGraph(base=path_graph(2), arcs=frozenset({(0, 1)}))
    assert converse(d).arcs == frozenset({(1, 0)})
    for seed in range(6):
        d = random_orientation(random_tree(6, seed), seed)
        assert converse(converse(d)) == d
    empty = OrientedGraph(base=Graph(n=3, edges=frozenset()), arcs=frozenset())
    assert converse(empty) == empty


def test_orientation_rejects_incomplete_or_double_arcs():
    with pytest.raises(ValueError):
        OrientedGraph(base=path_graph(3), arcs=frozenset({(0, 1)}))
    with pytest.raises(ValueError):
        OrientedGraph(base=path_graph(2), arcs=frozenset({(0, 1), (1, 0)}))


def test_orient_double_k2():
    d = orient_double(orient_lexicographic(path_graph(2)))
    # left copy keeps 0->1, right copy (vertices 2,3) is reversed, rungs go right
    assert d.arcs == frozenset({(0, 1), (3, 2), (0, 2), (1, 3)})


def test_orient_double_single_vertex():
    d = orient_double(orient_lexicographic(path_graph(1)))
    assert d.n == 2 and d.arcs == frozenset({(0, 1)})


def test_orient_double_arc_count():
    for seed in range(5):
        t = random_tree(3 + seed, seed)
        d = orient_double(random_orientation(t, seed))
        assert len(d.arcs) == 2 * t.m + t.n


def test_orient_double_self_converse_under_half_swap():
    # exchanging the halves realizes the converse of the whole doubling;
    # equivalently, the doublings of d and converse(d) agree on both
    # copies and differ exactly by reversing every rung arc
    for seed in range(5):
        t = random_tree(5, seed)
        d = random_orientation(t, seed + 50)
        n = t.n
        swap = {v: (v + n) % (2 * n) for v in range(2 * n)}
        doubled = orient_double(d)
        swapped = frozenset((swap[u], swap[v]) for u, v in doubled.arcs)
        assert swapped == converse(doubled).arcs
        rungs_reversed = frozenset(
            (v, u) if abs(u - v) == n else (u, v) for u, v in swapped
        )
        assert rungs_reversed == orient_double(converse(d)).arcs


def test_orient_layered_m1_and_m2():
    d = random_orientation(random_tree(5, 3), 3)
    assert orient_layered(d, 1) == d
    assert orient_layered(d, 2) == orient_double(d)


def test_orient_layered_k2_four_layers():
    d = orient_layered(orient_lexicographic(path_graph(2)), 4)
    assert d.n == 8
    layer_arcs = {a for a in d.arcs if abs(a[0] - a[1]) == 1 and a[0] // 2 == a[1] // 2}
    assert layer_arcs == {(0, 1), (3, 2), (4, 5), (7, 6)}  # alternating with the converse
    rungs = d.arcs - layer_arcs
    assert rungs == {(0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7)}  # all forward


def test_orient_layered_rejects_non_tree():
    with pytest.raises(NotATreeError):
        orient_layered(orient_lexicographic(cycle_graph(4)), 3)


def test_orient_c4_tree_smallest():
    d = orient_c4_tree(orient_lexicographic(path_graph(1)))
    assert d.n == 4 and len(d.arcs) == 4
    assert check_pfaffian(d).passed


def test_orient_c4_tree_cube():
    d = orient_c4_tree(orient_lexicographic(path_graph(2)))
    assert d.n == 8 and len(d.arcs) == 12
    assert check_pfaffian(d).passed


def test_orient_c4_tree_arc_count():
    for seed in range(4):
        t = random_tree(2 + seed, seed)
        d = orient_c4_tree(random_orientation(t, seed))
        assert len(d.arcs) == 4 * t.m + 4 * t.n


def _blocks(parts: list[list[list[list[int]]]]) -> list[list[int]]:
    out = []
    for block_row in parts:
        rows = len(block_row[0])
        for i in range(rows):
            out.append(sum((list(b[i]) for b in block_row), []))
    return out


def _neg(mat: list[list[int]]) -> list[list[int]]:
    return [[-x for x in row] for row in mat]


@pytest.mark.parametrize("seed", range(4))
def test_c4_tree_block_structure(seed):
    # four layers in index order carry d, conv, conv, d; with the rung
    # directions of the double doubling the skew matrix is exactly:
    t = random_tree(2 + seed * 2, seed)
    d = random_orientation(t, seed + 9)
    a = skew_adjacency(d)
    n = t.n
    eye = identity_matrix(n)
    zero = [[0] * n for _ in range(n)]
    expected = _blocks([
        [a, eye, eye, zero],
        [_neg(eye), _neg(a), zero, eye],
        [_neg(eye), zero, _neg(a), _neg(eye)],
        [zero, _neg(eye), eye, a],
    ])
    assert skew_adjacency(orient_c4_tree(d)) == expected


@pytest.mark.parametrize("seed", range(4))
def test_p4_block_structure(seed):
    t = random_tree(2 + seed * 2, seed)
    d = random_orientation(t, seed + 17)
    a = skew_adjacency(d)
    n = t.n
    eye = identity_matrix(n)
    zero = [[0] * n for _ in range(n)]
    expected = _blocks([
        [a, eye, zero, zero],
        [_neg(eye), _neg(a), eye, zero],
        [zero, _neg(eye), a, eye],
        [zero, zero, _neg(eye), _neg(a)],
    ])
    assert skew_adjacency(orient_layered(d, 4)) == expected


def test_skew_adjacency_examples():
    d = OrientedGraph(base=path_graph(2), arcs=frozenset({(0, 1)}))
    assert skew_adjacency(d) == [[0, 1], [-1, 0]]
    empty = OrientedGraph(base=Graph(n=3, edges=frozenset()), arcs=frozenset())
    assert skew_adjacency(empty) == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_skew_adjacency_antisymmetric():
    for seed in range(6):
        d = random_orientation(random_tree(7, seed), seed)
        a = skew_adjacency(d)
        n = len(a)
        assert all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def test_is_nice_cycle_c4_itself():
    c4 = cycle_graph(4)
    assert is_nice_cycle(c4, (0, 1, 2, 3))  # empty remainder has the empty matching


def test_is_nice_cycle_cube_squares():
    cube = cartesian_product(cycle_graph(4), path_graph(2))
    for c in enumerate_cycles(cube):
        if len(c) == 4:
            assert is_nice_cycle(cube, c)
            remainder = induced_subgraph(cube, [v for v in range(8) if v not in c])
            assert matching_count_by_edge_subsets(remainder) >= 1


def test_is_nice_cycle_grid_odd_components():
    # deleting the middle square of the 3x4 grid leaves two 3-vertex paths
    grid = cartesian_product(path_graph(3), path_graph(4))
    middle = (1, 2, 6, 10, 9, 5)
    assert not is_nice_cycle(grid, middle)
    remainder = induced_subgraph(grid, [v for v in range(12) if v not in middle])
    assert matching_count_by_edge_subsets(remainder) == 0


def test_is_nice_cycle_rejects_non_cycle():
    with pytest.raises(InvalidCycleError):
        is_nice_cycle(cycle_graph(4), (0, 1, 3))


def test_is_oddly_oriented_all_forward_false():
    assert not is_oddly_oriented(all_forward_c4(), (0, 1, 2, 3))


def test_is_oddly_oriented_direct_count():
    d = OrientedGraph(base=cycle_graph(4), arcs=frozenset([(0, 1), (2, 1), (2, 3), (3, 0)]))
    assert is_oddly_oriented(d, (0, 1, 2, 3))  # forward arcs 0->1, 2->3, 3->0


def test_is_oddly_oriented_double_square():
    d = orient_double(orient_lexicographic(path_graph(2)))
    (cycle,) = enumerate_cycles(d.base)
    assert is_oddly_oriented(d, cycle)


def test_is_oddly_oriented_direction_independent():
    d = orient_double(orient_lexicographic(path_graph(3)))
    for c in enumerate_cycles(d.base):
        reversed_c = (c[0],) + tuple(reversed(c[1:]))
        assert is_oddly_oriented(d, c) == is_oddly_oriented(d, reversed_c)


def test_is_oddly_oriented_rejects_odd_cycle():
    tri = orient_lexicographic(cycle_graph(3))
    with pytest.raises(OddCycleParityError):
        is_oddly_oriented(tri, (0, 1, 2))


def test_check_pfaffian_all_forward_c4_fails():
    report = check_pfaffian(all_forward_c4())
    assert not report.passed
    assert report.violations == ((0, 1, 2, 3),)


def test_check_pfaffian_report_counts_nice_even_cycles():
    cube = orient_c4_tree(orient_lexicographic(path_graph(2)))
    report = check_pfaffian(cube)
    assert report.passed and report.violations == ()
    # all 28 cycles of the cube are even; the 24 nice ones: every 4-cycle
    # and 8-cycle, and 12 of the 16 hexagons (a hexagon's 2-vertex
    # remainder must be one of the 12 edges)
    assert report.nice_even_cycles == 24


def test_doubling_cycles_use_two_rungs_and_are_nice():
    # structure of the doubling: each cycle crosses the rung matching exactly twice
    for t in trees_up_to(5):
        product = cartesian_product(path_graph(2), t)
        rungs = doubling_matching(t)
        assert rungs.is_perfect
        for c in enumerate_cycles(product):
            k = len(c)
            crossing = sum(
                1 for i in range(k)
                if tuple(sorted((c[i], c[(i + 1) % k]))) in rungs.edges
            )
            assert crossing == 2
            assert is_nice_cycle(product, c)


def test_every_even_cycle_of_doubling_oddly_oriented():
    # stronger than the Pfaffian property: holds for every even cycle,
    # nice or not: exhaustively over ALL orientations of all tree shapes
    # up to 5 vertices, then sampled at 6
    import itertools

    for t in trees_up_to(5):
        edges = sorted(t.edges)
        for flips in itertools.product((False, True), repeat=len(edges)):
            arcs = frozenset(
                (v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips)
            )
            doubled = orient_double(OrientedGraph(base=Graph(n=t.n, edges=t.edges), arcs=arcs))
            for c in enumerate_cycles(doubled.base):
                assert len(c) % 2 == 0
                assert is_oddly_oriented(doubled, c)
    for seed in range(8):
        doubled = orient_double(random_orientation(random_tree(6, seed), seed + 77))
        for c in enumerate_cycles(doubled.base):
            assert is_oddly_oriented(doubled, c)


def test_matching_validation():
    g = path_graph(4)
    with pytest.raises(ValueError):
        Matching(host=g, edges=frozenset({(0, 2)}))  # not an edge
    with pytest.raises(ValueError):
        Matching(host=g, edges=frozenset({(0, 1), (1, 2)}))  # shared vertex
    perfect = Matching(host=g, edges=frozenset({(0, 1), (2, 3)}))
    assert perfect.is_perfect
    assert not Matching(host=g, edges=frozenset({(1, 2)})).is_perfect


def test_nice_cycle_uses_matching_existence():
    # P2 x P3 = 2x3 grid: has_perfect_matching and the nice 4-cycles agree
    grid = cartesian_product(path_graph(2), path_graph(3))
    assert has_perfect_matching(grid)
    for c in enumerate_cycles(grid):
        assert is_nice_cycle(grid, c) == has_perfect_matching(grid, excluding=c)


def test_oriented_edge_list_roundtrip():
    d = orient_c4_tree(orient_lexicographic(path_graph(2)))
    text = format_oriented_edge_list(d, comments=["doubled doubling of an edge"])
    assert parse_oriented_edge_list(text) == d


def test_oriented_edge_list_rejects_conflicting_arcs():
    with pytest.raises(ValueError):
        parse_oriented_edge_list("2 2\n0 -> 1\n1 -> 0\n")


def test_validate_tree_witness_survives_orientation_constructors():
    t = validate_tree(Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]))
    d = orient_lexicographic(t)
    assert orient_layered(d, 3).n == 18
    assert orient_c4_tree(d).n == 24

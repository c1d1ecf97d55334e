import pytest
from hypothesis import given

from higher_ind import graphs as G
from higher_ind.graphs import GraphError

from conftest import small_graphs


def edge_labels(g):
    return {frozenset((g.label(u), g.label(v))) for u, v in g.edges()}


def test_path_and_cycle():
    assert G.path(1).n == 1 and G.path(1).edge_count == 0
    assert edge_labels(G.path(4)) == {frozenset(e) for e in [(1, 2), (2, 3), (3, 4)]}
    assert G.path(2).edge_count == 1
    c = G.cycle(3)
    assert c.n == 3 and c.edge_count == 3
    assert frozenset((1, 4)) in edge_labels(G.cycle(4))
    with pytest.raises(GraphError):
        G.cycle(2)


def test_multipartite():
    assert G.complete_multipartite([4]).edge_count == 0
    assert G.are_isomorphic(G.complete_multipartite([1, 1, 1]), G.complete(3))
    g = G.complete_multipartite([2, 2])
    assert G.are_isomorphic(g, G.cycle(4))
    assert g.label(0) == (1, 1) and g.label(3) == (2, 2)


def test_squares_isomorphic():
    c4, grid, k22 = G.cycle(4), G.grid(2, 2), G.complete_multipartite([2, 2])
    assert G.are_isomorphic(c4, grid) and G.are_isomorphic(grid, k22)
    assert not G.are_isomorphic(c4, G.path(4))


def test_whiskers_and_leaves():
    w = G.whisker_all(G.path(3))
    assert w.n == 6 and w.edge_count == 5
    assert set(w.leaves()) == {w.index(("b", i)) for i in (1, 2, 3)}
    assert G.are_isomorphic(G.whisker_all(G.path(1)), G.path(2))
    assert G.whisker_all(G.cycle(3)).edge_count == 6

    fig_a = G.attach_leaves(G.path(3), [2, 1, 1])
    assert fig_a.n == 7 and fig_a.edge_count == 6
    assert fig_a.has_edge(fig_a.index(("a", 1)), fig_a.index(("b", 1, 2)))
    assert G.attach_leaves(G.path(3), [0, 0, 0]) == G.path(3)
    fig_b = G.attach_leaves(G.cycle(3), [2, 1, 1])
    assert fig_b.n == 7 and fig_b.edge_count == 7
    with pytest.raises(GraphError):
        G.attach_leaves(G.path(3), [1, 1])


@pytest.mark.parametrize("m,h", [(2, 0), (2, 2), (3, 2), (2, 3), (4, 1)])
def test_mary_tree_counts(m, h):
    t = G.perfect_mary_tree(m, h)
    assert t.n == (m ** (h + 1) - 1) // (m - 1)
    assert t.edge_count == t.n - 1 and G.is_connected(t)
    for d in range(h + 1):
        assert len(G.depth_level(t, d)) == m ** d
    assert len(t.leaves()) == (m ** h if h else 0)


def test_tree_order_and_children():
    t = G.perfect_mary_tree(2, 2)
    assert t.n == 7 and len(t.leaves()) == 4
    a = lambda d, q: t.index(("a", d, q))
    assert set(t.neighbors(a(1, 2))) == {a(0, 1), a(2, 3), a(2, 4)}
    labels = sorted(t.labels, key=G.tree_order_key)
    assert labels[:3] == [("a", 0, 1), ("a", 1, 1), ("a", 2, 1)]


def test_tree_minus_root_is_two_trees():
    b3 = G.perfect_mary_tree(2, 3)
    rest = G.remove_vertices(b3, [b3.index(("a", 0, 1))])
    two = G.disjoint_union(G.perfect_mary_tree(2, 2), G.perfect_mary_tree(2, 2))
    assert rest.n == 14 and rest.edge_count == two.edge_count
    assert sorted(map(len, G.connected_components(rest))) == [7, 7]
    for comp in G.connected_components(rest):
        assert G.are_isomorphic(G.induced_subgraph(rest, comp), G.perfect_mary_tree(2, 2), limit=7)


def test_grid():
    assert G.grid(2, 3).n == 6 and G.grid(2, 3).edge_count == 7
    assert G.are_isomorphic(G.grid(1, 5), G.path(5))
    for m, n in [(2, 5), (3, 4)]:
        assert G.grid(m, n).edge_count == m * (n - 1) + n * (m - 1)


def test_mycielskian():
    assert G.generalized_mycielskian(G.cycle(4), 4).n == 21
    assert G.are_isomorphic(G.generalized_mycielskian(G.complete(2), 1), G.cycle(5))
    e = G.generalized_mycielskian(G.empty_graph(3), 1)
    apex = e.index("u")
    assert e.edge_count == 3 and set(e.neighbors(apex)) == {3, 4, 5}
    with pytest.raises(GraphError):
        G.generalized_mycielskian(G.cycle(4), 0)


def test_union_and_subgraphs():
    u = G.disjoint_union(G.path(2), G.path(3))
    assert (u.n, u.edge_count, len(G.connected_components(u))) == (5, 3, 2)
    p = G.path(4)
    assert G.disjoint_union(p, G.empty_graph(0)) == p
    assert G.induced_subgraph(p, range(4)) == p
    assert G.induced_subgraph(p, []).n == 0
    with pytest.raises(GraphError):
        G.induced_subgraph(p, [7])


def test_components():
    p3, p6 = G.path(3), G.path(6)
    assert G.connected_components(p3, [0, 2]) == [(0,), (2,)]
    assert G.connected_components(p3, [0, 1, 2]) == [(0, 1, 2)]
    # labels {1,2,4,5} are indices {0,1,3,4}
    assert G.connected_components(p6, [0, 1, 3, 4]) == [(0, 1), (3, 4)]


@given(small_graphs(max_n=9))
def test_components_partition(g):
    comps = G.connected_components(g)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == list(range(g.n)) and len(flat) == len(set(flat))
    for c in comps:
        assert G.bfs_reachable(g, c[0], c) == set(c)
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)


@pytest.mark.parametrize("spec", ["P5", "C6", "K4", "star:3", "grid:2:4", "mary:3:2",
                                  "multipartite:3,2", "whisker:C4", "leaves:2,1,1:P3",
                                  "mycielskian:C4:2", "union:P2+C3"])
def test_handshake(spec):
    g = G.from_spec(spec)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count
    for u, v in g.edges():
        assert g.has_edge(v, u) and u != v


def test_whisker_leaf_count():
    for base in (G.path(4), G.cycle(5), G.star(3)):
        w = G.whisker_all(base)
        assert len(w.leaves()) == base.n or base.n < 2


def test_edge_list_roundtrip():
    g = G.grid(2, 3)
    h = G.parse_edge_list(G.format_edge_list(g))
    assert h == g
    text = "# a triangle\n3 3\n0 1\n1 2  # hi\n0 2\n"
    assert G.are_isomorphic(G.parse_edge_list(text), G.cycle(3))
    with pytest.raises(GraphError):
        G.parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        G.from_spec("nonsense:4")

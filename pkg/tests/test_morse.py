import random

import pytest
from hypothesis import given, settings, strategies as st

from higher_ind import graphs as G
from higher_ind import morse
from higher_ind.complexes import SimplicialComplex, f_vector, independence_complex
from higher_ind.homology import reduced_homology
from higher_ind.morse import Matching, MatchingError, PatchworkError

from conftest import small_graphs

TRIANGLE = [(), (0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]


def test_acyclic_examples():
    assert morse.verify_acyclic(TRIANGLE, Matching())
    assert morse.verify_acyclic(TRIANGLE, Matching([((0,), (0, 1)), ((1,), (1, 2))]))
    cyc = Matching([((0,), (0, 1)), ((1,), (1, 2)), ((2,), (0, 2))])
    assert not morse.verify_acyclic(TRIANGLE, cyc)


def test_malformed_pairs():
    with pytest.raises(MatchingError):
        Matching([((0,), (1, 2))])
    with pytest.raises(MatchingError):
        Matching([((0,), (0, 1)), ((0,), (0, 2))])
    with pytest.raises(MatchingError):
        morse.verify_acyclic([(), (0,)], Matching([((0,), (0, 1))]))


def test_cone_is_perfect():
    k = SimplicialComplex.generated_by(4, [(0, 1, 3), (1, 2, 3)])  # apex 3
    m, rest = morse.element_matching_sequence(k, [3])
    assert rest == [] and ((), (3,)) in m.pairs()
    with pytest.raises(G.GraphError):
        morse.element_matching_sequence(k, [9])


def test_small_tree_example():
    t = G.perfect_mary_tree(2, 2)
    k = independence_complex(t, 4)
    m, rest = morse.element_matching_sequence(k, [t.index(("a", 2, 1))])
    assert morse.verify_acyclic(k.all_faces(), m)
    core = tuple(t.index(("a", d, q)) for d, q in [(0, 1), (1, 1), (1, 2)])
    expect = sorted(tuple(sorted(core + (t.index(("a", 2, j)),))) for j in (2, 3, 4))
    assert sorted(rest) == expect


@pytest.mark.parametrize("parts,r", [([2, 2], 1), ([3, 2], 2), ([2, 2, 2], 2), ([3, 1, 2], 3),
                                     ([4, 3], 3), ([1, 1, 1, 1], 2)])
def test_multipartite_critical_set(parts, r):
    g = G.complete_multipartite(parts)
    res = morse.multipartite_matching(parts, r)
    firsts = [g.index((i + 1, 1)) for i in range(len(parts))]
    part_of = [g.label(v)[0] for v in g.vertices()]
    expect = set()
    for f in res.complex.faces(r - 1):
        one_part = len({part_of[v] for v in f}) == 1
        if not any(x in f for x in firsts) and not one_part:
            expect.add(f)
        if firsts[0] not in f and any(x in f for x in firsts[1:]):
            expect.add(f)
    assert set(res.critical) == expect and res.acyclic


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=8), st.integers(1, 3), st.randoms(use_true_random=False))
def test_element_recursion(g, r, rnd):
    k = independence_complex(g, r)
    xs = rnd.sample(range(g.n), rnd.randint(0, g.n)) if g.n else []
    prev = set(k.all_faces())
    for x, pairs, used, delta in morse.element_matching_steps(k.all_faces(), xs):
        assert used == {f for p in pairs for f in p}
        assert not (delta & used) and delta | used == prev
        for lo, hi in pairs:
            assert len(hi) == len(lo) + 1 and set(lo) <= set(hi) and x in hi and x not in lo
        prev = delta
    m, rest = morse.element_matching_sequence(k, xs)
    assert set(rest) == prev and morse.verify_acyclic(k.all_faces(), m)


def test_patchwork_basics():
    m = Matching([((0,), (0, 1)), ((1,), (1, 2))])
    assert morse.patchwork(TRIANGLE, lambda f: 0, {0: m}, check=True).pairs() == m.pairs()
    # fibre 1: faces containing vertex 2 (an up-set); fibre 0: the rest
    fib = lambda f: int(2 in f)
    mm = morse.patchwork(TRIANGLE, fib, {0: Matching([((), (0,))]), 1: Matching([((2,), (1, 2))])},
                         check=True)
    assert len(mm) == 2
    with pytest.raises(PatchworkError) as info:
        morse.patchwork(TRIANGLE, lambda f: -len(f), {})
    lo, hi = info.value.witness
    assert len(hi) == len(lo) + 1
    with pytest.raises(PatchworkError):
        morse.patchwork(TRIANGLE, fib, {0: Matching([((2,), (1, 2))])})


@pytest.mark.parametrize("n,d", [(7, 3), (9, 3), (8, 4), (11, 4)])
def test_cycle_chain_map_is_order_preserving(n, d):
    k = independence_complex(G.cycle(n), d - 2)
    mults = [v - 1 for v in range(d, n + 1, d)]

    def phi(f):
        hit = [t for t, x in enumerate(mults) if x in f]
        return len(mults) - hit[0] if hit else 0   # e_d highest, e_r lowest

    morse.patchwork(k.all_faces(), phi, {})


def test_path_examples():
    r = morse.path_perfect_matching(6, 3)
    assert r.critical_labels() == [(2, 5)] and r.counts_by_dim == {1: 1}
    assert morse.path_perfect_matching(4, 3).critical == []
    r = morse.path_perfect_matching(7, 4)
    assert r.critical_labels() == [(2, 3, 6, 7)] and r.counts_by_dim == {3: 1}
    with pytest.raises(ValueError):
        morse.path_perfect_matching(5, 2)


def test_cycle_examples():
    assert morse.cycle_morse_matching(6, 3).counts_by_dim == {1: 2}
    assert morse.cycle_morse_matching(7, 3).counts_by_dim == {1: 1}
    res = morse.cycle_morse_matching(10, 4)
    assert res.counts_by_dim == {4: 1} and res.acyclic
    assert reduced_homology(res.complex).short() == "4:Z"
    with pytest.raises(ValueError):
        morse.cycle_morse_matching(3, 4)


def test_cycle_cross_pairs_used():
    # the extra pairing between neighbouring component sizes is needed when n - dk >= 3
    assert morse.cycle_morse_matching(9, 5).notes["cross_pairs"] > 0
    assert morse.cycle_morse_matching(10, 5).notes["cross_pairs"] == 0


def test_named_constructions():
    w = morse.whisker_matching(G.path(3), 3)
    assert w.acyclic and w.counts_by_dim == {2: 1}
    mp = morse.multipartite_matching([2, 2], 1)
    assert mp.counts_by_dim == {0: 1}
    with pytest.raises(G.GraphError):
        morse.multipartite_matching([3], 1)
    with pytest.raises(G.GraphError):
        morse.whisker_matching(G.empty_graph(2), 2)
    lf = morse.leafy_matching(G.path(3), [2, 1, 1], 4)
    assert lf.acyclic and lf.counts_by_dim == {3: 3}


def test_tree_collapse():
    sub = morse.tree_collapse(2, 3, 4)
    b3 = G.perfect_mary_tree(2, 3)
    root = b3.index(("a", 0, 1))
    assert all(root not in f for f in sub.all_faces())
    two = independence_complex(G.disjoint_union(G.perfect_mary_tree(2, 2), G.perfect_mary_tree(2, 2)), 4)
    assert f_vector(sub) == f_vector(two)
    expect = independence_complex(G.remove_vertices(b3, [root]), 4)
    relabel = [v for v in b3.vertices() if v != root]
    assert {tuple(relabel[v] for v in f) for f in expect.all_faces()} == set(sub.all_faces())
    assert reduced_homology(sub).short() == reduced_homology(independence_complex(b3, 4)).short() == "7:Z^9"
    with pytest.raises(ValueError):
        morse.tree_collapse(2, 2, 4)


@pytest.mark.parametrize("m,h,r", [(2, 3, 1), (2, 3, 2), (2, 3, 3), (3, 2, 1), (3, 2, 2)])
def test_tree_collapse_preserves_homology(m, h, r):
    full = reduced_homology(independence_complex(G.perfect_mary_tree(m, h), r))
    assert reduced_homology(morse.tree_collapse(m, h, r)).short() == full.short()


def _constructions():
    yield morse.path_perfect_matching(8, 3)
    yield morse.path_perfect_matching(9, 4)
    yield morse.cycle_morse_matching(8, 4)
    yield morse.cycle_morse_matching(9, 3)
    yield morse.whisker_matching(G.cycle(4), 5)
    yield morse.multipartite_matching([3, 2, 2], 3)
    yield morse.tree_matching(3, 2, 5)
    yield morse.tree_matching(2, 3, 3)
    yield morse.tree_reduction_matching(2, 3, 2)


@pytest.mark.parametrize("res", list(_constructions()), ids=lambda r: r.notes.get("construction"))
def test_inequalities_and_single_dimension(res):
    assert res.acyclic
    h = reduced_homology(res.complex)
    assert morse.morse_inequality_check(res, h)
    dims = set(res.counts_by_dim)
    if len(dims) == 1:
        (i,) = dims
        for d in range(h.lo, h.hi + 1):
            assert h[d].rank == (res.counts_by_dim[i] if d == i else 0) and not h[d].torsion


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_n=8), st.integers(1, 3), st.randoms(use_true_random=False))
def test_inequalities_random(g, r, rnd):
    k = independence_complex(g, r)
    xs = rnd.sample(range(g.n), rnd.randint(0, g.n)) if g.n else []
    m, _ = morse.element_matching_sequence(k, xs)
    res = morse.morse_result(k.all_faces(), m, k)
    assert res.acyclic and morse.morse_inequality_check(res, reduced_homology(k))


def test_perfect_matching_counts_equal_betti():
    res = morse.path_perfect_matching(11, 4)
    h = reduced_homology(res.complex)
    for d in range(h.lo, h.hi + 1):
        assert res.counts_by_dim.get(d, 0) == h[d].rank
    cyc = morse.cycle_morse_matching(12, 4)
    assert cyc.counts_by_dim == {5: 3} == {d: g.rank for d, g in reduced_homology(cyc.complex).nonzero().items()}


def test_cell_count_convention():
    res = morse.path_perfect_matching(6, 3)
    assert res.empty_paired and res.cell_counts() == {0: 1, 1: 1}
    # the Euler identity shifts by one when the empty face stays critical
    k = SimplicialComplex(0, [()])
    lone = morse.morse_result(k.all_faces(), Matching(), k)
    assert lone.counts_by_dim == {-1: 1} and lone.cell_counts() == {}
    assert morse.morse_inequality_check(lone, reduced_homology(k))


def test_export_roundtrip():
    res = morse.cycle_morse_matching(7, 3)
    text = morse.format_matching(res)
    assert text.startswith("- -> ") and "critical:" in text
    m, crit = morse.parse_matching(text)
    assert m.pairs() == res.matching.pairs() and crit == res.critical

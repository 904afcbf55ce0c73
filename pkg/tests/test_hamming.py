"""Spaces, vertices, adjacency, cliques, hyperfaces."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcforge.hamming import (Clique, Code, Hyperface, Space, all_cliques,
                              all_hyperfaces, clique_vertices, hamming_distance,
                              hyperface_vertices, make_space, neighbors)

SMALL_SPACES = [Space(3, 2), Space(2, 3), Space(3, 3), Space(4, 2), Space(2, 5)]


def test_space_basics():
    sp = make_space(3, 6)
    assert sp.size == 216
    assert sp.valency == 15
    assert make_space(3, 45).size == 91125
    assert make_space(1, 2).valency == 1


def test_space_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        make_space(0, 5)
    with pytest.raises(ValueError):
        make_space(2, 1)
    with pytest.raises(ValueError):
        make_space(64, 64)  # beyond the vertex cap


def test_index_vertex_bijection_is_lexicographic():
    sp = Space(3, 4)
    seen = [sp.vertex(i) for i in range(sp.size)]
    assert seen == sorted(seen)  # index order == lex order
    assert seen == list(sp.vertices())
    for i, v in enumerate(seen):
        assert sp.index(v) == i


def test_index_rejects_foreign_vertices():
    sp = Space(2, 3)
    with pytest.raises(ValueError):
        sp.index((0, 3))
    with pytest.raises(ValueError):
        sp.index((0, 0, 0))


def test_neighbors_example_h23():
    # position-major, symbol-ascending
    sp = Space(2, 3)
    assert neighbors(sp, (1, 2)) == [(0, 2), (2, 2), (1, 0), (1, 1)]


def test_neighbors_are_exactly_distance_one():
    for sp in SMALL_SPACES:
        for v in sp.vertices():
            ns = neighbors(sp, v)
            assert len(ns) == sp.valency
            assert len(set(ns)) == len(ns)
            assert all(hamming_distance(v, u) == 1 for u in ns)


def test_adjacency_symmetric_exhaustive():
    for sp in SMALL_SPACES:
        adj = {v: set(neighbors(sp, v)) for v in sp.vertices()}
        for v in sp.vertices():
            for u in adj[v]:
                assert v in adj[u]


def test_clique_count_formula():
    for sp in SMALL_SPACES + [Space(3, 4)]:
        assert len(list(all_cliques(sp))) == sp.n * sp.q ** (sp.n - 1)


def test_cliques_match_brute_force_maximal_cliques():
    # independent oracle: maximal cliques of the explicit graph
    nx = pytest.importorskip("networkx")
    sp = Space(3, 4)
    g = nx.Graph()
    for v in sp.vertices():
        for u in neighbors(sp, v):
            g.add_edge(v, u)
    brute = {frozenset(c) for c in nx.find_cliques(g)}
    ours = {frozenset(clique_vertices(sp, c)) for c in all_cliques(sp)}
    assert brute == ours
    assert len(ours) == 48


def test_clique_vertices_structure():
    sp = Space(3, 5)
    c = Clique(2, (0, 1))
    vs = clique_vertices(sp, c)
    assert vs == [(0, s, 1) for s in range(5)]
    for u, v in itertools.combinations(vs, 2):
        assert hamming_distance(u, v) == 1
    with pytest.raises(ValueError):
        clique_vertices(sp, Clique(4, (0, 1)))
    with pytest.raises(ValueError):
        clique_vertices(sp, Clique(1, (0,)))


def test_hyperface_vertices():
    sp = Space(3, 2)
    h = Hyperface(3, 1)
    vs = hyperface_vertices(sp, h)
    assert vs == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert len(list(all_hyperfaces(sp))) == 6
    with pytest.raises(ValueError):
        hyperface_vertices(sp, Hyperface(1, 2))


def test_disjoint_cliques_meet_each_hyperface_once():
    # k pairwise-disjoint cliques of codirection i put exactly k vertices
    # into every hyperface of direction i
    sp = Space(3, 4)
    chosen = [Clique(2, (0, 1)), Clique(2, (1, 3)), Clique(2, (3, 0))]
    vsets = [set(clique_vertices(sp, c)) for c in chosen]
    for a, b in itertools.combinations(vsets, 2):
        assert not a & b
    for s in range(sp.q):
        face = set(hyperface_vertices(sp, Hyperface(2, s)))
        assert sum(len(face & vs) for vs in vsets) == len(chosen)
        for vs in vsets:
            assert len(face & vs) == 1


def test_code_storage_and_complement():
    sp = Space(3, 2)
    c = Code.from_vertices(sp, [(0, 0, 0), (1, 1, 1)])
    assert c.size == 2
    assert (0, 0, 0) in c and (0, 1, 0) not in c
    assert c.vertices() == [(0, 0, 0), (1, 1, 1)]
    comp = c.complement()
    assert comp.size == 6
    assert comp.complement() == c
    with pytest.raises(ValueError):
        c.mask[0] = True  # indicators are frozen


def test_code_from_indices_and_equality():
    sp = Space(2, 3)
    a = Code.from_indices(sp, [0, 4, 8])
    b = Code.from_vertices(sp, [(0, 0), (1, 1), (2, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Code.from_indices(sp, [0, 4])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(2, 5), st.data())
def test_index_roundtrip_random(n, q, data):
    sp = Space(n, q)
    i = data.draw(st.integers(0, sp.size - 1))
    assert sp.index(sp.vertex(i)) == i


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.integers(2, 5), st.data())
def test_neighbor_symmetry_random(n, q, data):
    sp = Space(n, q)
    v = tuple(data.draw(st.integers(0, q - 1)) for _ in range(n))
    for u in neighbors(sp, v):
        assert v in neighbors(sp, u)

import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from petersen_cover import ParameterError, PetersenGraph, Vertex, build_graph
from petersen_cover.graph import (
    INNER,
    OUTER,
    SPOKE,
    U_EDGE,
    V_EDGE,
    admissible_pairs,
    read_dimacs,
)

from oracles import bfs_bipartite, petersen_edges


@st.composite
def params(draw, max_n=40):
    n = draw(st.integers(3, max_n))
    k = draw(st.integers(1, (n - 1) // 2))
    return n, k


def test_petersen_graph_counts():
    g = build_graph(5, 2)
    assert g.order == 10
    assert len(g.edges) == 15
    assert all(g.degree(v) == 3 for v in g.vertices())


def test_figure_graph_p16_5(p16_5):
    assert p16_5.order == 32 and len(p16_5.edges) == 48
    assert p16_5.g == 1


@pytest.mark.parametrize("n,k", [(4, 2), (5, 0), (2, 1), (10, 5), (3, -1)])
def test_rejects_inadmissible(n, k):
    with pytest.raises(ParameterError):
        build_graph(n, k)


@given(params())
def test_structure_invariants(nk):
    n, k = nk
    g = PetersenGraph(n, k)
    assert len(g.edges) == 3 * n
    assert all(a.bit_count() == 3 for a in g.adjacency)
    kinds = Counter(kind for _, _, kind in g.edges)
    assert kinds == {U_EDGE: n, SPOKE: n, V_EDGE: n}
    got = {frozenset({(e.a.side, e.a.index), (e.b.side, e.b.index)}) for e in g.edge_list()}
    assert got == petersen_edges(n, k)


@given(params())
def test_edge_kinds_match_endpoints(nk):
    n, k = nk
    g = PetersenGraph(n, k)
    for e in g.edge_list():
        d = (e.b.index - e.a.index) % n
        if e.kind == U_EDGE:
            assert e.a.side == e.b.side == OUTER and d in (1, n - 1)
        elif e.kind == SPOKE:
            assert e.a.side != e.b.side and e.a.index == e.b.index
        else:
            assert e.a.side == e.b.side == INNER and d in (k, n - k)


def test_canonical_edge_order():
    g = PetersenGraph(7, 3)
    e = g.edge_list()
    assert [x.kind for x in e] == [U_EDGE] * 7 + [SPOKE] * 7 + [V_EDGE] * 7
    assert (e[0].a, e[0].b) == (Vertex("u", 1), Vertex("u", 2))
    assert (e[6].a, e[6].b) == (Vertex("u", 1), Vertex("u", 7))
    v_edges = [tuple(sorted((x.a.index, x.b.index))) for x in e[14:]]
    assert v_edges == sorted(v_edges)
    assert PetersenGraph(7, 3).edges == g.edges


def test_twin(p16_5):
    assert p16_5.twin(Vertex("u", 3)) == Vertex("v", 3)
    assert p16_5.twin(Vertex("v", 16)) == Vertex("u", 16)
    for v in p16_5.vertices():
        assert p16_5.twin(p16_5.twin(v)) == v
        assert p16_5.twin(v).side != v.side


def test_subscripts_wrap():
    g = PetersenGraph(16, 5)
    assert g.v(17) == Vertex("v", 1)
    assert g.u(0) == Vertex("u", 16)
    assert g.vid(Vertex("v", 21)) == g.vid(Vertex("v", 5))


def test_inner_cycles():
    cyc = PetersenGraph(9, 3).inner_cycles()
    assert [[v.index for v in c] for c in cyc] == [[1, 4, 7], [2, 5, 8], [3, 6, 9]]
    assert [len(c) for c in PetersenGraph(5, 2).inner_cycles()] == [5]
    assert [len(c) for c in PetersenGraph(16, 5).inner_cycles()] == [16]


@given(params())
def test_inner_cycles_partition(nk):
    n, k = nk
    g = PetersenGraph(n, k)
    cycles = g.inner_cycles()
    assert len(cycles) == g.g
    assert all(len(c) == n // g.g for c in cycles)
    flat = [v for c in cycles for v in c]
    assert sorted(v.index for v in flat) == list(range(1, n + 1))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            assert g.adjacency[g.vid(a)] >> g.vid(b) & 1


def test_sector(p16_5):
    s = p16_5.sector(0, 4)
    assert s == {Vertex(side, i) for side in "uv" for i in (1, 2, 3, 4)}
    s = p16_5.sector(14, 4)
    assert s == {Vertex(side, i) for side in "uv" for i in (15, 16, 1, 2)}
    assert p16_5.sector(0, 16) == set(p16_5.vertices())
    with pytest.raises(ValueError):
        p16_5.sector(0, 17)
    with pytest.raises(ValueError):
        p16_5.sector(0, 0)


def test_bipartite_examples():
    assert PetersenGraph(16, 5).is_bipartite().bipartite
    chk = PetersenGraph(5, 2).is_bipartite()
    assert not chk.bipartite
    assert chk.odd_cycle == tuple(Vertex("u", i) for i in range(1, 6))
    chk = PetersenGraph(6, 2).is_bipartite()
    assert not chk.bipartite
    assert [str(v) for v in chk.odd_cycle] == ["u1", "v1", "v3", "u3", "u2"]


@pytest.mark.parametrize("n,k", list(admissible_pairs(20)))
def test_bipartite_matches_generic_coloring(n, k):
    g = PetersenGraph(n, k)
    chk = g.is_bipartite()
    assert chk.bipartite == bfs_bipartite(n, k) == (n % 2 == 0 and k % 2 == 1)
    if chk.bipartite:
        part = g.mask_of(chk.part)
        assert part.bit_count() == n
        assert all((part >> a & 1) != (part >> b & 1) for a, b, _ in g.edges)
    else:
        cyc = [g.vid(v) for v in chk.odd_cycle]
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.adjacency[a] >> b & 1 for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_dimacs_export_roundtrip():
    g = PetersenGraph(5, 2)
    text = g.to_dimacs()
    assert "p edge 10 15" in text.splitlines()
    nv, edges = read_dimacs(text)
    assert nv == 10
    # u_i -> i, v_i -> n + i
    assert (1, 6) in edges and (6, 8) in edges and (1, 2) in edges
    assert {tuple(sorted(e)) for e in edges} == {(a + 1, b + 1) for a, b, _ in g.edges}


def test_json_export():
    data = json.loads(PetersenGraph(16, 5).to_json())
    assert len(data["vertices"]) == 32 and len(data["edges"]) == 48
    assert data["vertices"][16] == {"id": 17, "side": "v", "index": 1}


def test_read_dimacs_rejects_garbage():
    with pytest.raises(ValueError):
        read_dimacs("e 1 2\n")
    with pytest.raises(ValueError):
        read_dimacs("p edge 2 1\nx 1 2\n")


def test_admissible_pairs_order():
    assert list(admissible_pairs(5)) == [(3, 1), (4, 1), (5, 1), (5, 2)]

import pytest
from hypothesis import given, settings, strategies as st

from petersen_cover import (
    Cover,
    CoverDomainError,
    ParameterError,
    PetersenGraph,
    TilingParams,
    alternating_cycles_cover,
    best_construction,
    beta_exact,
    bipartite_cover,
    enumerate_min_covers,
    even_k_cover,
    is_cover,
    k1_cover,
    odd_odd_cover,
    reduce_strips,
    strips,
    tiled_cover,
)
from petersen_cover.solver import so_completion
from petersen_cover.constructions import (
    ALTERNATING_CYCLES,
    BIPARTITE,
    ODD_ODD,
    applicable_constructions,
    fallback_cover,
    strip_target,
    tiling_sizes,
)
from petersen_cover.graph import admissible_pairs


def _check(g, res):
    assert is_cover(g, res.cover), (g, res.method)
    assert res.size <= res.claimed_bound


@pytest.mark.parametrize("n,k", [(16, 5), (6, 1), (8, 3)])
def test_bipartite_cover(n, k):
    g = PetersenGraph(n, k)
    res = bipartite_cover(g)
    _check(g, res)
    assert res.size == n


@pytest.mark.parametrize("n,k,size", [(15, 5, 18), (9, 3, 11), (7, 3, 9)])
def test_odd_odd_cover(n, k, size):
    g = PetersenGraph(n, k)
    res = odd_odd_cover(g)
    _check(g, res)
    assert res.size == size


@pytest.mark.parametrize("n,size", [(11, 12), (3, 4), (7, 8)])
def test_k1_cover(n, size):
    g = PetersenGraph(n, 1)
    res = k1_cover(g)
    _check(g, res)
    assert res.size == size


@pytest.mark.parametrize(
    "builder,n,k",
    [(bipartite_cover, 9, 3), (bipartite_cover, 8, 2), (odd_odd_cover, 10, 3),
     (k1_cover, 8, 1), (k1_cover, 9, 2), (even_k_cover, 9, 2), (even_k_cover, 13, 3)],
)
def test_preconditions(builder, n, k):
    with pytest.raises(ParameterError):
        builder(PetersenGraph(n, k))


def test_alternating_cycles_cover():
    g = PetersenGraph(9, 3)
    res = alternating_cycles_cover(g)
    _check(g, res)
    assert res.claimed_bound == 12
    assert 11 <= res.size <= 12
    g = PetersenGraph(8, 2)
    res = alternating_cycles_cover(g)
    _check(g, res)
    assert res.claimed_bound == 10


def test_tiled_exact_p12_5():
    g = PetersenGraph(12, 5)
    base = beta_exact(PetersenGraph(4, 1)).witness
    res = tiled_cover(g, 4, base)
    _check(g, res)
    assert res.size == res.claimed_bound == 12 == beta_exact(g).beta


def test_tiled_padded_p14_5():
    g = PetersenGraph(14, 5)
    base = beta_exact(PetersenGraph(4, 1)).witness
    res = tiled_cover(g, TilingParams.for_graph(14, 5, 4), base)
    _check(g, res)
    assert res.claimed_bound == 22


def test_tiling_preconditions():
    g = PetersenGraph(12, 5)
    with pytest.raises(ParameterError):
        TilingParams.for_graph(12, 5, 3)
    with pytest.raises(ParameterError):
        tiled_cover(g, 5, Cover.full(4, 1))
    with pytest.raises(ParameterError):
        tiled_cover(g, 4, Cover.full(5, 2))
    with pytest.raises(CoverDomainError):
        tiled_cover(g, 4, Cover(4, 1, 0, 0))


@settings(max_examples=150, deadline=None)
@given(st.integers(5, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, (n - 1) // 2))))
def test_tiling_covers_every_v_edge(nk):
    n, k = nk
    g = PetersenGraph(n, k)
    for m in tiling_sizes(k):
        r = k % m
        base = best_construction(PetersenGraph(m, r)).cover
        res = tiled_cover(g, m, base)
        _check(g, res)
        if n % m == 0:
            assert res.size == (n // m) * base.size


@pytest.mark.parametrize("n,k,bound", [(9, 4, 12), (21, 4, 28), (10, 4, 21)])
def test_even_k_cover(n, k, bound):
    g = PetersenGraph(n, k)
    res = even_k_cover(g)
    _check(g, res)
    assert res.claimed_bound == bound


def test_fallback_is_trivial_cover():
    g = PetersenGraph(11, 4)
    res = fallback_cover(g)
    _check(g, res)
    assert res.size == 11 + 6


@pytest.mark.parametrize(
    "n,k,method,size", [(16, 5, BIPARTITE, 16), (15, 5, ODD_ODD, 18)]
)
def test_best_construction_examples(n, k, method, size):
    res = best_construction(PetersenGraph(n, k))
    assert res.method == method and res.size == size


def test_best_construction_p9_4():
    g = PetersenGraph(9, 4)
    res = best_construction(g)
    assert is_cover(g, res.cover) and res.size <= 12
    assert res.size >= beta_exact(g).beta


@pytest.mark.parametrize("n,k", list(admissible_pairs(30)))
def test_every_applicable_construction(n, k):
    g = PetersenGraph(n, k)
    for res in applicable_constructions(g):
        _check(g, res)


def test_certificate_carries_method():
    cert = odd_odd_cover(PetersenGraph(9, 3)).to_certificate()
    assert cert["method"] == ODD_ODD and cert["claimed_bound"] == 11 and cert["size"] == 11


# strip reduction


def test_strip_target():
    assert strip_target(3) == 4 and strip_target(4) == 6


@pytest.mark.parametrize("n,k", [(n, k) for n, k in admissible_pairs(12)])
def test_reduce_strips_on_all_minimum_covers(n, k):
    g = PetersenGraph(n, k)
    enum = enumerate_min_covers(g)
    for c in enum.covers:
        if c.v == (1 << n) - 1:
            continue
        red = reduce_strips(g, c)
        assert red.cover.size == enum.beta
        assert is_cover(g, red.cover)
        assert max(s.size for s in strips(red.cover)) <= strip_target(k)
        assert red.iterations <= n * n


def test_reduce_strips_shortens_long_minimum_covers():
    hit = 0
    for n, k in [(6, 2), (7, 3), (11, 5), (12, 2)]:
        g = PetersenGraph(n, k)
        for c in enumerate_min_covers(g).covers:
            if max(s.size for s in strips(c)) > strip_target(k):
                red = reduce_strips(g, c)
                assert red.cover != c and red.cover.size == c.size
                assert red.max_strip <= strip_target(k)
                hit += 1
    assert hit > 0


def test_reduce_strips_exchange_move():
    # a single 7-strip; no inner vertex is redundant, so only an exchange helps
    g = PetersenGraph(11, 4)
    c = so_completion(0b1111111, 11, 4)
    red = reduce_strips(g, c)
    assert red.exchanges >= 1
    assert red.cover.size <= c.size and is_cover(g, red.cover)
    assert red.max_strip <= strip_target(4)


def test_reduce_strips_noop_when_short():
    g = PetersenGraph(9, 3)
    c = odd_odd_cover(g).cover
    red = reduce_strips(g, c)
    assert red.exchanges == 0 and red.cover.size == c.size


def test_reduce_strips_rejects_non_cover():
    g = PetersenGraph(9, 3)
    with pytest.raises(CoverDomainError):
        reduce_strips(g, Cover(9, 3, 0, 1))

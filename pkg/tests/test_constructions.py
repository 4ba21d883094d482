import pytest

from pathturan.canon import are_isomorphic
from pathturan.constructions import (
    ComponentKind,
    WParams,
    build_w,
    classify_component,
    dp_built,
    dp_complete,
    dp_of_w,
    t_of,
    w_degree_multiset,
)
from pathturan.errors import DomainError
from pathturan.graph import Graph, PowerParam, disjoint_union
from pathturan.paths import is_path_free, longest_path_order

P2 = PowerParam(2, "exact")


@pytest.mark.parametrize("k, t", [(4, 1), (5, 1), (6, 2), (7, 2), (10, 4), (11, 4)])
def test_t_of(k, t):
    assert t_of(k) == t


def test_t_of_domain():
    with pytest.raises(DomainError):
        t_of(3)


def test_small_w_is_a_path():
    g = build_w(WParams(3, 3, 1))
    assert are_isomorphic(g, Graph.path(3))
    assert sorted(g.degrees(), reverse=True) == [2, 1, 1]


def test_w_degree_multiset_example():
    g = build_w(WParams(8, 5, 2))
    assert sorted(g.degrees(), reverse=True) == [7, 7, 2, 2, 2, 2, 2, 2]
    assert w_degree_multiset(WParams(8, 5, 2)) == {7: 2, 2: 6}


def test_w_without_outer_part_is_a_clique():
    assert build_w(WParams(4, 6, 2)) == Graph.complete(4)


def test_w_parameter_validation():
    for args in [(5, 5, 0), (5, 3, 2), (2, 5, 2)]:
        with pytest.raises(DomainError):
            WParams(*args)
    assert not WParams.valid(2, 5, 2)


@pytest.mark.parametrize(
    "n, k, s, value",
    [(8, 5, 2, 122), (3, 3, 1, 6), (18, 3, 1, 306), (12, 5, 2, 282), (6, 5, 2, 66), (17, 5, 2, 572), (18, 5, 2, 642)],
)
def test_closed_form_examples(n, k, s, value):
    assert dp_of_w(WParams(n, k, s), P2) == value


@pytest.mark.parametrize("r, value", [(3, 12), (1, 0), (5, 80)])
def test_complete_graph_values(r, value):
    assert dp_complete(r, P2) == value


def _all_w(n_max=20, k_max=12):
    for k in range(2, k_max + 1):
        for s in range(1, k // 2 + 1):
            for n in range(k - s, n_max + 1):
                yield WParams(n, k, s)


@pytest.mark.parametrize("p", [1, 2, 3, 2.5])
def test_closed_form_matches_built_graph(p):
    pp = PowerParam.auto(p)
    for wp in _all_w():
        if pp.exact:
            assert dp_of_w(wp, pp) == dp_built(wp, pp)
        else:
            assert dp_of_w(wp, pp) == pytest.approx(dp_built(wp, pp), rel=1e-12)


def test_w_family_is_path_free():
    # With Y nonempty, W(n, k, s) has no path on k + 1 vertices, and reaches k once Z is large enough.
    # (With Y empty the hubs alternate with Z and give 2s + 1 = k + 1.)
    for wp in _all_w(n_max=14):
        g = build_w(wp)
        if wp.k == 2 * wp.s:
            assert longest_path_order(g) == min(wp.n, wp.k + 1)
            continue
        assert is_path_free(g, wp.k + 1)
        if wp.n - (wp.k - wp.s) >= wp.s:
            assert longest_path_order(g) == wp.k


def test_classification_examples():
    assert classify_component(Graph.complete(5), 6).kind is ComponentKind.CLIQUE
    assert classify_component(build_w(WParams(9, 5, 1)), 6).kind is ComponentKind.TYPE_A
    assert classify_component(build_w(WParams(9, 5, 2)), 6).kind is ComponentKind.TYPE_B
    assert classify_component(build_w(WParams(9, 3, 1)), 4).kind is ComponentKind.TYPE_AB_COINCIDENT
    assert classify_component(Graph.cycle(5), 6).kind is ComponentKind.OTHER
    assert classify_component(build_w(WParams(9, 5, 1)).relabel([8, 7, 6, 5, 4, 3, 2, 1, 0]), 6).order == 9


def test_classification_needs_connected_input():
    with pytest.raises(DomainError):
        classify_component(disjoint_union(Graph.complete(2), Graph.complete(2)), 4)

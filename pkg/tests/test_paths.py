import pytest
from hypothesis import given, settings

from pathturan.constructions import WParams, build_w
from pathturan.errors import CapacityError, DomainError
from pathturan.graph import Graph, disjoint_union
from pathturan.paths import MAX_COMPONENT, is_path_free, longest_path_order

from conftest import graphs
from oracles import atlas, naive_longest_path


@pytest.mark.parametrize(
    "g, expected",
    [
        (Graph.complete(4), 4),
        (Graph.star(6), 3),
        (build_w(WParams(10, 5, 2)), 5),
        (Graph.empty(3), 1),
        (Graph.empty(0), 0),
        (Graph.complete(20), 20),
        (Graph.cycle(12), 12),
    ],
)
def test_longest_path_examples(g, expected):
    assert longest_path_order(g) == expected


def test_path_freeness_examples():
    assert is_path_free(Graph.complete(5), 6)
    assert not is_path_free(Graph.path(6), 6)
    assert is_path_free(build_w(WParams(12, 5, 2)), 6)


def test_bad_path_order():
    with pytest.raises(DomainError):
        is_path_free(Graph.complete(3), 1)


def test_large_component_is_refused():
    with pytest.raises(CapacityError):
        longest_path_order(Graph.path(MAX_COMPONENT + 1))
    # many small components are fine
    g = Graph.empty(0)
    for _ in range(4):
        g = disjoint_union(g, Graph.cycle(10))
    assert longest_path_order(g) == 10


@pytest.mark.parametrize("n", range(8))
def test_agrees_with_naive_search_on_all_small_graphs(n):
    for g in atlas(n):
        expected = naive_longest_path(g)
        assert longest_path_order(g) == expected
        for k in range(2, n + 2):
            assert is_path_free(g, k) == (expected < k)


@settings(max_examples=100, deadline=None)
@given(graphs(min_order=8, max_order=9))
def test_agrees_with_naive_search_on_random_graphs(g):
    assert longest_path_order(g) == naive_longest_path(g)

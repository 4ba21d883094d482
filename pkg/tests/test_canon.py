import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
import pytest
from hypothesis import given, settings, strategies as st

from pathturan.canon import (
    are_isomorphic,
    automorphism_orbits,
    canonical_form,
    canonical_form_bruteforce,
    canonical_labeling,
)
from pathturan.graph import Graph

from conftest import graphs
from oracles import all_labeled_graphs, atlas, to_networkx


def test_relabeled_path_has_same_form():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)


def test_triangle_and_path_differ():
    assert canonical_form(Graph.complete(3)) != canonical_form(Graph.path(3))


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_labeled_graphs_collapse_to_isomorphism_classes(n, classes):
    assert len({canonical_form(g) for g in all_labeled_graphs(n)}) == classes


@pytest.mark.parametrize("n", range(8))
def test_atlas_graphs_have_distinct_forms(n):
    forms = {canonical_form(g) for g in atlas(n)}
    assert len(forms) == len(atlas(n))


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_form_is_invariant_under_relabeling(data):
    g = data.draw(graphs(max_order=14))
    perm = data.draw(st.permutations(range(g.order)))
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=6), graphs(max_order=6))
def test_form_agrees_with_bruteforce(a, b):
    assert (canonical_form(a) == canonical_form(b)) == (canonical_form_bruteforce(a) == canonical_form_bruteforce(b))


@settings(max_examples=150, deadline=None)
@given(graphs(max_order=12))
def test_canonical_graph_is_isomorphic_image(g):
    lab = canonical_labeling(g)
    assert nx.is_isomorphic(to_networkx(lab.graph()), to_networkx(g))
    assert sorted(lab.position) == list(range(g.order))


def _nx_orbits(g):
    h = to_networkx(g)
    orbit = list(range(g.order))
    for iso in GraphMatcher(h, h).isomorphisms_iter():
        for v, w in iso.items():
            orbit[w] = min(orbit[w], v)
    return orbit


@settings(max_examples=100, deadline=None)
@given(graphs(max_order=8))
def test_orbits_match_networkx(g):
    def partition(labels):
        return sorted(sorted(v for v in range(g.order) if labels[v] == c) for c in set(labels))

    assert partition(automorphism_orbits(g)) == partition(_nx_orbits(g))


def test_regular_graphs():
    petersen = Graph.from_edges(10, list(nx.petersen_graph().edges()))
    assert len(set(automorphism_orbits(petersen))) == 1
    prism = Graph.from_edges(10, list(nx.circular_ladder_graph(5).edges()))
    assert canonical_form(petersen) != canonical_form(prism)

from hypothesis import strategies as st

from pathturan.graph import Graph


@st.composite
def graphs(draw, min_order=0, max_order=10):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def permuted(draw, g):
    perm = draw(st.permutations(range(g.order)))
    return g.relabel(perm)

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realzeros import graphs as gr
from realzeros.families import orthogonal
from realzeros.poly import Poly, parse
from realzeros.roots import is_pf

TRIANGLE = gr.GraphSpec(3, ((0, 1), (1, 2), (0, 2)))


def test_count_examples():
    assert gr.matching_counts(gr.path_graph(3)) == [1, 2]
    assert gr.matching_counts(TRIANGLE) == [1, 3]
    assert gr.matching_counts(gr.GraphSpec(4)) == [1]


def test_polynomial_examples():
    assert gr.matching_polynomial(gr.path_graph(3)) == parse("x^3-2x")
    assert gr.matching_polynomial(TRIANGLE) == parse("x^3-3x")
    assert gr.matching_polynomial(gr.GraphSpec(1)) == parse("x")


def test_heilmann_lieb_examples():
    assert gr.verify_heilmann_lieb(gr.GraphSpec(3, ((0, 1, 1), (1, 2, 2), (0, 2, 3)))).conclusion_verdict
    edge = gr.GraphSpec(2, ((0, 1, 5),))
    assert gr.matching_polynomial(edge) == parse("x^2-5")
    assert gr.verify_heilmann_lieb(edge).conclusion_verdict


def test_rook_examples():
    assert gr.rook_polynomial([(0, 0), (0, 1), (1, 0), (1, 1)]) == parse("1+4x+2x^2")
    assert gr.rook_polynomial([(0, 0)]) == parse("1+x")
    assert gr.rook_polynomial([(1, 1), (2, 1), (2, 2)]) == parse("1+3x+x^2")


@pytest.mark.parametrize("bad", [
    ((0, 0),),
    ((0, 1), (1, 0)),
    ((0, 1, -1),),
    ((0, 5),),
])
def test_graph_validation(bad):
    with pytest.raises(ValueError):
        gr.GraphSpec(3, bad)


def test_float_weight_rejected():
    with pytest.raises(TypeError):
        gr.GraphSpec(2, ((0, 1, 0.5),))


def test_vertex_cap():
    with pytest.raises(ValueError):
        gr.matching_counts(gr.GraphSpec(gr.MAX_VERTICES + 1))


def test_parsers():
    g = gr.parse_graph("# triangle\n3\n0 1\n1 2 2\n0 2 1/2\n")
    assert g.edges == ((0, 1, 1), (0, 2, Fraction(1, 2)), (1, 2, 2))
    assert gr.parse_board("0 0\n0 1 # top row\n") == [(0, 0), (0, 1)]
    with pytest.raises(ValueError):
        gr.parse_graph("3\n0 1 2 3\n")


def test_paths_follow_tchebyshev_recurrence():
    # M(P_n, 2x) satisfies U_n = 2x U_{n-1} - U_{n-2} with U_0 = 1, U_1 = 2x
    u = orthogonal("tchebyshev", 8, t1=2)
    for n in range(0, 9):
        m = gr.matching_polynomial(gr.path_graph(n)).compose(parse("2x"))
        assert m == u[n]


@st.composite
def small_graphs(draw, max_vertices=6):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12) if pairs else st.just([]))
    weights = draw(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=4),
                            min_size=len(chosen), max_size=len(chosen)))
    return gr.GraphSpec(n, tuple((u, v, w) for (u, v), w in zip(chosen, weights)))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_recurrence_matches_bruteforce(g):
    assert gr.matching_counts(g) == gr.matching_counts_bruteforce(g)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_isolated_vertex_multiplies_by_x(g):
    bigger = gr.GraphSpec(g.vertex_count + 1, g.edges)
    assert gr.matching_polynomial(bigger) == gr.matching_polynomial(g) * parse("x")


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_vertices=7))
def test_heilmann_lieb_random(g):
    assert gr.verify_heilmann_lieb(g).conclusion_verdict


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=9, unique=True))
def test_rook_polynomials_pf(cells):
    p = gr.rook_polynomial(cells)
    assert all(c.denominator == 1 and c >= 0 for c in p.coeffs)
    assert is_pf(p)


def test_small_connected_graphs_count():
    # connected graphs on 1..6 vertices up to isomorphism: 1 + 1 + 2 + 6 + 21 + 112
    assert len(gr.small_connected_graphs(6)) == 143


def test_random_graph_generator_is_seeded():
    a = gr.random_weighted_graph(random.Random(7))
    b = gr.random_weighted_graph(random.Random(7))
    assert a == b and a.vertex_count <= 10


def test_unsigned_polynomial():
    assert gr.matching_generating_polynomial(gr.path_graph(4)) == Poly([1, 3, 1])

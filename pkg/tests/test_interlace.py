
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realzeros.interlace import (
    compare_zero_orders,
    generalized_sturm_failure,
    is_generalized_sturm_sequence,
    is_sturm_sequence,
    prec,
    preceq,
)
from realzeros.families import orthogonal
from realzeros.poly import Poly, parse
from realzeros.roots import is_real_rooted

from conftest import real_rooted_polys

F3 = Poly([0, 2]) * parse("5x^2+5x+1")
F2 = Poly([0, 2]) * parse("x+1")


def test_relation_examples():
    assert compare_zero_orders(parse("x^2-1"), parse("x")).relation == "strict_interlaces"
    f = Poly.from_roots([2, 4])
    g = Poly.from_roots([1, 3])
    assert compare_zero_orders(f, g).relation == "strict_alternates"


def test_zhang_pair_none():
    cert = compare_zero_orders(F3, F2)
    assert cert.relation == "none"
    assert cert.witness
    assert not preceq(F2, F3)


def test_preceq_examples():
    assert preceq(parse("x"), parse("x^2-1")) and prec(parse("x"), parse("x^2-1"))
    assert preceq(parse("x-1"), parse("x-1")) and not prec(parse("x-1"), parse("x-1"))
    assert preceq(Poly.constant(3), parse("5x+1"))


def test_zero_polynomial_degenerate():
    cert = compare_zero_orders(Poly(), parse("x"))
    assert cert.relation == "alternates" and cert.degenerate


def test_sturm_examples():
    assert is_sturm_sequence([Poly.constant(1), parse("x"), parse("x^2-1")])
    assert not is_sturm_sequence([Poly.constant(1), parse("x"), parse("x^2")])
    assert is_sturm_sequence(orthogonal("tchebyshev", 3))


def test_sturm_rejects_nonstandard():
    with pytest.raises(ValueError):
        is_sturm_sequence([Poly.constant(1), parse("-x")])


def test_generalized_sturm_examples():
    p = parse("x^3-3x")
    assert is_generalized_sturm_sequence([p.derivative().derivative(), p.derivative(), p])
    zhang = [Poly.constant(1), parse("x"), F2, F3]
    assert not is_generalized_sturm_sequence(zhang)
    assert generalized_sturm_failure(zhang) == 3  # pair (f2, f3)
    assert is_generalized_sturm_sequence([Poly.constant(1), parse("x"), parse("x^2+x")])


def _negate_roots(p):
    return p.compose(parse("-x")) * (-1) ** max(p.degree, 0)


@settings(max_examples=60, deadline=None)
@given(real_rooted_polys(max_deg=5), real_rooted_polys(max_deg=5))
def test_reflection_symmetry(f, g):
    if f.degree != g.degree:
        return
    if preceq(g, f):
        # negating roots reverses order, so the roles swap
        assert preceq(_negate_roots(f), _negate_roots(g))


@settings(max_examples=60, deadline=None)
@given(real_rooted_polys(min_deg=2, max_deg=6, distinct=True))
def test_derivative_strictly_interlaces(p):
    assert prec(p.derivative(), p)


@settings(max_examples=30, deadline=None)
@given(real_rooted_polys(max_deg=5), real_rooted_polys(max_deg=5))
def test_deterministic(f, g):
    assert compare_zero_orders(f, g) == compare_zero_orders(f, g)


@settings(max_examples=60, deadline=None)
@given(
    real_rooted_polys(min_deg=2, max_deg=5, distinct=True),
    st.fractions(min_value=0, max_value=4, max_denominator=5),
    st.fractions(min_value=0, max_value=4, max_denominator=5),
)
def test_nonnegative_combinations_of_prec_pair(f, c, d):
    g = f.derivative()
    if c == 0 and d == 0:
        return
    assert is_real_rooted(f * c + g * d)

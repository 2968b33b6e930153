import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from realzeros.poly import Poly, parse
from realzeros.roots import (
    _simplest_open,
    approximate_roots,
    count_real_roots,
    isolate_real_roots,
    is_pf,
    is_real_rooted,
    negative_witness,
    nonnegative_on,
    positive_on,
    refine_root,
    sign_at_root,
    simplest_rational,
    sturm_chain,
)

from conftest import real_rooted_polys


def _chain(p):
    return [q for q in sturm_chain(p)]


def test_sturm_chain_examples():
    assert _chain(parse("x^2-2")) == [parse("x^2-2"), parse("2x"), parse("2")]
    assert _chain(parse("x")) == [parse("x"), parse("1")]
    assert _chain(parse("x^2+1")) == [parse("x^2+1"), parse("2x"), parse("-1")]


def test_count_examples():
    assert count_real_roots(parse("x^2-2"), 0, 2) == 1
    assert count_real_roots(parse("x^2+1"), -10, 10) == 0
    assert count_real_roots(Poly.from_roots([1, 1, -1]), -2, 2) == 2


def test_count_half_open():
    p = parse("x^2-1")
    assert count_real_roots(p, -1, 1) == 1
    assert count_real_roots(p, None, None) == 2


def test_isolation_examples():
    iso = isolate_real_roots(parse("x^2-2"))
    assert [r.multiplicity for r in iso.roots] == [1, 1]
    assert iso.roots[0].hi <= 0 <= iso.roots[1].lo
    iso = isolate_real_roots(Poly.from_roots([-1, -1, -1]))
    assert len(iso.roots) == 1 and iso.roots[0].multiplicity == 3
    assert iso.roots[0].lo <= -1 <= iso.roots[0].hi
    assert len(isolate_real_roots(parse("x^2+x+1")).roots) == 0


def test_refine_examples():
    r = refine_root(parse("x^2-2"), (0, 2), Fraction(1, 100))
    assert r.width <= Fraction(1, 100) and r.lo ** 2 <= 2 <= r.hi ** 2
    assert abs(float(r.midpoint) - 1.41421) < 0.01
    r = refine_root(parse("x-1/3"), (0, 1), Fraction(1, 10**6))
    assert r.lo <= Fraction(1, 3) <= r.hi
    r = refine_root(parse("x^2-2"), (-2, 0), Fraction(1, 4))
    assert r.lo ** 2 >= 2 >= r.hi ** 2 and r.hi <= 0


def test_real_rooted_and_pf():
    assert is_real_rooted(parse("x^2-1"))
    assert not is_real_rooted(parse("x^2+1"))
    assert not is_real_rooted(8 * parse("10+339x+2855x^2+2736x^3+972x^4"))
    assert is_pf(Poly())
    assert is_pf(parse("x^2+3x+2"))
    assert not is_pf(parse("x^2-3x+2"))


def test_sign_at_root_examples():
    host = parse("x^2-2")
    iv = refine_root(host, (0, 2), Fraction(1, 10))
    assert sign_at_root(parse("x"), host, iv) == 1
    assert sign_at_root(parse("x^2-3"), host, iv) == -1
    assert sign_at_root(parse("x-1"), parse("x-1"), (0, 2)) == 0


def test_half_line_decisions():
    assert nonnegative_on(parse("x^2"), None, 0)
    assert not nonnegative_on(parse("x"), None, 0)
    w = negative_witness(parse("9x^2+2994x"), None, 0)
    assert w is not None and parse("9x^2+2994x").eval(w) < 0


@settings(max_examples=60, deadline=None)
@given(real_rooted_polys())
def test_isolation_matches_construction(p):
    iso = isolate_real_roots(p)
    total = sum(r.multiplicity for r in iso.roots)
    assert total == p.degree
    for r in iso.roots:
        assert r.lo <= r.hi
    # disjoint and ordered
    for a, b in zip(iso.roots, iso.roots[1:]):
        assert a.hi <= b.lo


@settings(max_examples=40, deadline=None)
@given(real_rooted_polys(distinct=True))
def test_refined_intervals_contain_roots(p):
    w = Fraction(1, 1000)
    for r in approximate_roots(p, w):
        assert r.width <= w
        assert r.exact or p.sign_at(r.lo) * p.sign_at(r.hi) <= 0


def test_zero_polynomial_is_not_positive():
    assert not positive_on(Poly(), None, 0)
    assert nonnegative_on(Poly(), None, 0)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=50),
       st.fractions(min_value=0, max_value=3, max_denominator=50))
def test_simplest_rational(lo, w):
    hi = lo + w
    r = simplest_rational(lo, hi)
    assert lo <= r <= hi
    # no rational with a smaller denominator fits in [lo, hi]
    for q in range(1, r.denominator):
        assert math.ceil(lo * q) > math.floor(hi * q)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=5, unique=True))
def test_small_rational_roots_come_out_exact(roots):
    p = Poly.from_roots(roots)
    got = [r.lo for r in approximate_roots(p, Fraction(1, 10**6))]
    assert all(r.exact for r in approximate_roots(p, Fraction(1, 10**6)))
    assert got == sorted(roots)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=50),
       st.fractions(min_value=Fraction(1, 50), max_value=3, max_denominator=50))
def test_simplest_open(lo, w):
    hi = lo + w
    r = _simplest_open(lo, hi)
    assert lo < r < hi
    for q in range(1, r.denominator):
        assert math.floor(lo * q) + 1 > math.ceil(hi * q) - 1

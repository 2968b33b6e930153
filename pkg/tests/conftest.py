import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from realzeros.poly import Poly

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def poly_from_roots(roots, lead=1):
    return Poly.from_roots(roots, lead)


@st.composite
def real_rooted_polys(draw, min_deg=1, max_deg=6, distinct=False):
    """Polynomials built from rational roots (optionally distinct)."""
    strat = st.lists(small_rationals, min_size=min_deg, max_size=max_deg, unique=distinct)
    roots = draw(strat)
    lead = draw(st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3)]))
    return Poly.from_roots(roots, lead)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

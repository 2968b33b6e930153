from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realzeros import genus as gn
from realzeros.poly import Poly, parse
from realzeros.roots import count_real_roots, is_pf
from realzeros.interlace import preceq

NON_NICE = gn.PolyMatrix.of([["3x", 3], ["2x", "3x+1000"]])


def test_builtin_examples():
    M4, v4 = gn.builtin_family(4)
    assert M4 == gn.PolyMatrix.of([["2+3x", 1], ["4x", "2x"]], 4)
    assert v4 == (parse("2+2x"), parse("4x"))
    M7, v7 = gn.builtin_family(7)
    assert M7 == gn.PolyMatrix.of([["2+65x+54x^2", "1+22x"], ["16x+104x^2", "8x+16x^2"]], 4)
    assert v7 == (parse("2+58x+36x^2"), parse("16+80x"))
    M8, _ = gn.builtin_family(8)
    assert (M8.rows, M8.cols) == (3, 3)
    with pytest.raises(ValueError):
        gn.builtin_family(9)


def test_identity_application():
    v = (parse("1+x"), parse("x^2"))
    assert gn.mat_vec(gn.PolyMatrix.identity(2), v) == v


def test_niceness_examples():
    M4, _ = gn.builtin_family(4)
    cert = gn.is_nice(M4.scale(Fraction(1, 4)))
    assert cert.verdict and cert.det == parse("6x^2")
    cert = gn.is_nice(NON_NICE)
    assert not cert.verdict
    assert cert.det == parse("9x^2+2994x")
    assert cert.failure_witness == -1
    assert gn.is_nice(gn.SWAP).verdict


def test_propagation_examples():
    M4, _ = gn.builtin_family(4)
    f, g = parse("x+1"), Poly([1])
    rep = gn.check_nice_propagation(M4.scale(Fraction(1, 4)), f, g)
    assert rep.supported and rep.conclusion_verdict
    rep = gn.check_nice_propagation(gn.SWAP, f, g)
    assert rep.conclusion_verdict
    rep = gn.check_nice_propagation(NON_NICE, f, g)
    assert not rep.supported


def test_entry_realrootedness():
    M4, _ = gn.builtin_family(4)
    assert gn.verify_entry_realrootedness(M4, 8).conclusion_verdict
    assert gn.verify_entry_realrootedness(gn.SWAP, 8).conclusion_verdict
    rep = gn.verify_entry_realrootedness(NON_NICE, 8)
    assert not rep.conclusion_verdict


def test_family_one_first_step():
    assert gn.genus_sequence(1, 1) == [parse("4+2x")]


def test_counterexample_family_seven():
    u = gn.genus_sequence(7, 1)[0]
    assert u == 8 * parse("10+339x+2855x^2+2736x^3+972x^4")
    assert count_real_roots(u) == 2 < u.degree
    rep = gn.verify_linear_family(7, 1)
    assert not rep.conclusion_verdict and not rep.supported


@pytest.mark.parametrize("i", range(1, 7))
def test_linear_families_real_negative(i):
    rep = gn.verify_linear_family(i, 10)
    assert rep.conclusion_verdict, rep.failures()


@pytest.mark.parametrize("i", range(1, 7))
def test_entries_stay_pf_and_interlaced(i):
    M, v = gn.builtin_family(i)
    if not preceq(v[0], v[1]):
        pytest.skip("initial vector not ordered")
    for k in range(1, 11):
        v = gn.mat_vec(M, v)
        assert is_pf(v[0]) and is_pf(v[1])
        assert preceq(v[0], v[1]) or preceq(v[1], v[0])


def test_literal_m5_fails():
    rep = gn.verify_linear_family(5, 10, literal=True)
    assert not rep.conclusion_verdict
    assert gn.decompose_nice(gn.builtin_family(5, literal=True)[0]) is None


def test_decompositions():
    M5, _ = gn.builtin_family(5)
    f5 = gn.decompose_nice(M5)
    assert f5 == [gn.PolyMatrix.of([["96+288x", 192], ["24+288x", "72+192x"]]), gn.SWAP]
    M6, _ = gn.builtin_family(6)
    f6 = gn.decompose_nice(M6)
    assert f6 == [gn.PolyMatrix.of([[0, 4], ["4x", 0]]), gn.PolyMatrix.of([["8+12x", 4], ["2+17x", "1+4x"]])]
    for M, fs in ((M5, f5), (M6, f6)):
        assert reduce(gn.mat_mul, fs) == M
        assert all(gn.is_nice(F).verdict for F in fs)
        assert gn.verify_entry_realrootedness(M, 8).conclusion_verdict


def test_nice_matrix_decomposes_to_itself():
    assert gn.decompose_nice(gn.SWAP) == [gn.SWAP]


def test_parse_matrix():
    M = gn.parse_matrix("2\n3x\n3\n2x\n3x+1000\n")
    assert M == NON_NICE
    with pytest.raises(ValueError):
        gn.parse_matrix("2\n1\n2\n3\n")


entries = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(Poly)


@settings(max_examples=30, deadline=None)
@given(entries, entries, entries, entries, entries, entries, st.integers(0, 4), st.integers(0, 4))
def test_power_composition_law(a, b, c, d, v1, v2, j, k):
    M = gn.PolyMatrix(2, 2, ((a, c), (b, d)))
    v = (v1, v2)
    assert gn.mat_pow_apply(M, j + k, v) == gn.mat_pow_apply(M, j, gn.mat_pow_apply(M, k, v))

from math import factorial

import pytest

from realzeros import criteria as cr
from realzeros.poly import Poly, parse

P = parse


def test_ffg_examples():
    rep = cr.check_thm_ffg(P("x^2-1"), P("x"), P("x"), P("-1"))
    assert rep.supported and rep.conclusion_verdict
    assert rep.constructed["F"] == P("x^3-2x")
    rep = cr.check_thm_ffg(P("x"), Poly([1]), P("2x"), P("-x^2"))
    assert rep.constructed["F"] == P("x^2")
    assert rep.supported and rep.conclusion_verdict
    rep = cr.check_thm_ffg(P("x^2-1"), P("x"), Poly(), Poly([1]))
    assert not rep.supported
    assert any(c.witness for c in rep.hypotheses if not c.passed)


def test_ffgk_examples():
    rep = cr.check_thm_ffgk(P("x^2"), [P("x"), P("x")], P("x"), [P("-1"), P("-1")])
    assert rep.constructed["F"] == P("x^3-2x")
    assert rep.supported and rep.conclusion_verdict
    rep = cr.check_thm_ffgk(P("x^2"), [P("x"), P("x")], P("x"), [P("-1"), P("1")])
    assert not rep.supported


@pytest.mark.parametrize("spec", sorted(cr.PPP_SPECS))
def test_cor_ppp_specs(spec):
    a, b, c, seeds = cr.PPP_SPECS[spec]
    rep = cr.check_cor_ppp(a, b, c, seeds, 10)
    assert rep.supported and rep.conclusion_verdict, rep.failures()


def test_cor_ppp_eulerian_values():
    a, b, c, seeds = cr.PPP_SPECS["eulerian"]
    rep = cr.check_cor_ppp(a, b, c, seeds, 8)
    seq = rep.constructed["P"]
    assert [p.eval(1) for p in seq[:9]] == [factorial(n) for n in range(9)]


def test_gfg_examples():
    rep = cr.check_lemma_gfg(P("x^2-1"), P("x"), Poly([1]), Poly([1]), "i")
    assert rep.constructed["G"] == P("x^2+x-1")
    assert rep.supported and rep.conclusion_verdict
    rep = cr.check_lemma_gfg(P("x^2-1"), P("x"), Poly([1]), Poly([1]), "ii")
    assert rep.supported and rep.conclusion_verdict
    rep = cr.check_lemma_gfg(P("x^2-1"), P("x"), Poly([-1]), Poly([1]), "i")
    assert not rep.supported


def test_fgfg_examples():
    rep = cr.check_thm_fgfg(P("x^2-1"), P("x"), P("x"), Poly([1]), Poly([1]), P("x"))
    assert rep.constructed["G"] == P("2x^2-1")
    assert not rep.supported
    rep = cr.check_thm_fgfg(P("x^2-4"), P("x"), P("x"), P("-1"), Poly([1]), Poly([1]))
    assert not rep.supported
    rep = cr.check_thm_fgfg(P("x^2"), P("x"), Poly([1]), Poly(), Poly([1]), Poly())
    assert rep.supported and rep.conclusion_verdict


def test_cfdg_examples():
    f, g = P("x^2-1"), P("x")
    rep = cr.check_cor_cfdg(f, g, Poly([1]), Poly([1]), 1, 1)
    assert rep.conclusion_verdict
    rep = cr.check_cor_cfdg(f, g, Poly(), Poly([-1]), 0, 1)
    assert not rep.supported


def test_wy_examples():
    f, g = P("x^2-1"), P("x")
    rep = cr.check_thm_wy(f, g, 1, 0, 0, -1)
    assert rep.constructed["F"] == P("x^3-2x")
    assert rep.conclusion_verdict
    rep = cr.check_thm_wy(f, g, 0, 1, 0, 1)
    assert rep.conclusion_verdict
    rep = cr.check_thm_wy(P("x+1"), Poly([1]), 1, 0, 0, 1, corollary=True)
    assert rep.constructed["F"] == P("x^2+2x")
    assert rep.supported and rep.conclusion_verdict


def test_wy_agrees_with_cfdg_row():
    # (ax+b) f + (cx+d) g with G = a f + c g is the constant-row case of cfdg
    f, g = P("x^3-x"), P("x^2-1/4")
    for a, b, c, d in [(2, 1, 1, 3), (1, 0, 0, 1), (3, 1, 1, 1), (1, 2, 1, 1), (1, 3, 1, 1), (2, 5, 1, 2), (1, -1, 2, 0)]:
        wy = cr.check_thm_wy(f, g, a, b, c, d)
        cf = cr.check_cor_cfdg(f, g, Poly((b, a)), Poly((d, c)), a, c)
        assert wy.constructed["F"] == cf.constructed["F"]
        assert wy.constructed["G"] == cf.constructed["G"]
        if wy.supported and cf.supported:
            assert wy.conclusion_verdict and cf.conclusion_verdict


def test_haglund_examples():
    rep = cr.check_cor_haglund(P("x+1"), Poly([1]), 1, 0, 1)
    assert rep.constructed["F"] == P("2x^2+2x")
    assert rep.supported and rep.conclusion_verdict
    assert not cr.check_cor_haglund(P("x-1"), Poly([1]), 1, 0, 1).supported
    assert not cr.check_cor_haglund(P("x+1"), Poly([1]), 1, 0, -1).supported


def test_random_instances_reproducible():
    for name in cr.CERTIFIERS:
        assert repr(cr.random_instance(name, 3, 5)) == repr(cr.random_instance(name, 3, 5))


@pytest.mark.parametrize("name", sorted(cr.CERTIFIERS))
def test_harness_small(name):
    res = cr.run_harness(name, 150, seed=11)
    assert res.ok and not res.violations and not res.errors
    assert res.hypotheses_pass > 0


def test_harness_parallel_matches_serial():
    a = cr.run_harness("thm_wy", 60, seed=2, workers=1)
    b = cr.run_harness("thm_wy", 60, seed=2, workers=2)
    assert a.to_dict() == b.to_dict()

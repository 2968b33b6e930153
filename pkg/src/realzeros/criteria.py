"""Certifiers for sufficient conditions on real-rootedness and interlacing.

Each ``check_*`` function decides the hypotheses of one result exactly, builds
the polynomial(s) the result talks about, and then verifies the conclusion with
the root engine regardless of whether the hypotheses held.  The returned
:class:`~realzeros.report.CheckReport` separates hypothesis verdicts from
conclusion verdicts; ``report.soundness_violation`` is true exactly when every
hypothesis passed but some conclusion failed.

Sign conditions of the form "``b(r) <= 0`` whenever ``f(r) = 0``" are decided
at every real zero of ``f`` with :func:`~realzeros.roots.sign_at_root`.  When
``f`` is the zero polynomial every real number is a zero, so the condition is
decided on the whole line.

The module also contains a seeded random-instance generator for each certifier
and :func:`run_harness`, which counts hypothesis-pass/conclusion-fail events.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .interlace import compare_zero_orders, is_generalized_sturm_sequence, is_sturm_sequence
from .poly import ONE, X, ZERO, Poly, sign
from .report import CheckReport
from .roots import (
    RootInterval,
    is_real_rooted,
    isolate_real_roots,
    negative_witness,
    nonnegative_on,
    positive_on,
    sign_at_root,
)

__all__ = [
    "check_thm_ffg",
    "check_thm_ffgk",
    "check_cor_ppp",
    "PPP_SPECS",
    "check_lemma_gfg",
    "check_thm_fgfg",
    "check_cor_cfdg",
    "check_thm_wy",
    "check_cor_wy",
    "check_cor_haglund",
    "CERTIFIERS",
    "random_instance",
    "HarnessResult",
    "run_harness",
]

PolyLike = Union[Poly, int, Fraction]


def _p(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.constant(x)


def _fmt_root(r: RootInterval) -> str:
    if r.exact:
        return f"x = {r.lo}"
    return f"x in ({r.lo}, {r.hi}) ~ {float(r.midpoint):.6g}"


# -- exact sign conditions -------------------------------------------------------

_REL = {
    "<=0": lambda s: s <= 0,
    "<0": lambda s: s < 0,
    ">=0": lambda s: s >= 0,
    ">0": lambda s: s > 0,
}


def _everywhere(test: Poly, rel: str, lo=None, hi=None) -> tuple:
    """``test rel 0`` on ``[lo, hi]`` (infinite ends allowed); returns (ok, witness)."""
    if rel == ">=0":
        ok, bad = nonnegative_on(test, lo, hi), lambda: negative_witness(test, lo, hi)
    elif rel == "<=0":
        ok, bad = nonnegative_on(-test, lo, hi), lambda: negative_witness(-test, lo, hi)
    elif rel == ">0":
        ok = positive_on(test, lo, hi)
        bad = lambda: negative_witness(test, lo, hi) if not nonnegative_on(test, lo, hi) else _zero_in(test, lo, hi)
    else:
        ok = positive_on(-test, lo, hi)
        bad = lambda: negative_witness(-test, lo, hi) if not nonnegative_on(-test, lo, hi) else _zero_in(test, lo, hi)
    return (True, None) if ok else (False, f"fails at x = {bad()}")


def _zero_in(p: Poly, lo, hi):
    if p.is_zero():
        return lo if lo is not None else (hi if hi is not None else 0)
    for r in isolate_real_roots(p).roots:
        if (lo is None or r.hi >= lo) and (hi is None or r.lo <= hi):
            return r.lo if r.exact else f"root in ({r.lo}, {r.hi})"
    return lo if lo is not None else hi


def _at_zeros(test: Poly, host: Poly, rel: str) -> tuple:
    """``test(r) rel 0`` at every real zero ``r`` of ``host``; returns (ok, witness)."""
    if host.is_zero():
        return _everywhere(test, rel)
    if host.degree == 0:
        return True, None
    for r in isolate_real_roots(host).roots:
        s = sign_at_root(test, host, r)
        if not _REL[rel](s):
            return False, f"sign {s:+d} at zero {_fmt_root(r)}"
    return True, None


# -- zero-order helpers ------------------------------------------------------------

def _rel(f: Poly, g: Poly) -> Optional[str]:
    """Relation of ``g`` to ``f``, or ``None`` if either is not real-rooted."""
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return None
    return compare_zero_orders(f, g).relation


def _preceq(g: Poly, f: Poly) -> bool:
    r = _rel(f, g)
    return r is not None and r != "none"


def _prec(g: Poly, f: Poly) -> bool:
    if f.is_zero() or g.is_zero():
        return False
    r = _rel(f, g)
    return r is not None and r.startswith("strict_")


def _interlaces(g: Poly, f: Poly) -> bool:
    r = _rel(f, g)
    return r in ("interlaces", "strict_interlaces")


def _order_witness(g: Poly, f: Poly, gname: str, fname: str) -> str:
    if not is_real_rooted(f):
        return f"{fname} not real-rooted"
    if not is_real_rooted(g):
        return f"{gname} not real-rooted"
    cert = compare_zero_orders(f, g)
    return f"{gname} vs {fname}: relation {cert.relation}" + (f" ({cert.witness})" if cert.witness else "")


def _deg_in(p: Poly, q: Poly) -> bool:
    """``deg p`` is ``deg q`` or ``deg q + 1``."""
    return p.degree == q.degree or p.degree == q.degree + 1


def _std_clause(rep: CheckReport, names_polys) -> bool:
    bad = [n for n, p in names_polys if not p.is_standard()]
    return rep.hyp(
        "standard: " + ", ".join(n for n, _ in names_polys),
        not bad,
        "negative leading coefficient: " + ", ".join(bad),
    )


# -- Theorem: F = a f + b g ---------------------------------------------------------

def check_thm_ffg(f: PolyLike, g: PolyLike, a: PolyLike, b: PolyLike) -> CheckReport:
    """``F = a f + b g``; if ``b <= 0`` at the zeros of ``f`` then ``F`` is real-rooted and ``f ⪯ F``."""
    return check_thm_ffgk(f, [g], a, [b], _name="thm_ffg")


def check_thm_ffgk(f, gs: Sequence, a, bs: Sequence, _name: str = "thm_ffgk") -> CheckReport:
    """``F = a f + sum_j b_j g_j``; multi-term version of :func:`check_thm_ffg`."""
    if len(gs) != len(bs):
        raise ValueError("gs and bs must have the same length")
    if not gs:
        raise ValueError("need at least one g_j")
    f, a = _p(f), _p(a)
    gs, bs = [_p(g) for g in gs], [_p(b) for b in bs]
    F = a * f
    for g, b in zip(gs, bs):
        F = F + b * g
    rep = CheckReport(_name)
    rep.constructed["F"] = F
    k = len(gs)
    lab = (lambda j: "g") if k == 1 else (lambda j: f"g{j + 1}")
    blab = (lambda j: "b") if k == 1 else (lambda j: f"b{j + 1}")

    rep.hyp("deg F = deg f or deg f + 1", _deg_in(F, f), f"deg F = {F.degree}, deg f = {f.degree}")
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    for j, g in enumerate(gs):
        rep.hyp(f"{lab(j)} in RZ", is_real_rooted(g), f"{lab(j)} has non-real zeros")
        rep.hyp(f"{lab(j)} ⪯ f", _preceq(g, f), _order_witness(g, f, lab(j), "f"))
    sF = sign(F.lead)
    bad = [lab(j) for j, g in enumerate(gs) if sign(g.lead) != sF or sF == 0]
    rep.hyp(
        "F and " + ", ".join(lab(j) for j in range(k)) + " leading coefficients share a sign",
        not bad,
        f"sign(lead F) = {sF:+d}; mismatch for " + ", ".join(bad),
    )
    for j, b in enumerate(bs):
        ok, wit = _at_zeros(b, f, "<=0")
        rep.hyp(f"{blab(j)}(r) <= 0 at zeros r of f", ok, wit)

    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    rep.concl("f ⪯ F", _preceq(f, F), _order_witness(f, F, "f", "F"))

    # strict clause: every zero r of f has some j with g_j ≺ f and b_j(r) < 0
    strict_js = [j for j, g in enumerate(gs) if _prec(g, f)]
    if strict_js and is_real_rooted(f) and f.degree >= 0:
        covered = True
        for r in isolate_real_roots(f).roots if f.degree > 0 else ():
            if not any(sign_at_root(bs[j], f, r) < 0 for j in strict_js):
                covered = False
                break
        if covered:
            rep.notes.append("strict clause applies")
            rep.concl("f ≺ F", _prec(f, F), _order_witness(f, F, "f", "F"))
    return rep


# -- recurrences P_n = a_n P_{n-1} + b_n P'_{n-1} + c_n P_{n-2} -----------------------

Coef = Union[Callable[[int], Poly], Poly, int, Fraction]


def _coef(c: Coef, n: int) -> Poly:
    return _p(c(n)) if callable(c) else _p(c)


PPP_SPECS = {
    "stirling": (lambda n: X, lambda n: X, lambda n: ZERO, (ONE,)),
    "eulerian": (lambda n: Poly((0, n)), lambda n: Poly((0, 1, -1)), lambda n: ZERO, (ONE,)),
    "derangement": (
        lambda n: Poly((0, n - 1)),
        lambda n: Poly((0, 1, -1)),
        lambda n: Poly((0, n - 1)),
        (ONE, ZERO),
    ),
}


def _sign_mode_ok(p: Poly, mode: str) -> bool:
    if mode == "nonnegative":
        return all(c >= 0 for c in p.coeffs)
    n = p.degree
    return all((-1) ** (n - k) * c >= 0 for k, c in enumerate(p.coeffs))


def check_cor_ppp(
    a: Coef,
    b: Coef,
    c: Coef,
    seeds: Sequence,
    n_max: int,
    sign_mode: str = "nonnegative",
) -> CheckReport:
    """Generate ``P_n = a_n P_{n-1} + b_n P'_{n-1} + c_n P_{n-2}`` from ``seeds`` up to ``n_max`` and
    certify the generalized Sturm property from half-line sign conditions on ``b_n`` and ``c_n``.

    ``a``, ``b``, ``c`` are polynomials or callables ``n -> polynomial``.  With
    ``sign_mode="nonnegative"`` the half-line is ``x <= 0``; with ``"alternating"``
    it is ``x >= 0``.  Zero members are exempt from the degree clause.  The
    Sturm-sequence clause is certified when ``deg P_n = n`` throughout and, for
    each ``n``, ``b_n < 0`` or ``c_n < 0`` on the whole half-line.
    """
    if sign_mode not in ("nonnegative", "alternating"):
        raise ValueError("sign_mode must be 'nonnegative' or 'alternating'")
    seq = [_p(s) for s in seeds]
    if not seq:
        raise ValueError("need at least one seed")
    start = len(seq)
    for n in range(start, n_max + 1):
        p1 = seq[n - 1]
        p2 = seq[n - 2] if n >= 2 else ZERO
        seq.append(_coef(a, n) * p1 + _coef(b, n) * p1.derivative() + _coef(c, n) * p2)
    seq = seq[: n_max + 1]
    rep = CheckReport("cor_ppp")
    rep.constructed["P"] = seq
    lo, hi = (None, 0) if sign_mode == "nonnegative" else (0, None)
    half = "x <= 0" if sign_mode == "nonnegative" else "x >= 0"

    bad = [n for n, p in enumerate(seq) if not p.is_standard()]
    rep.hyp("every P_n standard", not bad, f"P_{bad[0]} has negative leading coefficient" if bad else None)
    bad = [
        n
        for n in range(1, len(seq))
        if not (seq[n].is_zero() or seq[n - 1].is_zero()) and not _deg_in(seq[n], seq[n - 1])
    ]
    rep.hyp(
        "deg P_n = deg P_{n-1} or deg P_{n-1} + 1",
        not bad,
        f"n = {bad[0]}: deg P_n = {seq[bad[0]].degree}, deg P_(n-1) = {seq[bad[0] - 1].degree}" if bad else None,
    )
    bad = [n for n, p in enumerate(seq) if not _sign_mode_ok(p, sign_mode)]
    rep.hyp(
        f"coefficients {sign_mode}",
        not bad,
        f"P_{bad[0]}: coefficient signs break the pattern" if bad else None,
    )
    b_bad = c_bad = None
    strict_each = True
    for n in range(start, n_max + 1):
        bn, cn = _coef(b, n), _coef(c, n)
        ok, wit = _everywhere(bn, "<=0", lo, hi)
        if not ok and b_bad is None:
            b_bad = f"n = {n}: b_n {wit}"
        ok, wit = _everywhere(cn, "<=0", lo, hi)
        if not ok and c_bad is None:
            c_bad = f"n = {n}: c_n {wit}"
        if not (_everywhere(bn, "<0", lo, hi)[0] or _everywhere(cn, "<0", lo, hi)[0]):
            strict_each = False
    rep.hyp(f"b_n <= 0 on {half}", b_bad is None, b_bad)
    rep.hyp(f"c_n <= 0 on {half}", c_bad is None, c_bad)

    ok = all(is_real_rooted(p) for p in seq) and is_generalized_sturm_sequence(seq)
    rep.concl("generalized Sturm sequence", ok, _gss_witness(seq) if not ok else None)
    if strict_each and all(p.degree == n for n, p in enumerate(seq)):
        rep.notes.append("Sturm-sequence clause applies")
        ok = all(p.is_standard() for p in seq) and is_sturm_sequence(seq)
        rep.concl("Sturm sequence", ok, "Sturm condition fails" if not ok else None)
    return rep


def _gss_witness(seq) -> str:
    for i, p in enumerate(seq):
        if not is_real_rooted(p):
            return f"P_{i} not real-rooted"
        if i and not _preceq(seq[i - 1], p):
            return f"P_{i - 1} ⪯ P_{i} fails"
    return "unknown"


# -- Lemma: G = c f + d g -------------------------------------------------------------

def check_lemma_gfg(f, g, c, d, part: str = "i", strictness: str = "strict") -> CheckReport:
    """``G = c f + d g`` with ``g ≺ f`` (or ``⪯``).

    Part ``i``: ``deg G <= deg g + 1`` and ``c > 0`` (``>= 0``) at the zeros of ``g``
    give ``G`` real-rooted with ``g ≺ G`` (``⪯``).  Part ``ii``: ``deg G <= deg f``
    and ``d > 0`` (``>= 0``) at the zeros of ``f`` give ``G ≺ f`` (``⪯``).
    """
    if part not in ("i", "ii"):
        raise ValueError("part must be 'i' or 'ii'")
    if strictness not in ("strict", "weak"):
        raise ValueError("strictness must be 'strict' or 'weak'")
    f, g, c, d = map(_p, (f, g, c, d))
    G = c * f + d * g
    strict = strictness == "strict"
    rel, pos = (_prec, ">0") if strict else (_preceq, ">=0")
    sym = "≺" if strict else "⪯"
    rep = CheckReport(f"lemma_gfg_{part}_{strictness}")
    rep.constructed["G"] = G
    _std_clause(rep, [("G", G), ("f", f), ("g", g)])
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    rep.hyp("g in RZ", is_real_rooted(g), "g has non-real zeros")
    rep.hyp(f"g {sym} f", rel(g, f), _order_witness(g, f, "g", "f"))
    if part == "i":
        rep.hyp("deg G <= deg g + 1", G.degree <= g.degree + 1, f"deg G = {G.degree}, deg g = {g.degree}")
        ok, wit = _at_zeros(c, g, pos)
        rep.hyp(f"c(s) {pos[0:-1]} 0 at zeros s of g", ok, wit)
        rep.concl("G in RZ", is_real_rooted(G), "G has non-real zeros")
        rep.concl(f"g {sym} G", rel(g, G), _order_witness(g, G, "g", "G"))
    else:
        rep.hyp("deg G <= deg f", G.degree <= f.degree, f"deg G = {G.degree}, deg f = {f.degree}")
        ok, wit = _at_zeros(d, f, pos)
        rep.hyp(f"d(r) {pos[0:-1]} 0 at zeros r of f", ok, wit)
        rep.concl("G in RZ", is_real_rooted(G), "G has non-real zeros")
        rep.concl(f"G {sym} f", rel(G, f), _order_witness(G, f, "G", "f"))
    return rep


# -- Theorem: F = a f + b g, G = c f + d g -------------------------------------------------

def check_thm_fgfg(f, g, a, b, c, d, _name: str = "thm_fgfg") -> CheckReport:
    """``F = a f + b g``, ``G = c f + d g`` with ``Δ = ad - bc >= 0`` at the zeros of ``G``.

    One of two side conditions is required: ``c`` a positive constant with
    ``deg G <= deg g + 1``, or ``d`` a positive constant with ``deg G <= deg f``.
    """
    f, g, a, b, c, d = map(_p, (f, g, a, b, c, d))
    F, G = a * f + b * g, c * f + d * g
    delta = a * d - b * c
    rep = CheckReport(_name)
    rep.constructed.update(F=F, G=G, delta=delta)
    _std_clause(rep, [("f", f), ("g", g), ("F", F), ("G", G)])
    rep.hyp("deg F = deg G or deg G + 1", _deg_in(F, G), f"deg F = {F.degree}, deg G = {G.degree}")
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    rep.hyp("g in RZ", is_real_rooted(g), "g has non-real zeros")
    rep.hyp("g ⪯ f", _preceq(g, f), _order_witness(g, f, "g", "f"))
    ok, wit = _at_zeros(delta, G, ">=0")
    rep.hyp("Δ >= 0 at zeros of G", ok, wit)
    c_branch = c.degree == 0 and c.lead > 0 and G.degree <= g.degree + 1
    d_branch = d.degree == 0 and d.lead > 0 and G.degree <= f.degree
    rep.hyp(
        "c positive constant with deg G <= deg g + 1, or d positive constant with deg G <= deg f",
        c_branch or d_branch,
        f"c = {c}, d = {d}, deg G = {G.degree}, deg f = {f.degree}, deg g = {g.degree}",
    )
    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    rep.concl("G in RZ", is_real_rooted(G), "G has non-real zeros")
    rep.concl("G ⪯ F", _preceq(G, F), _order_witness(G, F, "G", "F"))
    if _prec(g, f) and _at_zeros(delta, G, ">0")[0]:
        rep.notes.append("strict clause applies")
        rep.concl("G ≺ F", _prec(G, F), _order_witness(G, F, "G", "F"))
    return rep


def check_cor_cfdg(f, g, a, b, c, d) -> CheckReport:
    """Constant ``c``, ``d``: ``d a(x) >= c b(x)`` at the zeros of ``G`` gives ``G ⪯ F``."""
    for name, v in (("c", c), ("d", d)):
        if isinstance(v, Poly) and v.degree > 0:
            raise ValueError(f"{name} must be a constant")
    f, g, a, b = map(_p, (f, g, a, b))
    c, d = Fraction(_p(c).lead if _p(c) else 0), Fraction(_p(d).lead if _p(d) else 0)
    F, G = a * f + b * g, f.scale(c) + g.scale(d)
    test = a.scale(d) - b.scale(c)
    rep = CheckReport("cor_cfdg")
    rep.constructed.update(F=F, G=G)
    _std_clause(rep, [("f", f), ("g", g), ("F", F), ("G", G)])
    rep.hyp("deg F = deg G or deg G + 1", _deg_in(F, G), f"deg F = {F.degree}, deg G = {G.degree}")
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    rep.hyp("g in RZ", is_real_rooted(g), "g has non-real zeros")
    rep.hyp("g ⪯ f", _preceq(g, f), _order_witness(g, f, "g", "f"))
    ok, wit = _at_zeros(test, G, ">=0")
    rep.hyp("d a(x) >= c b(x) at zeros of G", ok, wit)
    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    rep.concl("G in RZ", is_real_rooted(G), "G has non-real zeros")
    rep.concl("G ⪯ F", _preceq(G, F), _order_witness(G, F, "G", "F"))
    if _prec(g, f) and _at_zeros(test, G, ">0")[0]:
        rep.notes.append("strict clause applies")
        rep.concl("G ≺ F", _prec(G, F), _order_witness(G, F, "G", "F"))
    return rep


# -- linear-coefficient combinations ---------------------------------------------------

def _rat(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("coefficients must be rational")
    return Fraction(v)


def check_thm_wy(f, g, a, b, c, d, corollary: bool = False) -> CheckReport:
    """``F = (ax + b) f + (cx + d) g`` and ``G = a f + c g`` for rational ``a, b, c, d``.

    If ``f, g`` are real-rooted with same-sign leading coefficients, ``g ⪯ f`` and
    ``ad <= bc``, then ``F, G`` are real-rooted with ``G ⪯ F``.  With
    ``corollary=True`` this delegates to :func:`check_cor_wy`.
    """
    if corollary:
        return check_cor_wy(f, g, a, b, c, d)
    f, g = _p(f), _p(g)
    a, b, c, d = map(_rat, (a, b, c, d))
    F = Poly((b, a)) * f + Poly((d, c)) * g
    G = f.scale(a) + g.scale(c)
    rep = CheckReport("thm_wy")
    rep.constructed.update(F=F, G=G)
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    rep.hyp("g in RZ", is_real_rooted(g), "g has non-real zeros")
    sf, sg = sign(f.lead), sign(g.lead)
    rep.hyp("leading coefficients of f, g share a sign", sf == sg and sf != 0, f"signs {sf:+d}, {sg:+d}")
    rep.hyp("g ⪯ f", _preceq(g, f), _order_witness(g, f, "g", "f"))
    rep.hyp("ad <= bc", a * d <= b * c, f"ad = {a * d}, bc = {b * c}")
    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    rep.concl("G in RZ", is_real_rooted(G), "G has non-real zeros")
    rep.concl("G ⪯ F", _preceq(G, F), _order_witness(G, F, "G", "F"))
    return rep


def check_cor_wy(f, g, a, b, c, d) -> CheckReport:
    """``F = (ax + b) f + x (cx + d) g``: real-rooted when ``f, g`` are in PF, ``g``
    interlaces ``f`` and ``ad >= bc``."""
    f, g = _p(f), _p(g)
    a, b, c, d = map(_rat, (a, b, c, d))
    F = Poly((b, a)) * f + Poly((0, d, c)) * g
    rep = CheckReport("cor_wy")
    rep.constructed["F"] = F
    rep.hyp("f in PF", is_real_rooted(f) and all(x >= 0 for x in f.coeffs), "f not in PF")
    rep.hyp("g in PF", is_real_rooted(g) and all(x >= 0 for x in g.coeffs), "g not in PF")
    rep.hyp("g interlaces f", _interlaces(g, f), _order_witness(g, f, "g", "f"))
    rep.hyp("ad >= bc", a * d >= b * c, f"ad = {a * d}, bc = {b * c}")
    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    return rep


def check_cor_haglund(f, g, a, b, d) -> CheckReport:
    """``F = (ax + b) f + x (x + d) g`` for ``f, g`` with positive leading coefficients
    ``alpha, beta`` and ``g`` interlacing ``f``.

    Conditions: ``d >= 0``, ``d >= b/a``, and either ``a > 0`` with all zeros of ``f``
    nonpositive or ``a < -beta/alpha`` with all zeros nonnegative.  If moreover every
    zero of ``f`` lies in ``[-d, 0]`` then ``f`` interlaces ``F``.
    """
    f, g = _p(f), _p(g)
    a, b, d = map(_rat, (a, b, d))
    F = Poly((b, a)) * f + Poly((0, d, 1)) * g
    rep = CheckReport("cor_haglund")
    rep.constructed["F"] = F
    alpha, beta = f.lead, g.lead
    rep.hyp("positive leading coefficients", alpha > 0 and beta > 0, f"alpha = {alpha}, beta = {beta}")
    rep.hyp("f in RZ", is_real_rooted(f), "f has non-real zeros")
    rep.hyp("g in RZ", is_real_rooted(g), "g has non-real zeros")
    rep.hyp("g interlaces f", _interlaces(g, f), _order_witness(g, f, "g", "f"))
    rep.hyp("d >= 0", d >= 0, f"d = {d}")
    rep.hyp("d >= b/a", a != 0 and d >= b / a, f"a = {a}, b = {b}, d = {d}")
    pos_branch = a > 0
    neg_branch = alpha > 0 and a < -beta / alpha
    rep.hyp("a > 0 or a < -beta/alpha", pos_branch or neg_branch, f"a = {a}, -beta/alpha = {-beta / alpha if alpha else 'undefined'}")
    if pos_branch:
        ok, wit = _at_zeros(X, f, "<=0")
        rep.hyp("zeros of f nonpositive (a > 0)", ok, wit)
    elif neg_branch:
        ok, wit = _at_zeros(X, f, ">=0")
        rep.hyp("zeros of f nonnegative (a < -beta/alpha)", ok, wit)
    rep.concl("F in RZ", is_real_rooted(F), "F has non-real zeros")
    in_box = f.degree >= 0 and _at_zeros(X, f, "<=0")[0] and _at_zeros(X + Poly.constant(d), f, ">=0")[0]
    if in_box:
        rep.notes.append("zeros of f lie in [-d, 0]: interlacing addendum applies")
        rep.concl("f interlaces F", _interlaces(f, F), _order_witness(f, F, "f", "F"))
    return rep


# -- random instances ------------------------------------------------------------------

def _rr(rng: random.Random, span: int = 4, dens=(1, 2, 3)) -> Fraction:
    q = rng.choice(dens)
    return Fraction(rng.randint(-span * q, span * q), q)


def _rpoly(rng: random.Random, deg: int, span: int = 3) -> Poly:
    return Poly(rng.randint(-span, span) for _ in range(deg + 1))


def _points(rng: random.Random, k: int, lo: int = -4, hi: int = 4, weak: float = 0.25) -> list:
    """``k`` nondecreasing rationals in ``[lo, hi]`` with occasional ties."""
    den = rng.choice((1, 2, 3))
    pool = list(range(lo * den, hi * den + 1))
    k_eff = min(k, len(pool))
    pts = sorted(Fraction(v, den) for v in rng.sample(pool, k_eff))
    for j in range(1, len(pts)):
        if rng.random() < weak:
            pts[j] = pts[j - 1]
    return pts


def _pair(rng, n: int, kind: str, lo=-4, hi=4, weak=0.25, lead_sign=None):
    """Random ``(f, g)`` with ``g ⪯ f``: ``kind`` is ``interlace`` (deg g = n - 1) or ``alternate``."""
    if kind == "interlace" and n == 0:
        kind = "alternate"
    if kind == "interlace":
        pts = _points(rng, 2 * n - 1, lo, hi, weak)
        fr, gr = pts[0::2], pts[1::2]
    else:
        pts = _points(rng, 2 * n, lo, hi, weak)
        gr, fr = pts[0::2], pts[1::2]
    s = lead_sign if lead_sign is not None else rng.choice((1, 1, -1))
    lf = s * Fraction(rng.randint(1, 4), rng.randint(1, 2))
    lg = s * Fraction(rng.randint(1, 4), rng.randint(1, 2))
    return Poly.from_roots(fr, lf), Poly.from_roots(gr, lg)


def _nonpos_at(rng, host: Poly, deg_cap: int = 2) -> Poly:
    """A polynomial that is ``<= 0`` at every real zero of ``host`` (usually)."""
    choice = rng.randrange(6)
    if choice == 0:
        return Poly.constant(-rng.randint(0, 3))
    if choice == 1:
        h = Poly((_rr(rng), rng.choice((1, -1, 2))))
        return -(h * h).scale(Fraction(rng.randint(1, 3)))
    if choice == 2 and host.degree >= 0:
        return host.scale(_rr(rng, 2)) - Poly.constant(rng.randint(0, 2))
    if choice == 3:
        t = _rr(rng)
        return -Poly((-t, 1)) * Poly((-t, 1)) - Poly.constant(rng.randint(0, 1))
    if choice == 4:
        return _rpoly(rng, rng.randint(0, deg_cap))  # unconstrained noise
    return Poly((-rng.randint(0, 3), _rr(rng, 2)))  # random linear, often fails


def _pos_at(rng, host: Poly, strict: bool = True) -> Poly:
    """A polynomial that is usually ``> 0`` (``>= 0``) at the zeros of ``host``."""
    choice = rng.randrange(5)
    base = rng.randint(1 if strict else 0, 3)
    if choice == 0:
        return Poly.constant(base)
    if choice == 1:
        h = Poly((_rr(rng), 1))
        return (h * h).scale(rng.randint(1, 2)) + Poly.constant(base)
    if choice == 2 and host.degree >= 0:
        return host.scale(_rr(rng, 2)) + Poly.constant(base)
    if choice == 3:
        return Poly.constant(-rng.randint(0, 2)) if rng.random() < 0.5 else Poly.constant(base)
    return _rpoly(rng, rng.randint(0, 1))


def _inst_ffg(rng):
    n = rng.randint(0, 4)
    f, g = _pair(rng, n, rng.choice(("interlace", "alternate")))
    a = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1, 1, 2, -1)))))
    b = _nonpos_at(rng, f)
    return (f, g, a, b), {}


def _inst_ffgk(rng):
    n = rng.randint(1, 4)
    k = rng.randint(1, 3)
    s = rng.choice((1, -1))
    fr = _points(rng, n, weak=0.15)
    f = Poly.from_roots(fr, s * Fraction(rng.randint(1, 3)))
    gs, bs = [], []
    for _ in range(k):
        gs.append(_partner(rng, fr, rng.choice(("interlace", "interlace", "alternate")), s))
        b = _nonpos_at(rng, f, 1)
        bs.append(b if rng.random() < 0.3 or b.degree <= 0 else Poly.constant(-rng.randint(0, 3)))
    a = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1, 1, 2)) * s)))
    return (f, gs, a, bs), {}


def _partner(rng, fr: list, kind: str, s: int) -> Poly:
    """Random ``g`` with ``g ⪯ f`` where ``f`` has the sorted real zeros ``fr`` (all rational)."""
    lead = s * Fraction(rng.randint(1, 3))
    n = len(fr)
    gr = []
    if kind == "interlace":
        for i in range(n - 1):
            lo, hi = fr[i], fr[i + 1]
            gr.append(lo if lo == hi else rng.choice((lo, hi, (lo + hi) / 2, lo + (hi - lo) / 3)))
    else:
        for i in range(n):
            lo = fr[i - 1] if i else fr[0] - rng.randint(1, 3)
            hi = fr[i]
            gr.append(rng.choice((lo, hi, (lo + hi) / 2)) if lo != hi else lo)
    return Poly.from_roots(gr, lead)


def _inst_gfg(rng):
    part = rng.choice(("i", "ii"))
    strictness = rng.choice(("strict", "weak"))
    n = rng.randint(1, 4)
    kind = rng.choice(("interlace", "alternate"))
    f, g = _pair(rng, n, kind, weak=0.0 if strictness == "strict" else 0.3, lead_sign=1)
    if part == "i":
        c = _pos_at(rng, g, strictness == "strict")
        if f.degree == g.degree:
            d = Poly.constant(_rr(rng, 3))
        else:
            d = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1, 2, -1)))))
        if c.degree > 0 and rng.random() < 0.7:
            c = Poly.constant(c.eval(0) if c.eval(0) > 0 else 1)
    else:
        d = _pos_at(rng, f, strictness == "strict")
        if d.degree > f.degree - g.degree and rng.random() < 0.7:
            d = Poly.constant(abs(d.eval(0)) or 1)
        c = Poly.constant(_rr(rng, 3)) if rng.random() < 0.8 else _rpoly(rng, 1)
    return (f, g, c, d), {"part": part, "strictness": strictness}


def _inst_fgfg(rng):
    n = rng.randint(0, 3)
    f, g = _pair(rng, n, rng.choice(("interlace", "alternate")), lead_sign=1)
    k = Poly.constant(Fraction(rng.randint(1, 4)))
    if rng.random() < 0.5:
        # c positive constant
        c = k
        d = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1, 2))))) if f.degree > g.degree else Poly.constant(_rr(rng, 3))
        G = c * f + d * g
        a = Poly((_rr(rng, 3), Fraction(rng.choice((0, 0, 1, 2)))))
        w = _slack(rng, G)
        b = (a * d - w).scale(1 / c.lead)
    else:
        d = k
        c = Poly.constant(_rr(rng, 3))
        G = c * f + d * g
        b = Poly((_rr(rng, 3), Fraction(rng.choice((0, 0, 1, -1)))))
        w = _slack(rng, G)
        a = (b * c + w).scale(1 / d.lead)
    return (f, g, a, b, c, d), {}


def _slack(rng, G: Poly) -> Poly:
    """Polynomial that is usually ``>= 0`` at the zeros of ``G``."""
    choice = rng.randrange(5)
    if choice == 0:
        return Poly.constant(rng.randint(0, 3))
    if choice == 1:
        h = Poly((_rr(rng), 1))
        return (h * h).scale(rng.randint(1, 2))
    if choice == 2 and G.degree >= 0:
        return G.scale(_rr(rng, 1)) + Poly.constant(rng.randint(0, 2))
    if choice == 3:
        return Poly.constant(-rng.randint(1, 2))
    return _rpoly(rng, 1, 2)


def _inst_cfdg(rng):
    n = rng.randint(0, 3)
    f, g = _pair(rng, n, rng.choice(("interlace", "alternate")), lead_sign=1)
    c, d = _rr(rng, 3), _rr(rng, 3)
    if rng.random() < 0.7:
        c, d = abs(c), abs(d)
    G = f.scale(c) + g.scale(d)
    if d != 0 and rng.random() < 0.8:
        b = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1, -1)))))
        a = (b.scale(c) + _slack(rng, G)).scale(1 / d)
    else:
        a = Poly((_rr(rng, 3), Fraction(rng.choice((0, 1)))))
        b = Poly((_rr(rng, 3),))
    return (f, g, a, b, c, d), {}


def _inst_wy(rng):
    if rng.random() < 0.35:
        # corollary variant: PF pair, g interlaces f, ad >= bc
        n = rng.randint(1, 4)
        f, g = _pair(rng, n, "interlace", lo=-4, hi=0, lead_sign=1)
        a, b, c, d = (_rr(rng, 3) for _ in range(4))
        if rng.random() < 0.8 and a * d < b * c:
            a, b = b, a  # flips the inequality often
        return (f, g, a, b, c, d), {"corollary": True}
    n = rng.randint(0, 4)
    f, g = _pair(rng, n, rng.choice(("interlace", "alternate")))
    a, b, c, d = (_rr(rng, 3) for _ in range(4))
    if rng.random() < 0.8 and a * d > b * c:
        b, a = a, b
    return (f, g, a, b, c, d), {}


def _inst_haglund(rng):
    n = rng.randint(1, 4)
    if rng.random() < 0.7:
        f, g = _pair(rng, n, "interlace", lo=-4, hi=0, lead_sign=1)
        a = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    else:
        f, g = _pair(rng, n, "interlace", lo=0, hi=4, lead_sign=1)
        a = -g.lead / f.lead - Fraction(rng.randint(0, 6), rng.randint(1, 3))
    d = Fraction(rng.randint(0, 8), rng.randint(1, 2))
    if rng.random() < 0.1:
        d = -d - 1
    b = _rr(rng, 4)
    if rng.random() < 0.8 and a != 0 and d < b / a:
        b = d * a - Fraction(rng.randint(0, 3)) * (1 if a > 0 else -1)
    return (f, g, a, b, d), {}


CERTIFIERS = {
    "thm_ffg": (check_thm_ffg, _inst_ffg),
    "thm_ffgk": (check_thm_ffgk, _inst_ffgk),
    "lemma_gfg": (check_lemma_gfg, _inst_gfg),
    "thm_fgfg": (check_thm_fgfg, _inst_fgfg),
    "cor_cfdg": (check_cor_cfdg, _inst_cfdg),
    "thm_wy": (check_thm_wy, _inst_wy),
    "cor_haglund": (check_cor_haglund, _inst_haglund),
}


def random_instance(name: str, seed, index: int):
    """Arguments ``(args, kwargs)`` for certifier ``name``, reproducible from ``(seed, index)``."""
    if name not in CERTIFIERS:
        raise ValueError(f"unknown certifier {name!r}")
    rng = random.Random(f"{seed}:{name}:{index}")
    return CERTIFIERS[name][1](rng)


@dataclass
class HarnessResult:
    name: str
    instances: int
    hypotheses_pass: int = 0
    conclusion_pass: int = 0
    violations: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.errors

    def to_dict(self) -> dict:
        return {
            "certifier": self.name,
            "instances": self.instances,
            "hypotheses_pass": self.hypotheses_pass,
            "conclusion_pass": self.conclusion_pass,
            "violations": self.violations,
            "errors": self.errors,
        }


def _run_chunk(job) -> tuple:
    name, seed, lo, hi = job
    fn = CERTIFIERS[name][0]
    hyp = concl = 0
    viol, errs = [], []
    for i in range(lo, hi):
        try:
            args, kwargs = random_instance(name, seed, i)
            rep = fn(*args, **kwargs)
        except Exception as exc:  # surfaced, never swallowed silently
            errs.append((i, repr(exc)))
            continue
        hyp += rep.supported
        concl += rep.conclusion_verdict
        if rep.soundness_violation:
            viol.append((i, [c.to_dict() for c in rep.failures()]))
    return hyp, concl, viol, errs


def run_harness(name: str, instances: int = 1000, seed=0, workers: int = 1) -> HarnessResult:
    """Run ``instances`` random instances of certifier ``name`` and tally the outcomes.

    Instance ``i`` is generated from ``(seed, name, i)`` alone, so results do not
    depend on ``workers``.
    """
    if name not in CERTIFIERS:
        raise ValueError(f"unknown certifier {name!r}")
    res = HarnessResult(name, instances)
    step = max(1, instances // max(1, workers * 4))
    jobs = [(name, seed, lo, min(instances, lo + step)) for lo in range(0, instances, step)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            outs = list(ex.map(_run_chunk, jobs))
    else:
        outs = [_run_chunk(j) for j in jobs]
    for hyp, concl, viol, errs in outs:
        res.hypotheses_pass += hyp
        res.conclusion_pass += concl
        res.violations.extend(viol)
        res.errors.extend(errs)
    return res

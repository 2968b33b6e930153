"""Command-line front end.

Every subcommand writes one JSON document (the *envelope*) to standard output::

    {"command": ..., "inputs": {...}, "result": {...}, "exact": true,
     "approximations": {...}}        # only when decimals are reported

Verdicts inside ``result`` are exact; decimals appear only under
``approximations``.  ``family gen`` is the one exception: it prints the
polynomial in the text format (``--json`` gives the envelope), and ``roots
--csv`` prints a CSV root table.

Exit codes: 0 when every checked conclusion holds, 1 when a conclusion or
conjecture check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import criteria, diagnostics, families, genus, graphs
from .interlace import is_generalized_sturm_sequence, is_sturm_sequence
from .poly import Poly, parse
from .report import CheckReport
from .roots import approximate_roots, is_pf, is_real_rooted, isolate_real_roots

SEED_ENV = "REALZEROS_SEED"


class UsageError(Exception):
    pass


def _emit(command, inputs, result, approximations=None, out=None) -> None:
    env = {"command": command, "inputs": inputs, "result": result, "exact": True}
    if approximations is not None:
        env["approximations"] = approximations
    print(json.dumps(env, indent=2, ensure_ascii=False), file=out or sys.stdout)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _poly(text: str) -> Poly:
    try:
        return parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _interval_dict(r) -> dict:
    return {"lo": str(r.lo), "hi": str(r.hi), "exact": r.exact, "multiplicity": r.multiplicity}


def _report_code(rep: CheckReport) -> int:
    return 0 if rep.conclusion_verdict else 1


# -- roots ---------------------------------------------------------------------------

def cmd_roots(args) -> int:
    p = _poly(args.poly)
    if p.is_zero():
        raise UsageError("the zero polynomial has no isolated roots")
    width = _frac(args.refine) if args.refine else Fraction(1, 10**6)
    if width <= 0:
        raise UsageError("--refine must be positive")
    iso = isolate_real_roots(p)
    refined = approximate_roots(p, width)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "lo", "hi", "multiplicity", "approx"])
        for i, r in enumerate(refined):
            w.writerow([i, str(r.lo), str(r.hi), r.multiplicity, f"{float(r.midpoint):.10g}"])
        sys.stdout.write(buf.getvalue())
        return 0
    result = {
        "polynomial": p.to_text(),
        "degree": p.degree,
        "squarefree_part": iso.squarefree_part.to_text(),
        "distinct_real_roots": len(iso.roots),
        "real_roots_with_multiplicity": iso.total_with_multiplicity,
        "real_rooted": is_real_rooted(p),
        "pf": is_pf(p),
        "roots": [_interval_dict(r) for r in refined],
    }
    approx = {"width": str(width), "roots": [f"{float(r.midpoint):.10g}" for r in refined]}
    _emit("roots", {"poly": args.poly, "refine": str(width)}, result, approx)
    return 0


# -- family --------------------------------------------------------------------------

def _params(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        k, v = k.strip(), v.strip()
        if v.lower() in ("true", "false"):
            out[k] = v.lower() == "true"
        elif k == "ns":
            out[k] = tuple(int(t) for t in v.split(",") if t.strip())
        else:
            out[k] = _frac(v)
    return out


def _family_var(name: str) -> str:
    return families.FAMILIES[name][1] if name in families.FAMILIES else "x"


def cmd_family_gen(args) -> int:
    params = _params(args.param)
    if args.name == "multiset":
        if "ns" not in params:
            raise UsageError("multiset needs --param ns=n1,n2,...")
        p, var = families.multiset_composition_poly(params["ns"]), "x"
    else:
        if args.name not in families.FAMILIES:
            raise UsageError(f"unknown family {args.name!r}")
        try:
            seq = families.family_sequence(args.name, args.n, params)
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        if not seq:
            raise UsageError(f"index {args.n} is below the first member of {args.name}")
        p, var = seq[-1], _family_var(args.name)
    if args.json:
        _emit("family gen", {"name": args.name, "n": args.n, "params": {k: str(v) for k, v in params.items()}},
              {"polynomial": p.to_text(var), "var": var})
    else:
        print(p.to_text(var))
    return 0


_ORACLES = {
    "stirling": ("stirling", 0),
    "eulerian": ("eulerian_exc", 0),
    "derangement": ("derangement_exc", 0),
    "narayana": ("narayana_path", 1),
}


def _coeff_ints(p: Poly) -> list:
    return [int(c) for c in p.coeffs] if not p.is_zero() else []


def _trim(v: list) -> list:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return v


def family_verify(name: str, n: int, params: dict) -> CheckReport:
    """Oracle comparison, real-rootedness and Sturm-type checks for a registered family."""
    rep = CheckReport(f"family_{name}")
    if name == "multiset":
        return families.verify_multiset_compositions(n)
    params = dict(params)
    seq = families.family_sequence(name, n, params)
    rep.constructed["sequence"] = seq
    if name in _ORACLES:
        kind, first = _ORACLES[name]
        bad = None
        for k in range(first, min(n, 8) + 1):
            p = seq[k - first]
            if _trim(families.enumerate_oracle(kind, k)) != _coeff_ints(p):
                bad = bad or f"n={k}"
        rep.concl(f"matches enumeration for n <= {min(n, 8)}", bad is None, bad)
    if name == "narayana":
        bad = [k for k in range(1, min(n, 7) + 1)
               if _trim([0] + families.enumerate_oracle("stack_sortable", k, 1)) != _coeff_ints(seq[k - 1])]
        rep.concl("q W_{n,1}(q) = N_n(q) by stack-sorting enumeration", not bad, f"n={bad[0]}" if bad else None)
    if name == "tanny":
        bad = [k for k in range(min(n, 6) + 1)
               if _trim(families.multiset_compositions_oracle((1,) * k)) != _coeff_ints(seq[k])]
        rep.concl("matches composition enumeration", not bad, f"n={bad[0]}" if bad else None)
    bad = [i for i, p in enumerate(seq) if not is_real_rooted(p)]
    rep.concl("every member real-rooted", not bad, f"member {bad[0]} has non-real zeros" if bad else None)
    rep.concl("generalized Sturm sequence", not bad and is_generalized_sturm_sequence(seq), "adjacent pair fails ⪯")
    if name in families.ORTHOGONAL_KINDS:
        normed = [p if p.lead > 0 else -p for p in seq]
        rep.notes.append("Sturm check on members normalised to positive leading coefficient")
        rep.concl("Sturm sequence", is_sturm_sequence(normed), "Sturm condition fails")
    if name == "derangement":
        bad = [k for k, p in enumerate(seq) if k >= 1 and not p.is_zero() and _coeff_ints(p)[1:] != _coeff_ints(p)[1:][::-1]]
        rep.concl("palindromic for n >= 2", not bad, f"n={bad[0]}" if bad else None)
    return rep


def cmd_family_verify(args) -> int:
    params = _params(args.param)
    if args.name != "multiset" and args.name not in families.FAMILIES:
        raise UsageError(f"unknown family {args.name!r}")
    try:
        rep = family_verify(args.name, args.n, params)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    var = _family_var(args.name)
    _emit("family verify", {"name": args.name, "n": args.n, "params": {k: str(v) for k, v in params.items()}},
          rep.to_dict(var))
    return _report_code(rep)


def cmd_family_identities(args) -> int:
    rep = families.identity_suite()
    _emit("family identities", {}, rep.to_dict())
    return _report_code(rep)


# -- check ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    thm = args.theorem
    P = lambda name: _poly(getattr(args, name)) if getattr(args, name) is not None else _missing(name)
    R = lambda name: _frac(getattr(args, name)) if getattr(args, name) is not None else _missing(name)
    if thm == "thm-ffg":
        rep = criteria.check_thm_ffg(P("f"), P("g"), P("a"), P("b"))
    elif thm == "thm-ffgk":
        gs = [_poly(t) for t in args.gs or ()]
        bs = [_poly(t) for t in args.bs or ()]
        if not gs or len(gs) != len(bs):
            raise UsageError("thm-ffgk needs matching numbers of --gj and --bj")
        rep = criteria.check_thm_ffgk(P("f"), gs, P("a"), bs)
    elif thm == "cor-ppp":
        if args.spec not in criteria.PPP_SPECS:
            raise UsageError(f"--spec must be one of {sorted(criteria.PPP_SPECS)}")
        a, b, c, seeds = criteria.PPP_SPECS[args.spec]
        rep = criteria.check_cor_ppp(a, b, c, seeds, args.n_max)
    elif thm == "lemma-gfg":
        rep = criteria.check_lemma_gfg(P("f"), P("g"), P("c"), P("d"), args.part, args.strictness)
    elif thm == "thm-fgfg":
        rep = criteria.check_thm_fgfg(P("f"), P("g"), P("a"), P("b"), P("c"), P("d"))
    elif thm == "cor-cfdg":
        rep = criteria.check_cor_cfdg(P("f"), P("g"), P("a"), P("b"), R("c"), R("d"))
    elif thm == "thm-wy":
        rep = criteria.check_thm_wy(P("f"), P("g"), R("a"), R("b"), R("c"), R("d"), corollary=args.corollary)
    elif thm == "cor-haglund":
        rep = criteria.check_cor_haglund(P("f"), P("g"), R("a"), R("b"), R("d"))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown theorem {thm!r}")
    inputs = {k: v for k, v in vars(args).items() if k in ("f", "g", "a", "b", "c", "d", "gs", "bs", "spec", "n_max", "part", "strictness", "corollary") and v is not None}
    _emit(f"check {thm}", inputs, rep.to_dict())
    return _report_code(rep)


def _missing(name):
    raise UsageError(f"missing --{name}")


def cmd_harness(args) -> int:
    seed = args.seed if args.seed is not None else os.environ.get(SEED_ENV, "0")
    names = list(criteria.CERTIFIERS) if args.name == "all" else [args.name]
    for n in names:
        if n not in criteria.CERTIFIERS:
            raise UsageError(f"unknown certifier {n!r}")
    results = [criteria.run_harness(n, args.instances, seed, args.workers) for n in names]
    _emit("check harness", {"name": args.name, "instances": args.instances, "seed": str(seed)},
          {"runs": [r.to_dict() for r in results]})
    return 0 if all(r.ok for r in results) else 1


# -- matching ------------------------------------------------------------------------

def cmd_matching(args) -> int:
    if bool(args.graph) == bool(args.board):
        raise UsageError("give exactly one of --graph or --board")
    try:
        if args.board:
            cells = graphs.parse_board(_read(args.board))
            p = graphs.rook_polynomial(cells)
            _emit("matching", {"board": args.board}, {"rook_polynomial": p.to_text(), "pf": is_pf(p)})
            return 0
        g = graphs.parse_graph(_read(args.graph))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = {
        "vertices": g.vertex_count,
        "matching_counts": [str(c) for c in graphs.matching_counts(g)],
        "matching_polynomial": graphs.matching_polynomial(g).to_text(),
    }
    code = 0
    if args.verify:
        rep = graphs.verify_heilmann_lieb(g)
        result["heilmann_lieb"] = rep.to_dict()
        code = _report_code(rep)
    _emit("matching", {"graph": args.graph, "verify": args.verify}, result)
    return code


# -- genus ---------------------------------------------------------------------------

def cmd_genus_run(args) -> int:
    if not 1 <= args.family <= 8:
        raise UsageError("--family must be in 1..8")
    rep = genus.verify_linear_family(args.family, args.k, literal=args.literal)
    last = rep.constructed["genus_polynomials"][-1] if args.k >= 1 else None
    result = rep.to_dict()
    approx = None
    if last is not None:
        roots = approximate_roots(last, Fraction(1, 10**6))
        result["last_member_real_roots"] = [_interval_dict(r) for r in roots]
        approx = {"width": "1/1000000", "last_member_real_roots": [f"{float(r.midpoint):.7f}" for r in roots]}
    _emit("genus run", {"family": args.family, "k": args.k, "literal": args.literal}, result, approx)
    return _report_code(rep)


def _matrix(args) -> genus.PolyMatrix:
    if args.matrix:
        try:
            return genus.parse_matrix(_read(args.matrix))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.family:
        return genus.builtin_family(args.family)[0]
    raise UsageError("give --matrix or --family")


def cmd_genus_nice(args) -> int:
    M = _matrix(args)
    if (M.rows, M.cols) != (2, 2):
        raise UsageError("niceness is defined for 2x2 matrices")
    cert = genus.is_nice(M)
    result = cert.to_dict()
    result["matrix"] = M.to_rows()
    if args.k_max:
        rep = genus.verify_entry_realrootedness(M, args.k_max)
        result["entry_realrootedness"] = rep.to_dict()
    _emit("genus nice", {"matrix": args.matrix, "family": args.family}, result)
    return 0 if cert.verdict else 1


def cmd_genus_decompose(args) -> int:
    M = _matrix(args)
    if (M.rows, M.cols) != (2, 2):
        raise UsageError("decomposition is defined for 2x2 matrices")
    factors = genus.decompose_nice(M, args.depth)
    result = {"matrix": M.to_rows(), "found": factors is not None}
    if factors is not None:
        result["factors"] = [F.to_rows() for F in factors]
    _emit("genus decompose", {"matrix": args.matrix, "family": args.family, "depth": args.depth}, result)
    return 0 if factors is not None else 1


# -- diagnose ------------------------------------------------------------------------

def cmd_diagnose(args) -> int:
    p = _poly(args.poly)
    prof = diagnostics.profile(p)
    result = prof.to_dict()
    result["real_rooted"] = is_real_rooted(p)
    result["pf"] = is_pf(p)
    code = 0
    if result["pf"] and prof.newton_margins is not None:
        consistent = prof.newton_ok and prof.log_concave and prof.unimodal and len(prof.modes) <= 2 and prof.modes_in_darroch
        result["pf_consequences_hold"] = bool(consistent)
        code = 0 if consistent else 1
    _emit("diagnose", {"poly": args.poly}, result)
    return code


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="realzeros", description="Exact real-rootedness and interlacing toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="isolate and refine the real roots of a polynomial")
    p.add_argument("--poly", required=True, help="polynomial text, e.g. 'x^2 - 2'")
    p.add_argument("--refine", help="target interval width (rational or decimal, default 1e-6)")
    p.add_argument("--csv", action="store_true", help="print a CSV root table instead of JSON")
    p.set_defaults(func=cmd_roots)

    fam = sub.add_parser("family", help="polynomial families").add_subparsers(dest="action", required=True)
    names = sorted(families.FAMILIES) + ["multiset"]
    p = fam.add_parser("gen", help="print one member of a family")
    p.add_argument("--name", required=True, choices=names)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--param", action="append", help="key=value (alpha, beta, lam, t1, m, q, ns, standardized, literal)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family_gen)
    p = fam.add_parser("verify", help="oracle and Sturm-sequence checks up to --n")
    p.add_argument("--name", required=True, choices=names)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_family_verify)
    p = fam.add_parser("identities", help="binomial-inversion, Jacobi and Tanny identities")
    p.set_defaults(func=cmd_family_identities)

    chk = sub.add_parser("check", help="certify a theorem instance")
    chk.add_argument(
        "theorem",
        choices=["thm-ffg", "thm-ffgk", "cor-ppp", "lemma-gfg", "thm-fgfg", "cor-cfdg", "thm-wy", "cor-haglund", "harness"],
    )
    for name in ("f", "g", "a", "b", "c", "d"):
        chk.add_argument(f"--{name}")
    chk.add_argument("--gj", dest="gs", action="append", help="g_j for thm-ffgk (repeat)")
    chk.add_argument("--bj", dest="bs", action="append", help="b_j for thm-ffgk (repeat)")
    chk.add_argument("--spec", help="cor-ppp recurrence: stirling, eulerian or derangement")
    chk.add_argument("--n-max", type=int, default=10)
    chk.add_argument("--part", choices=["i", "ii"], default="i")
    chk.add_argument("--strictness", choices=["strict", "weak"], default="strict")
    chk.add_argument("--corollary", action="store_true", help="thm-wy: use (ax+b)f + x(cx+d)g")
    chk.add_argument("--name", default="all", help="harness: certifier name or 'all'")
    chk.add_argument("--instances", type=int, default=1000)
    chk.add_argument("--seed", help=f"harness seed (default: ${SEED_ENV} or 0)")
    chk.add_argument("--workers", type=int, default=1)
    chk.set_defaults(func=lambda a: cmd_harness(a) if a.theorem == "harness" else cmd_check(a))

    p = sub.add_parser("matching", help="matching polynomial of a graph or rook polynomial of a board")
    p.add_argument("--graph")
    p.add_argument("--board")
    p.add_argument("--verify", action="store_true", help="check real zeros and vertex-deletion interlacing")
    p.set_defaults(func=cmd_matching)

    gen = sub.add_parser("genus", help="linear families and nice matrices").add_subparsers(dest="action", required=True)
    p = gen.add_parser("run", help="genus polynomials of a built-in family")
    p.add_argument("--family", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--literal", action="store_true", help="family 5 with bottom-left entry 72+192x^2")
    p.set_defaults(func=cmd_genus_run)
    for action, fn in (("nice", cmd_genus_nice), ("decompose", cmd_genus_decompose)):
        p = gen.add_parser(action)
        p.add_argument("--matrix", help="matrix file")
        p.add_argument("--family", type=int, help="use a built-in family matrix instead")
        if action == "nice":
            p.add_argument("--k-max", type=int, default=0, help="also test entries of M^k for k <= K")
        else:
            p.add_argument("--depth", type=int, default=3)
        p.set_defaults(func=fn)

    p = sub.add_parser("diagnose", help="coefficient-sequence profile")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_diagnose)
    return ap


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

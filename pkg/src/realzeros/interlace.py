"""Exact zero-ordering relations between real-rooted polynomials.

``compare_zero_orders(f, g)`` decides how the zeros of ``g`` sit relative to the
zeros of ``f``: ``g`` *alternates* ``f`` when both have degree ``n`` and

    s_n <= r_n <= s_{n-1} <= ... <= s_1 <= r_1,

and ``g`` *interlaces* ``f`` when ``deg f = deg g + 1`` and

    r_n <= s_{n-1} <= ... <= s_1 <= r_1,

where ``r`` and ``s`` are the zeros of ``f`` and ``g`` in nonincreasing order.
Shared roots are handled by isolating the roots of ``lcm(sqfree f, sqfree g)``
once, so every comparison between a root of ``f`` and a root of ``g`` is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import Poly, exact_divide, gcd, squarefree_part
from .roots import (
    RootInterval,
    _counter,
    _decomp,
    _root_in,
    is_real_rooted,
    isolate_real_roots,
    refine_root,
    sign_at_root,
)

__all__ = [
    "MergedRoot",
    "InterlacingCertificate",
    "compare_zero_orders",
    "preceq",
    "prec",
    "is_sturm_sequence",
    "sturm_sequence_failure",
    "is_generalized_sturm_sequence",
    "generalized_sturm_failure",
]

RELATIONS = ("strict_interlaces", "interlaces", "strict_alternates", "alternates", "none")


@dataclass(frozen=True)
class MergedRoot:
    """A distinct real root of ``f*g`` with its multiplicity in each polynomial."""

    interval: RootInterval
    mult_f: int
    mult_g: int


@dataclass(frozen=True)
class InterlacingCertificate:
    relation: str
    evidence: tuple = ()
    degenerate: bool = False
    witness: Optional[str] = None

    @property
    def weak(self) -> bool:
        return self.relation != "none"

    @property
    def strict(self) -> bool:
        return self.relation.startswith("strict_")


def _multiplicities(p: Poly, interval: RootInterval) -> int:
    for i, q in enumerate(_decomp(p), start=1):
        if q.degree > 0 and _root_in(_counter(q), interval.lo, interval.hi):
            return i
    return 0


def merged_roots(f: Poly, g: Poly) -> tuple:
    """Ascending distinct real roots of ``f*g`` with multiplicities in ``f`` and ``g``."""
    parts = [squarefree_part(p) for p in (f, g) if p.degree > 0]
    if not parts:
        return ()
    if len(parts) == 1:
        lcm = parts[0]
    else:
        lcm = exact_divide(parts[0] * parts[1], gcd(parts[0], parts[1]))
    iso = isolate_real_roots(lcm)
    return tuple(
        MergedRoot(RootInterval(r.lo, r.hi, 1), _multiplicities(f, r), _multiplicities(g, r))
        for r in iso.roots
    )


def _check_chain(chain: list) -> tuple:
    """Return (ok, strict, first_bad_position) for a list of ascending root indices."""
    strict = True
    for k in range(len(chain) - 1):
        if chain[k] > chain[k + 1]:
            return False, False, k
        if chain[k] == chain[k + 1]:
            strict = False
    return True, strict, None


def compare_zero_orders(f: Poly, g: Poly) -> InterlacingCertificate:
    """Strongest relation in which ``g`` stands to ``f`` (``g`` alternates / interlaces ``f``)."""
    for name, p in (("f", f), ("g", g)):
        if not is_real_rooted(p):
            raise ValueError(f"{name} is not real-rooted")
    if f.is_zero() or g.is_zero():
        return InterlacingCertificate("alternates", (), True, None)
    n, m = f.degree, g.degree
    degenerate = m == 0 and n <= 1
    if n == m:
        kind = "alternates"
    elif n == m + 1:
        kind = "interlaces"
    else:
        return InterlacingCertificate(
            "none", (), False, f"degree gap: deg f = {n}, deg g = {m}"
        )
    merged = merged_roots(f, g)
    r_idx, s_idx = [], []
    for k, mr in enumerate(merged):
        r_idx.extend([k] * mr.mult_f)
        s_idx.extend([k] * mr.mult_g)
    # ascending: r_n <= ... <= r_1 is r_idx as built
    chain = []
    if kind == "alternates":
        for k in range(n):
            chain.append(s_idx[k])
            chain.append(r_idx[k])
    else:
        chain.append(r_idx[0])
        for k in range(m):
            chain.append(s_idx[k])
            chain.append(r_idx[k + 1])
    ok, strict, bad = _check_chain(chain)
    if not ok:
        # even chain slots hold zeros of g when alternating, of f when interlacing
        owners = ("g", "f") if kind == "alternates" else ("f", "g")
        polys = {"f": f, "g": g}
        shown = []
        for pos in (bad, bad + 1):
            who = owners[pos % 2]
            r = refine_root(polys[who], merged[chain[pos]].interval, Fraction(1, 10**6))
            shown.append(f"zero {float(r.midpoint):.6g} of {who}")
        witness = f"weave broken at position {bad}: {shown[0]} lies right of {shown[1]}"
        return InterlacingCertificate("none", merged, degenerate, witness)
    rel = ("strict_" if strict else "") + kind
    return InterlacingCertificate(rel, merged, degenerate, None)


def preceq(g: Poly, f: Poly) -> bool:
    """``g`` alternates or interlaces ``f`` (weakly)."""
    return compare_zero_orders(f, g).weak


def prec(g: Poly, f: Poly) -> bool:
    """``g`` strictly alternates or strictly interlaces ``f``."""
    if f.is_zero() or g.is_zero():
        return False
    return compare_zero_orders(f, g).strict


def sturm_sequence_failure(seq: Sequence[Poly]) -> Optional[int]:
    """Index of the first entry breaking the Sturm-sequence conditions, else ``None``."""
    for p in seq:
        if not p.is_standard():
            raise ValueError("Sturm sequence entries must be standard")
    for n, p in enumerate(seq):
        if p.degree != n:
            return n
    for n in range(1, len(seq) - 1):
        prod = seq[n - 1] * seq[n + 1]
        for r in isolate_real_roots(seq[n]).roots:
            if sign_at_root(prod, seq[n], r) >= 0:
                return n
    return None


def is_sturm_sequence(seq: Sequence[Poly]) -> bool:
    """``deg P_n = n`` and ``P_{n-1}(r) P_{n+1}(r) < 0`` at every real root ``r`` of ``P_n``."""
    if not seq:
        raise ValueError("empty sequence")
    return sturm_sequence_failure(seq) is None


def generalized_sturm_failure(seq: Sequence[Poly]) -> Optional[int]:
    """First index ``i`` with ``P_i`` not real-rooted or ``P_{i-1} ⪯ P_i`` failing."""
    for i, p in enumerate(seq):
        if not is_real_rooted(p):
            return i
        if i and not preceq(seq[i - 1], p):
            return i
    return None


def is_generalized_sturm_sequence(seq: Sequence[Poly]) -> bool:
    return generalized_sturm_failure(seq) is None

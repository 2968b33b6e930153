"""Polynomial transfer matrices for linear graph families and nice 2x2 matrices.

A linear family is given by a square matrix ``M`` and a column vector ``v``
over ``Z[x]``; the genus polynomial of the ``k``-th member is the first entry of
``M^k v``.

A 2x2 matrix ``M = (a c; b d)`` (``a`` top-left, ``c`` top-right, ``b``
bottom-left, ``d`` bottom-right) with nonnegative-coefficient entries is *nice*
when ``deg a, deg d <= 1``, ``deg b <= 2``, ``c`` is a positive constant and
``det M >= 0`` on ``x <= 0``.  Nice matrices carry interlacing pairs to
interlacing pairs in both row mode ``(F, G) = (f, g) M`` and column mode
``(G1, F1)^T = M (g, f)^T``.

Matrix text format: a dimension line (``n`` or ``rows cols``) followed by one
polynomial per line in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
import math
from typing import Optional, Sequence

from .interlace import preceq
from .poly import ONE, ZERO, Poly, exact_divide, parse
from .report import CheckReport
from .roots import (
    approximate_roots,
    count_all_real_roots,
    count_real_roots,
    is_pf,
    is_real_rooted,
    negative_witness,
    nonnegative_on,
)

__all__ = [
    "PolyMatrix",
    "mat_mul",
    "mat_vec",
    "mat_pow",
    "mat_pow_apply",
    "builtin_family",
    "FAMILY_NAMES",
    "SWAP",
    "NiceCertificate",
    "is_nice",
    "check_nice_propagation",
    "verify_entry_realrootedness",
    "genus_sequence",
    "all_roots_negative",
    "verify_linear_family",
    "decompose_nice",
    "parse_matrix",
]


@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular matrix of exact polynomials, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        ents = tuple(tuple(_as_poly(e) for e in row) for row in self.entries)
        if len(ents) != self.rows or any(len(r) != self.cols for r in ents):
            raise ValueError("matrix entries do not match the stated shape")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def of(cls, rows: Sequence[Sequence], scalar=1) -> "PolyMatrix":
        """Build from nested rows of polynomials, integers or polynomial text."""
        ents = tuple(tuple(_as_poly(e).scale(scalar) for e in r) for r in rows)
        return cls(len(ents), len(ents[0]) if ents else 0, ents)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return mat_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = lambda self, other: self.scale(other) if isinstance(other, (int, Fraction)) else NotImplemented

    def scale(self, s) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(tuple(e.scale(s) for e in r) for r in self.entries))

    def det(self) -> Poly:
        if (self.rows, self.cols) != (2, 2):
            raise ValueError("det is implemented for 2x2 matrices")
        (a, c), (b, d) = self.entries
        return a * d - b * c

    def adjugate(self) -> "PolyMatrix":
        (a, c), (b, d) = self.entries
        return PolyMatrix(2, 2, ((d, -c), (-b, a)))

    def content(self) -> Fraction:
        """Positive rational ``s`` with ``M / s`` integral and primitive (1 for the zero matrix)."""
        cs = [c for r in self.entries for e in r for c in e.coeffs]
        if not cs:
            return Fraction(1)
        num = reduce(math.gcd, (c.numerator for c in cs), 0)
        den = reduce(math.lcm, (c.denominator for c in cs), 1)
        return Fraction(num, den)

    def to_rows(self, var: str = "x") -> list:
        return [[e.to_text(var) for e in r] for r in self.entries]

    def __str__(self):
        return "(" + "; ".join(", ".join(r) for r in self.to_rows()) + ")"


def _as_poly(e) -> Poly:
    if isinstance(e, Poly):
        return e
    if isinstance(e, str):
        return parse(e)
    return Poly.constant(e)


def _vec(v) -> tuple:
    return tuple(_as_poly(e) for e in v)


def mat_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    ents = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = ZERO
            for k in range(A.cols):
                acc = acc + A.entries[i][k] * B.entries[k][j]
            row.append(acc)
        ents.append(tuple(row))
    return PolyMatrix(A.rows, B.cols, tuple(ents))


def mat_vec(A: PolyMatrix, v) -> tuple:
    v = _vec(v)
    if A.cols != len(v):
        raise ValueError(f"cannot apply a {A.rows}x{A.cols} matrix to a vector of length {len(v)}")
    out = []
    for row in A.entries:
        acc = ZERO
        for a, b in zip(row, v):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def mat_pow(M: PolyMatrix, k: int) -> PolyMatrix:
    if M.rows != M.cols:
        raise ValueError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = PolyMatrix.identity(M.rows)
    for _ in range(k):
        out = mat_mul(out, M)
    return out


def mat_pow_apply(M: PolyMatrix, k: int, v) -> tuple:
    """``M^k v`` computed as ``k`` successive matrix-vector products."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    v = _vec(v)
    for _ in range(k):
        v = mat_vec(M, v)
    return v


# -- the eight families --------------------------------------------------------------

FAMILY_NAMES = {
    1: "cobblestone paths",
    2: "ladders",
    3: "double ladders",
    4: "diamonds",
    5: "triple ladders",
    6: "K4-linear graphs",
    7: "W4-linear graphs",
    8: "triangular prisms",
}

SWAP = PolyMatrix.of([[0, 1], ["x", 0]])


def builtin_family(i: int, literal: bool = False):
    """``(M_i, v_i)`` for the eight linear families, scalar prefactors kept.

    The bottom-left entry of ``M_5`` is ``72x + 192x^2``, the value forced by its
    factorisation ``24 (4+12x, 8; 1+12x, 3+8x) (0, 1; x, 0)``.  ``literal=True``
    gives the variant with ``72 + 192x^2`` in that slot; it does not factor
    that way and its genus sequence is not real-rooted.
    """
    P = PolyMatrix.of
    if i == 1:
        return P([[4, 2], ["6x", 0]]), _vec([1, "x"])
    if i == 2:
        return P([[0, 4], ["2x", 2]]), _vec([1, 1])
    if i == 3:
        return P([["3x", 3], ["2x", "1+3x"]], 6), _vec([Poly((4,)), Poly((2, 2))])
    if i == 4:
        return P([["2+3x", 1], ["4x", "2x"]], 4), _vec([Poly((2, 2)), Poly((0, 4))])
    if i == 5:
        bl = "72+192x^2" if literal else "72x+192x^2"
        return P([["192x", "96+288x"], [bl, "24+288x"]]), _vec(["18+18x", "6+30x"])
    if i == 6:
        return P([["8+68x", "4+16x"], ["32x+48x^2", "16x"]]), _vec(["2+14x", "8x+8x^2"])
    if i == 7:
        return (
            P([["2+65x+54x^2", "1+22x"], ["16x+104x^2", "8x+16x^2"]], 4),
            _vec(["2+58x+36x^2", "16+80x"]),
        )
    if i == 8:
        return (
            P([[0, "162x", 54], ["24x^2", "72x", "12+108x"], ["11x^2", "15x+117x^2", "1+72x"]]),
            _vec([8, "4+4x", "1+7x"]),
        )
    raise ValueError("family index must be in 1..8")


# -- niceness --------------------------------------------------------------------------

@dataclass(frozen=True)
class NiceCertificate:
    verdict: bool
    clauses: tuple
    det: Poly
    failure_witness: Optional[Fraction] = None

    def to_dict(self) -> dict:
        d = {
            "nice": self.verdict,
            "clauses": [{"clause": n, "pass": ok} for n, ok in self.clauses],
            "det": self.det.to_text(),
        }
        if self.failure_witness is not None:
            d["det_negative_at"] = str(self.failure_witness)
        return d


def is_nice(M: PolyMatrix) -> NiceCertificate:
    if (M.rows, M.cols) != (2, 2):
        raise ValueError("niceness is defined for 2x2 matrices")
    (a, c), (b, d) = M.entries
    det = M.det()
    nonneg = all(x >= 0 for e in (a, b, c, d) for x in e.coeffs)
    det_ok = nonnegative_on(det, None, 0)
    witness = None
    if not det_ok:
        witness = Fraction(-1) if det.eval(-1) < 0 else negative_witness(det, None, 0)
    clauses = (
        ("nonnegative coefficients", nonneg),
        ("deg a <= 1", a.degree <= 1),
        ("deg d <= 1", d.degree <= 1),
        ("deg b <= 2", b.degree <= 2),
        ("c positive constant", c.degree == 0 and c.lead > 0),
        ("det >= 0 on x <= 0", det_ok),
    )
    return NiceCertificate(all(ok for _, ok in clauses), clauses, det, witness)


def check_nice_propagation(M: PolyMatrix, f: Poly, g: Poly, mode: str = "row") -> CheckReport:
    """Build ``(F, G) = (f, g) M`` (row) or ``(G, F)^T = M (g, f)^T`` (column) and check
    ``F, G`` in PF with ``G ⪯ F``."""
    if mode not in ("row", "column"):
        raise ValueError("mode must be 'row' or 'column'")
    rep = CheckReport(f"nice_propagation_{mode}")
    cert = is_nice(M)
    rep.hyp("M nice", cert.verdict, "; ".join(n for n, ok in cert.clauses if not ok))
    rep.hyp("f in PF", is_pf(f), "f not in PF")
    rep.hyp("g in PF", is_pf(g), "g not in PF")
    rep.hyp("g ⪯ f", _safe_preceq(g, f), "g does not alternate/interlace f")
    (a, c), (b, d) = M.entries
    if mode == "row":
        F, G = a * f + b * g, c * f + d * g
    else:
        G, F = a * g + c * f, b * g + d * f
    rep.constructed.update(F=F, G=G)
    rep.concl("F in PF", is_pf(F), "F not in PF")
    rep.concl("G in PF", is_pf(G), "G not in PF")
    rep.concl("G ⪯ F", _safe_preceq(G, F), "G does not alternate/interlace F")
    return rep


def _safe_preceq(g: Poly, f: Poly) -> bool:
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return False
    return preceq(g, f)


def verify_entry_realrootedness(M: PolyMatrix, k_max: int = 8) -> CheckReport:
    """Every entry of ``M^k`` is real-rooted for ``1 <= k <= k_max``."""
    rep = CheckReport("entry_realrootedness")
    P = PolyMatrix.identity(M.rows)
    first = None
    for k in range(1, k_max + 1):
        P = mat_mul(P, M)
        for i in range(P.rows):
            for j in range(P.cols):
                if first is None and not is_real_rooted(P.entries[i][j]):
                    first = (k, i, j)
    wit = None
    if first:
        k, i, j = first
        wit = f"k={k}, entry ({i},{j}) has non-real zeros"
        rep.constructed["first_failure_k"] = k
    rep.concl(f"entries of M^k real-rooted for k <= {k_max}", first is None, wit)
    return rep


# -- Linear graph families ---------------------------------------------------------

def genus_sequence(i: int, k_max: int, literal: bool = False) -> list:
    """First entries of ``M_i^k v_i`` for ``k = 1..k_max``."""
    M, v = builtin_family(i, literal)
    out = []
    for _ in range(k_max):
        v = mat_vec(M, v)
        out.append(v[0])
    return out


def all_roots_negative(p: Poly) -> bool:
    """Real-rooted with every zero strictly negative (nonzero constants qualify)."""
    if p.is_zero():
        return False
    return is_real_rooted(p) and p.eval(0) != 0 and count_real_roots(p, 0, None) == 0


def verify_linear_family(i: int, k_max: int = 10, literal: bool = False) -> CheckReport:
    """Real, negative zeros of the genus polynomials of family ``i`` up to ``k_max``.

    Families 1-6 carry the theorem's expectation; 7 is expected to fail; 8 is
    reported without an expectation.
    """
    M, v = builtin_family(i, literal)
    rep = CheckReport(f"linear_family_{i}")
    if len(v) == 2:
        rep.hyp("v1 ⪯ v2", _safe_preceq(v[0], v[1]), "initial vector components do not interlace")
    seq = genus_sequence(i, k_max, literal)
    rep.constructed["genus_polynomials"] = seq
    bad = None
    for k, p in enumerate(seq, start=1):
        if not all_roots_negative(p):
            n_real = count_all_real_roots(p)
            bad = f"k={k}: degree {p.degree}, {n_real} real zeros"
            rep.constructed["first_failure_k"] = k
            rep.constructed["real_zero_count"] = n_real
            rep.constructed["real_zero_approximations"] = [
                f"{float(r.midpoint):.7f}" for r in approximate_roots(p)
            ]
            break
    rep.concl(f"real negative zeros for k <= {k_max}", bad is None, bad)
    expectation = {7: "expected to fail (W4-linear counterexample)", 8: "no expectation recorded"}
    rep.notes.append(f"family {i} ({FAMILY_NAMES[i]}): " + expectation.get(i, "expected to pass"))
    return rep


# -- decomposition into nice factors -------------------------------------------------

_DICTIONARY = (
    SWAP,
    PolyMatrix.of([[1, 1], [0, 1]]),
    PolyMatrix.of([[1, 1], ["x", 1]]),
)


def _divide(M: PolyMatrix, E: PolyMatrix, side: str) -> Optional[PolyMatrix]:
    """``R`` with ``M = E R`` (side ``left``) or ``M = R E`` (side ``right``), if polynomial."""
    det = E.det()
    if det.is_zero():
        return None
    prod = mat_mul(E.adjugate(), M) if side == "left" else mat_mul(M, E.adjugate())
    rows = []
    for r in prod.entries:
        row = []
        for e in r:
            q = exact_divide(e, det)
            if q is None:
                return None
            row.append(q)
        rows.append(tuple(row))
    return PolyMatrix(2, 2, tuple(rows))


def decompose_nice(M: PolyMatrix, max_depth: int = 3) -> Optional[list]:
    """Factor ``M`` into nice matrices, or return ``None``.

    A bounded search: the scalar content is removed, then dictionary factors
    (the swap ``(0, 1; x, 0)`` and two unipotent shapes) are peeled off the left
    or right by exact division until the remainder is nice.  The scalar goes back
    on the first factor.  The product of the returned list equals ``M`` exactly.
    """
    if (M.rows, M.cols) != (2, 2):
        raise ValueError("decomposition is defined for 2x2 matrices")
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    if is_nice(M).verdict:
        return [M]
    s = M.content()
    if not s:
        return None
    core = M.scale(1 / s)

    def search(R: PolyMatrix, depth: int):
        if is_nice(R).verdict:
            return [R]
        if depth == 0:
            return None
        for E in _DICTIONARY:
            for side in ("left", "right"):
                Q = _divide(R, E, side)
                if Q is None or any(x < 0 for r in Q.entries for e in r for x in e.coeffs):
                    continue
                sub = search(Q, depth - 1)
                if sub is not None:
                    return [E] + sub if side == "left" else sub + [E]
        return None

    factors = search(core, max_depth - 1)
    if factors is None:
        return None
    factors[0] = factors[0].scale(s)
    prod = reduce(mat_mul, factors)
    if prod != M or not all(is_nice(F).verdict for F in factors):
        return None
    return factors


# -- text format ----------------------------------------------------------------------

def parse_matrix(text: str) -> PolyMatrix:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty matrix text")
    dims = lines[0].replace("x", " ").split()
    try:
        if len(dims) == 1:
            r = c = int(dims[0])
        elif len(dims) == 2:
            r, c = int(dims[0]), int(dims[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad dimension line {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != r * c:
        raise ValueError(f"expected {r * c} entries, found {len(body)}")
    polys = [parse(t) for t in body]
    return PolyMatrix(r, c, tuple(tuple(polys[i * c : (i + 1) * c]) for i in range(r)))

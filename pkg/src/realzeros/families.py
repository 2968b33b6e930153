"""Recurrence-driven polynomial families and brute-force combinatorial oracles.

Every generator works in exact rational arithmetic.  Families with a second
variable ``q`` (q-Eulerian, type-B Eulerian) are evaluated at a fixed rational
``q`` and returned as polynomials in ``x``.

Index conventions that are easy to get wrong:

* ``sulanke_poly(0, n + 1) == narayana_poly(n)``: the Sulanke seeds
  ``p_2 = q`` and ``p_3 = q(1+q)`` are the Narayana seeds ``N_1`` and ``N_2``.
* ``q * W_{n,1}(q) == N_n(q)``: descents are counted from 0 while Narayana
  coefficients start at ``q^1``.
* ``dowling_D(1, n)`` has coefficients ``S(n+1, k+1)`` (the Dowling lattice of
  the trivial group is the partition lattice of an ``(n+1)``-set), and
  ``dowling_F(1, n)`` has coefficients ``k! S(n+1, k+1)``.
* ``x * type_b_eulerian(n, 0) == eulerian_poly(n)`` for ``n >= 1``.
* The Jacobi identity for Narayana polynomials holds in the form
  ``N_{n+1}(q) = q/(n+1) (1-q)^n P_n^{(1,1)}((1+q)/(1-q))``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .interlace import preceq
from .poly import ONE, X, ZERO, Poly
from .report import CheckReport
from .roots import approximate_roots, count_real_roots, is_real_rooted

__all__ = [
    "multisets_up_to",
    "verify_multiset_compositions",
    "ORTHOGONAL_KINDS",
    "orthogonal",
    "stirling2_poly",
    "eulerian_poly",
    "derangement_poly",
    "narayana_poly",
    "sulanke_poly",
    "dowling_D",
    "dowling_F",
    "tanny_F",
    "multiset_composition_poly",
    "composition_table",
    "q_eulerian",
    "type_b_eulerian",
    "enumerate_oracle",
    "ENUMERATION_CAP",
    "stack_sort",
    "schroder_count",
    "dyck_peak_counts",
    "multiset_compositions_oracle",
    "identity_suite",
    "FAMILIES",
    "family_sequence",
]

ORTHOGONAL_KINDS = ("tchebyshev", "hermite", "laguerre", "legendre", "gegenbauer", "jacobi")
ENUMERATION_CAP = 9


def _rat(v, name: str) -> Fraction:
    if isinstance(v, float):
        raise TypeError(f"{name} must be rational, not float")
    return Fraction(v)


def _linear(a, b) -> Poly:
    """``a*x + b``."""
    return Poly((b, a))


# -- orthogonal polynomials --------------------------------------------------------

def orthogonal(kind: str, n: int, **params) -> list:
    """``[p_0, ..., p_n]`` from the classical three-term recurrences.

    Parameters by kind: ``tchebyshev(t1=1)`` chooses the seed ``T_1 = t1*x``
    (1 gives the first kind, 2 the second); ``laguerre(standardized=False)``
    returns ``L_n(-x)`` instead of ``L_n(x)`` when set; ``legendre(literal=False)``
    uses ``(n-1)`` instead of ``n`` as the coefficient of ``P_{n-1}`` when set;
    ``gegenbauer(lam)`` needs ``lam > -1/2``; ``jacobi(alpha, beta)`` needs both
    parameters ``> -1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    seq = [ONE]
    if kind == "tchebyshev":
        t1 = params.get("t1", 1)
        if t1 not in (1, 2):
            raise ValueError("tchebyshev seed t1 must be 1 or 2")
        seq.append(Poly((0, t1)))
        step = lambda k, p1, p0: _linear(2, 0) * p1 - p0
    elif kind == "hermite":
        seq.append(Poly((0, 2)))
        step = lambda k, p1, p0: _linear(2, 0) * p1 - p0.scale(2 * k)
    elif kind == "laguerre":
        seq.append(Poly((1, -1)))
        step = lambda k, p1, p0: (_linear(-1, 2 * k + 1) * p1 - p0.scale(k)).scale(Fraction(1, k + 1))
    elif kind == "legendre":
        off = 1 if params.get("literal", False) else 0
        seq.append(X)
        step = lambda k, p1, p0: (_linear(2 * k + 1, 0) * p1 - p0.scale(k - off)).scale(Fraction(1, k + 1))
    elif kind == "gegenbauer":
        lam = _rat(params.get("lam", params.get("lambda")), "lam")
        if not lam > Fraction(-1, 2):
            raise ValueError("Gegenbauer parameter must exceed -1/2")
        seq.append(Poly((0, 2 * lam)))
        step = lambda k, p1, p0: (
            _linear(2 * (k + lam), 0) * p1 - p0.scale(k + 2 * lam - 1)
        ).scale(Fraction(1, k + 1))
    elif kind == "jacobi":
        a = _rat(params.get("alpha"), "alpha")
        b = _rat(params.get("beta"), "beta")
        if not (a > -1 and b > -1):
            raise ValueError("Jacobi parameters must exceed -1")
        seq.append(_linear((a + b + 2) / 2, (a - b) / 2))

        def step(k, p1, p0):
            m = k + 1  # index being produced
            s = 2 * m + a + b
            lhs = 2 * m * (m + a + b) * (s - 2)
            lin = _linear((s - 1) * s * (s - 2), (s - 1) * (a * a - b * b))
            return (lin * p1 - p0.scale(2 * (m + a - 1) * (m + b - 1) * s)).scale(1 / lhs)

    else:
        raise ValueError(f"unknown orthogonal family {kind!r}")
    while len(seq) <= n:
        k = len(seq) - 1
        seq.append(step(k, seq[k], seq[k - 1]))
    seq = seq[: n + 1]
    if kind == "laguerre" and params.get("standardized", False):
        seq = [p.reflect() for p in seq]
    return seq


# -- Stirling / Eulerian / derangement ---------------------------------------------

@lru_cache(maxsize=None)
def stirling2_poly(n: int) -> Poly:
    """``S_n(x) = sum_k S(n,k) x^k`` via ``S_n = x S_{n-1} + x S'_{n-1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    p = stirling2_poly(n - 1)
    return X * p + X * p.derivative()


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> Poly:
    """``A_n(x) = n x A_{n-1} + x(1-x) A'_{n-1}``, ``A_0 = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    p = eulerian_poly(n - 1)
    return _linear(n, 0) * p + Poly((0, 1, -1)) * p.derivative()


@lru_cache(maxsize=None)
def derangement_poly(n: int) -> Poly:
    """``d_n(q) = (n-1)q d_{n-1} + q(1-q) d'_{n-1} + (n-1)q d_{n-2}``, ``d_0 = 1``, ``d_1 = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    if n == 1:
        return ZERO
    p1, p0 = derangement_poly(n - 1), derangement_poly(n - 2)
    return _linear(n - 1, 0) * p1 + Poly((0, 1, -1)) * p1.derivative() + _linear(n - 1, 0) * p0


# -- Narayana and Sulanke ----------------------------------------------------------

_ONE_PLUS = Poly((1, 1))
_ONE_MINUS_SQ = Poly((1, -2, 1))


@lru_cache(maxsize=None)
def narayana_poly(n: int) -> Poly:
    """``N_n(q) = sum_k N(n,k) q^k`` from the three-term recurrence, ``N_1 = q``, ``N_2 = q(1+q)``."""
    if n < 1:
        raise ValueError("Narayana polynomials start at n = 1")
    if n == 1:
        return X
    if n == 2:
        return Poly((0, 1, 1))
    p1, p0 = narayana_poly(n - 1), narayana_poly(n - 2)
    out = (_ONE_PLUS * p1).scale(2 * n - 1) - (_ONE_MINUS_SQ * p0).scale(n - 2)
    return out.scale(Fraction(1, n + 1))


@lru_cache(maxsize=None)
def sulanke_poly(alpha: int, n: int) -> Poly:
    """Sulanke's ``p_{alpha,n}(q)`` for ``alpha in {0,1,2}`` and ``n >= 2``."""
    if alpha not in (0, 1, 2):
        raise ValueError("alpha must be 0, 1 or 2")
    if n < 2:
        raise ValueError("Sulanke polynomials start at n = 2")
    if n == 2:
        return X
    if n == 3:
        return Poly((0, 1, 1))
    m = n - 1  # recurrence produces p_{m+1}
    p1, p0 = sulanke_poly(alpha, m), sulanke_poly(alpha, m - 1)
    out = (_ONE_PLUS * p1).scale(2 * m - 1 - alpha) - (_ONE_MINUS_SQ * p0).scale(m - 2)
    return out.scale(Fraction(1, m + 1 - alpha))


# -- compositions and Dowling lattices ---------------------------------------------

@lru_cache(maxsize=None)
def dowling_D(m: int, n: int) -> Poly:
    """``D_m(n;x) = (x+1) D_m(n-1;x) + m x D'_m(n-1;x)``, ``D_m(0;x) = 1``."""
    _check_dowling(m, n)
    if n == 0:
        return ONE
    p = dowling_D(m, n - 1)
    return _ONE_PLUS * p + _linear(m, 0) * p.derivative()


@lru_cache(maxsize=None)
def dowling_F(m: int, n: int) -> Poly:
    """``F_n(m;x) = (x+1) F_{n-1}(m;x) + x(x+m) F'_{n-1}(m;x)``, ``F_0 = 1``."""
    _check_dowling(m, n)
    if n == 0:
        return ONE
    p = dowling_F(m, n - 1)
    return _ONE_PLUS * p + Poly((0, m, 1)) * p.derivative()


def _check_dowling(m, n):
    if not isinstance(m, int) or m < 1:
        raise ValueError("Dowling group order m must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")


def tanny_F(n: int) -> Poly:
    """Tanny's ``F_n(x) = sum_k k! S(n,k) x^k``."""
    s = stirling2_poly(n)
    return Poly(math.factorial(k) * c for k, c in enumerate(s.coeffs))


def _canon_multiset(ns) -> tuple:
    ns = tuple(int(v) for v in ns)
    if any(v < 0 for v in ns):
        raise ValueError("multiplicities must be nonnegative")
    return ns


@lru_cache(maxsize=None)
def multiset_composition_poly(ns: tuple) -> Poly:
    """``f_n(x) = sum_k O(n,k) x^k`` built one element at a time with
    ``(n_j+1) f_{n+e_j} = (x+n_j) f_n + x(x+1) f_n'`` from ``f_0 = 1``."""
    ns = _canon_multiset(ns)
    f = ONE
    current = [0] * len(ns)
    for j, target in enumerate(ns):
        while current[j] < target:
            nj = current[j]
            f = (_linear(1, nj) * f + Poly((0, 1, 1)) * f.derivative()).scale(Fraction(1, nj + 1))
            current[j] += 1
    return f


def composition_table(ns) -> list:
    """``[O(n,0), O(n,1), ...]`` from ``(n_j+1) O(n+e_j,k) = k O(n,k-1) + (n_j+k) O(n,k)``."""
    ns = _canon_multiset(ns)
    table = [Fraction(1)]
    current = [0] * len(ns)
    for j, target in enumerate(ns):
        while current[j] < target:
            nj = current[j]
            nxt = []
            for k in range(len(table) + 1):
                prev = table[k - 1] if k >= 1 else 0
                here = table[k] if k < len(table) else 0
                nxt.append((k * prev + (nj + k) * here) / (nj + 1))
            while nxt and not nxt[-1]:
                nxt.pop()
            table = nxt
            current[j] += 1
    return [int(c) for c in table]


# -- q-Eulerian and type B ---------------------------------------------------------

def q_eulerian(n: int, q) -> Poly:
    """``A_n(x;q) = (nx+q-1) A_{n-1} + x(1-x) d/dx A_{n-1}``, ``A_0(x;q) = x``."""
    q = _rat(q, "q")
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = X
    for k in range(1, n + 1):
        p = _linear(k, q - 1) * p + Poly((0, 1, -1)) * p.derivative()
    return p


def type_b_eulerian(n: int, q) -> Poly:
    """``B_n(x;q) = {1+[(1+q)n-1]x} B_{n-1} + (1+q) x(1-x) d/dx B_{n-1}``, ``B_0 = 1``.

    The derivative is applied once.
    """
    q = _rat(q, "q")
    if q < 0:
        raise ValueError("type-B Eulerian polynomials are defined here for q >= 0")
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = ONE
    for k in range(1, n + 1):
        p = _linear((1 + q) * k - 1, 1) * p + Poly((0, 1, -1)).scale(1 + q) * p.derivative()
    return p


# -- enumeration oracles -----------------------------------------------------------

def _set_partition_blocks(n: int):
    # restricted growth strings
    if n == 0:
        yield 0
        return
    def rec(i, a, mx):
        if i == n:
            yield mx + 1
            return
        for v in range(mx + 2):
            yield from rec(i + 1, a, max(mx, v))
    yield from rec(1, [0], 0)


def _excedances(perm) -> int:
    return sum(1 for i, v in enumerate(perm) if v > i)


def _descents(perm) -> int:
    return sum(1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def stack_sort(perm) -> tuple:
    """One pass of Knuth's stack-sorting operator."""
    out, stack = [], []
    for v in perm:
        while stack and stack[-1] < v:
            out.append(stack.pop())
        stack.append(v)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def dyck_peak_counts(n: int) -> list:
    """Dyck paths of semilength ``n`` tallied by number of peaks, by listing them."""
    if n > ENUMERATION_CAP:
        raise ValueError(f"enumeration is capped at n <= {ENUMERATION_CAP}")
    return _tally(_dyck_peaks(n))


def _dyck_peaks(n: int):
    def rec(up, down, prev_up, peaks):
        if up == n and down == n:
            yield peaks
            return
        if up < n:
            yield from rec(up + 1, down, True, peaks)
        if down < up:
            yield from rec(up, down + 1, False, peaks + (1 if prev_up else 0))
    yield from rec(0, 0, False, 0)


def _tally(values) -> list:
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        return []
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def enumerate_oracle(kind: str, n: int, extra=None) -> list:
    """Coefficient vector (index = power) computed by direct enumeration.

    ``stirling``: set partitions by number of blocks.
    ``eulerian_exc``: permutations weighted ``x^(exc+1)`` (``[1]`` for ``n = 0``).
    ``derangement_exc``: derangements by excedances (``[1]`` for ``n = 0``, ``[]`` for ``n = 1``).
    ``narayana_path``: ``N(n,k) = C(n,k) C(n,k-1) / n`` (see :func:`dyck_peak_counts`
    for the path enumeration).
    ``stack_sortable``: ``extra``-stack-sortable permutations by number of descents.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ENUMERATION_CAP:
        raise ValueError(f"enumeration is capped at n <= {ENUMERATION_CAP}")
    if kind == "stirling":
        return _tally(_set_partition_blocks(n)) if n else [1]
    if kind == "eulerian_exc":
        if n == 0:
            return [1]
        return _tally(_excedances(p) + 1 for p in itertools.permutations(range(n)))
    if kind == "derangement_exc":
        return _tally(
            _excedances(p) for p in itertools.permutations(range(n)) if all(v != i for i, v in enumerate(p))
        )
    if kind == "narayana_path":
        if n == 0:
            return [1]
        return [math.comb(n, k) * math.comb(n, k - 1) // n if k else 0 for k in range(n + 1)]
    if kind == "stack_sortable":
        t = int(extra if extra is not None else 1)
        if t < 1:
            raise ValueError("number of stack passes must be positive")
        ident = tuple(range(n))

        def sortable(p):
            for _ in range(t):
                p = stack_sort(p)
            return p == ident

        return _tally(_descents(p) for p in itertools.permutations(range(n)) if sortable(p))
    raise ValueError(f"unknown oracle kind {kind!r}")


def schroder_count(n: int) -> int:
    """Large Schröder number: lattice paths ``U=(1,1)``, ``D=(1,-1)``, ``H=(2,0)`` from
    ``(0,0)`` to ``(2n,0)`` staying weakly above the axis, counted one by one."""
    if n > ENUMERATION_CAP:
        raise ValueError(f"enumeration is capped at n <= {ENUMERATION_CAP}")

    def rec(x, y):
        if x == 2 * n:
            return 1 if y == 0 else 0
        total = 0
        if y + 1 <= 2 * n - x - 1:
            total += rec(x + 1, y + 1)
        if y > 0:
            total += rec(x + 1, y - 1)
        if x + 2 <= 2 * n:
            total += rec(x + 2, y)
        return total

    return rec(0, 0)


def multiset_compositions_oracle(ns) -> list:
    """``[O(n,0), O(n,1), ...]`` by listing ordered sequences of nonempty sub-multisets."""
    ns = _canon_multiset(ns)

    def subs(v):
        for choice in itertools.product(*(range(c + 1) for c in v)):
            if any(choice):
                yield choice

    def rec(v):
        # yields the number of parts of every composition of v
        if not any(v):
            yield 0
            return
        for part in subs(v):
            rest = tuple(a - b for a, b in zip(v, part))
            for k in rec(rest):
                yield k + 1

    return _tally(rec(ns))


def multisets_up_to(total: int):
    """Multiplicity vectors (descending) of every multiset of size ``1..total``."""

    def parts(n, cap):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in parts(n - k, k):
                yield (k,) + rest

    for s in range(1, total + 1):
        yield from parts(s, s)


def verify_multiset_compositions(total: int, width=Fraction(1, 10**6)) -> CheckReport:
    """Zeros in ``[-1, 0]`` and ``f_n ⪯ f_(n+e_j)`` for all multisets of size ``<= total``.

    The root clause is decided twice: by exact Sturm counts on ``(-1, 0]`` plus
    the value at ``-1``, and by refining every isolating interval to ``width``
    and checking it lies inside ``[-1, 0]``.
    """
    rep = CheckReport("multiset_compositions")
    box = refined = order = None
    count = 0
    for ns in multisets_up_to(total):
        f = multiset_composition_poly(ns)
        count += 1
        inside = count_real_roots(f, -1, 0) + (f.eval(-1) == 0)
        if not is_real_rooted(f) or inside != count_real_roots(f):
            box = box or f"n={ns}"
        if any(r.lo < -1 or r.hi > 0 for r in approximate_roots(f, width)):
            refined = refined or f"n={ns}"
        for j in range(len(ns) + 1):
            nxt = list(ns) + [0] if j == len(ns) else list(ns)
            nxt[j] += 1
            if sum(nxt) <= total and not preceq(f, multiset_composition_poly(tuple(nxt))):
                order = order or f"{ns} -> {tuple(nxt)}"
    rep.constructed["multisets_checked"] = count
    rep.concl("all zeros in [-1, 0]", box is None, box)
    rep.concl("refined isolating intervals inside [-1, 0]", refined is None, refined)
    rep.concl("f_n ⪯ f_(n+e_j)", order is None, order)
    return rep


# -- identity suite ----------------------------------------------------------------

def _combinatorial_eulerian(k: int) -> Poly:
    # sum over S_k of q^(exc+1); the empty permutation contributes q
    return X if k == 0 else eulerian_poly(k)


def identity_suite(n_max: int = 10, jacobi_n_max: int = 8, points=None) -> CheckReport:
    """Exact checks of three classical identities.

    1. ``d_n(q) = sum_k (-1)^(n-k) C(n,k) A_k(q)/q`` as polynomials, with the
       combinatorial convention ``A_0(q) = q``.
    2. ``N_{n+1}(q) = q/(n+1) (1-q)^n P_n^{(1,1)}((1+q)/(1-q))`` at rational ``q != 1``.
    3. ``F_n(x) = x^(n+1)/(x+1) A_n((x+1)/x)`` for ``n >= 1`` at rational ``x not in {0, -1}``.
    """
    rep = CheckReport("identity_suite")
    q_pts = points or [Fraction(2), Fraction(1, 2), Fraction(-3), Fraction(5, 7), Fraction(-2, 5)]
    x_pts = points or [Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(7, 5), Fraction(-5, 2)]
    bad = None
    for n in range(n_max + 1):
        acc = ZERO
        for k in range(n + 1):
            term = _combinatorial_eulerian(k).coeffs[1:]
            acc = acc + Poly(term).scale((-1) ** (n - k) * math.comb(n, k))
        if acc != derangement_poly(n):
            bad = bad or f"n={n}"
    rep.concl("binomial inversion derangement/Eulerian", bad is None, bad)

    bad = None
    jac = orthogonal("jacobi", jacobi_n_max, alpha=1, beta=1)
    for n in range(jacobi_n_max + 1):
        for q in q_pts:
            if q == 1:
                continue
            rhs = q / (n + 1) * (1 - q) ** n * jac[n].eval((1 + q) / (1 - q))
            if narayana_poly(n + 1).eval(q) != rhs:
                bad = bad or f"n={n}, q={q}"
    rep.concl("Narayana-Jacobi identity", bad is None, bad)

    bad = None
    for n in range(1, n_max + 1):
        for x in x_pts:
            if x in (0, -1):
                continue
            rhs = x ** (n + 1) / (x + 1) * eulerian_poly(n).eval((x + 1) / x)
            if tanny_F(n).eval(x) != rhs:
                bad = bad or f"n={n}, x={x}"
    rep.concl("Tanny-Eulerian identity", bad is None, bad)
    rep.notes.append("Narayana-Jacobi identity checked with the index shift N_{n+1} = q * (...)_n")
    rep.notes.append("Tanny-Eulerian identity checked for n >= 1 (at n = 0 the right side is x/(x+1))")
    return rep


# -- registry used by the CLI --------------------------------------------------------

def _params_q(params) -> Fraction:
    return _rat(params.get("q", 1), "q")


FAMILIES: dict = {
    "stirling": (lambda n, p: stirling2_poly(n), "x", 0),
    "eulerian": (lambda n, p: eulerian_poly(n), "x", 0),
    "derangement": (lambda n, p: derangement_poly(n), "q", 0),
    "narayana": (lambda n, p: narayana_poly(n), "q", 1),
    "sulanke": (lambda n, p: sulanke_poly(int(p.get("alpha", 0)), n), "q", 2),
    "dowling_d": (lambda n, p: dowling_D(int(p.get("m", 1)), n), "x", 0),
    "dowling_f": (lambda n, p: dowling_F(int(p.get("m", 1)), n), "x", 0),
    "tanny": (lambda n, p: tanny_F(n), "x", 0),
    "q_eulerian": (lambda n, p: q_eulerian(n, _params_q(p)), "x", 0),
    "type_b": (lambda n, p: type_b_eulerian(n, _params_q(p)), "x", 0),
}
for _kind in ORTHOGONAL_KINDS:
    FAMILIES[_kind] = (
        (lambda kind: lambda n, p: orthogonal(kind, n, **p)[n])(_kind),
        "x",
        0,
    )


def family_sequence(name: str, n: int, params: Optional[dict] = None) -> list:
    """Members ``first..n`` of a registered family."""
    params = dict(params or {})
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    if name in ORTHOGONAL_KINDS:
        return orthogonal(name, n, **params)
    gen, _, first = FAMILIES[name]
    return [gen(k, params) for k in range(first, n + 1)]

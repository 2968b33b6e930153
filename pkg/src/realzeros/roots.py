"""Sturm-chain machinery: counting, isolating and refining real roots exactly.

Intervals follow the half-open ``(lo, hi]`` convention for counting.  An
isolated root is reported either as an exact rational (``lo == hi``) or as an
open interval ``(lo, hi)`` whose endpoints are not roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .poly import (
    Poly,
    divmod_poly,
    gcd,
    primitive_int_coeffs,
    sign,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "SturmChain",
    "RootInterval",
    "RootIsolation",
    "sturm_chain",
    "count_real_roots",
    "count_all_real_roots",
    "isolate_real_roots",
    "refine_root",
    "is_real_rooted",
    "is_pf",
    "sign_at_root",
    "root_bound",
    "nonnegative_on",
    "positive_on",
    "negative_witness",
    "gap_points",
    "approximate_roots",
    "simplest_rational",
]

Bound = Optional[Fraction]  # None stands for -inf / +inf


@dataclass(frozen=True)
class SturmChain:
    chain: tuple

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)


@dataclass(frozen=True)
class RootInterval:
    """One isolated real root: exact when ``lo == hi``, else inside the open ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)


@dataclass(frozen=True)
class RootIsolation:
    squarefree_part: Poly
    roots: tuple
    total_with_multiplicity: int

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]


# -- integer Sturm chains ------------------------------------------------------

def _int_sign_at(cs: list, r: Fraction) -> int:
    # sign of sum c_i n^i d^(k-i), which equals sign(p(n/d)) because d > 0
    n, d = r.numerator, r.denominator
    acc = 0
    dp = 1
    for c in reversed(cs):
        acc = acc * n + c * dp
        dp *= d
    return sign(acc)


def _int_sign_inf(cs: list, direction: int) -> int:
    s = sign(cs[-1])
    if direction < 0 and (len(cs) - 1) % 2:
        s = -s
    return s


def _prim(cs: list) -> list:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
        if g == 1:
            return cs
    return [c // g for c in cs] if g > 1 else cs


@lru_cache(maxsize=4096)
def _int_chain(p: Poly) -> tuple:
    """Integer Sturm chain of a squarefree polynomial, each entry scaled by a positive constant."""
    a = primitive_int_coeffs(p)
    if len(a) <= 1:
        return (tuple(a),)
    b = primitive_int_coeffs(p.derivative())
    chain = [a, b]
    while len(chain[-1]) > 1:
        prev, cur = chain[-2], chain[-1]
        db = len(cur) - 1
        lb = cur[-1]
        r = list(prev)
        mult_sign = 1
        while r and len(r) - 1 >= db:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            if lb < 0:
                mult_sign = -mult_sign
            for j in range(db + 1):
                r[shift + j] -= c * cur[j]
            while r and not r[-1]:
                r.pop()
        if not r:
            break
        # r = (positive or negative multiple) * rem; we need a positive multiple of -rem
        if mult_sign > 0:
            r = [-x for x in r]
        chain.append(_prim(r))
    return tuple(tuple(c) for c in chain)


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


class _Counter:
    """Sturm counting for one squarefree polynomial."""

    __slots__ = ("poly", "chain")

    def __init__(self, sqfree: Poly):
        self.poly = sqfree
        self.chain = _int_chain(sqfree)

    def V(self, r: Bound, direction: int = 0) -> int:
        if r is None:
            return _variations(_int_sign_inf(c, direction) for c in self.chain)
        return _variations(_int_sign_at(c, r) for c in self.chain)

    def count(self, lo: Bound, hi: Bound) -> int:
        """Distinct roots in ``(lo, hi]``; ``None`` bounds are infinite."""
        vlo = self.V(lo, -1)
        vhi = self.V(hi, +1)
        return vlo - vhi

    def sign_at(self, r: Fraction) -> int:
        return _int_sign_at(self.chain[0], r)


@lru_cache(maxsize=4096)
def _counter(sqfree: Poly) -> _Counter:
    return _Counter(sqfree)


@lru_cache(maxsize=4096)
def _sqfree(p: Poly) -> Poly:
    return squarefree_part(p)


@lru_cache(maxsize=4096)
def _decomp(p: Poly) -> tuple:
    return tuple(squarefree_decomposition(p))


def _frac(r) -> Fraction:
    return r if isinstance(r, Fraction) else Fraction(r)


# -- public operations ---------------------------------------------------------

def sturm_chain(p: Poly) -> SturmChain:
    """Classical Sturm chain ``p, p', -rem, ...`` (on the squarefree part if needed)."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    if p.degree > 0 and gcd(p, p.derivative()).degree > 0:
        p = squarefree_part(p)
    chain = [p]
    if p.degree == 0:
        return SturmChain(tuple(chain))
    chain.append(p.derivative())
    while chain[-1].degree > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(tuple(chain))


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (``None`` = infinite)."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if lo is not None and hi is not None and not _frac(lo) < _frac(hi):
        raise ValueError("need lo < hi")
    if p.degree == 0:
        return 0
    c = _counter(_sqfree(p))
    return c.count(None if lo is None else _frac(lo), None if hi is None else _frac(hi))


def count_all_real_roots(p: Poly) -> int:
    """Number of real roots counted with multiplicity."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    return sum(i * _counter(q).count(None, None) for i, q in enumerate(_decomp(p), start=1))


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound ``1 + max|c_i| / |lead|``: every root lies strictly inside."""
    lead = abs(p.lead)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead if p.degree > 0 else Fraction(1)


def simplest_rational(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational of smallest denominator in ``[lo, hi]`` (continued-fraction descent)."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational(-hi, -lo)
    fl = math.floor(lo)
    if fl == lo or fl + 1 <= hi:
        return Fraction(fl if fl == lo else fl + 1)
    return fl + 1 / simplest_rational(1 / (hi - fl), 1 / (lo - fl))


def _simplest_open(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational of smallest denominator strictly inside ``(lo, hi)``."""
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_open(-hi, -lo)
    fl = math.floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    # fl <= lo < hi <= fl + 1: recurse on the reciprocals of the fractional parts
    if lo == fl:
        return fl + Fraction(1, math.floor(1 / (hi - fl)) + 1)
    return fl + 1 / _simplest_open(1 / (hi - fl), 1 / (lo - fl))


def _snap(c: _Counter, lo: Fraction, hi: Fraction):
    """Exact root ``r`` if the simplest rational inside ``(lo, hi)`` is one, else ``None``."""
    if not lo < hi:
        return None
    r = _simplest_open(lo, hi)
    return r if c.sign_at(r) == 0 else None


def _finish(c: _Counter, lo: Fraction, hi: Fraction) -> tuple:
    """Shrink an isolating ``(lo, hi]`` until it is exact or has non-root endpoints."""
    if c.sign_at(hi) == 0:
        return hi, hi
    while True:
        r = _snap(c, lo, hi)
        if r is not None:
            return r, r
        if c.sign_at(lo) != 0:
            return lo, hi
        mid = (lo + hi) / 2
        if c.sign_at(mid) == 0:
            return mid, mid
        if c.count(lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def _isolate_sqfree(sq: Poly) -> list:
    if sq.degree < 1:
        return []
    if sq.degree == 1:
        r = -sq.coeffs[0] / sq.coeffs[1]
        return [(r, r)]
    c = _counter(sq)
    B = root_bound(sq)
    total = c.count(-B, B)
    out = []
    stack = [(-B, B, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_finish(c, lo, hi))
            continue
        mid = (lo + hi) / 2
        left = c.count(lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, n - left))
    out.sort()
    return out


def _root_in(c: _Counter, lo: Fraction, hi: Fraction) -> bool:
    if lo == hi:
        return c.sign_at(lo) == 0
    return c.count(lo, hi) - (1 if c.sign_at(hi) == 0 else 0) > 0


@lru_cache(maxsize=2048)
def isolate_real_roots(p: Poly) -> RootIsolation:
    """Disjoint sorted isolating intervals for the real roots of ``p``, with multiplicities."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sq = _sqfree(p) if p.degree > 0 else p
    raw = _isolate_sqfree(sq)
    decomp = _decomp(p)
    roots = []
    for lo, hi in raw:
        mult = 0
        for i, q in enumerate(decomp, start=1):
            if q.degree > 0 and _root_in(_counter(q), lo, hi):
                mult = i
                break
        roots.append(RootInterval(lo, hi, mult))
    return RootIsolation(sq, tuple(roots), sum(r.multiplicity for r in roots))


def _check_isolating(c: _Counter, lo: Fraction, hi: Fraction):
    if lo == hi:
        if c.sign_at(lo) != 0:
            raise ValueError("degenerate interval is not a root")
        return
    if not lo < hi or c.count(lo, hi) != 1:
        raise ValueError("interval does not isolate exactly one root")


def _as_bounds(interval) -> tuple:
    if isinstance(interval, RootInterval):
        return interval.lo, interval.hi, interval.multiplicity
    lo, hi = interval
    return _frac(lo), _frac(hi), 1


def refine_root(p: Poly, interval, width) -> RootInterval:
    """Bisect an isolating interval of ``p`` until its width is at most ``width``."""
    width = _frac(width)
    if width <= 0:
        raise ValueError("width must be positive")
    lo, hi, mult = _as_bounds(interval)
    c = _counter(_sqfree(p))
    _check_isolating(c, lo, hi)
    if lo != hi:
        lo, hi = _finish(c, lo, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = c.sign_at(mid)
        if s == 0:
            lo = hi = mid
            break
        if c.sign_at(lo) != s:
            hi = mid
        else:
            lo = mid
    if lo != hi:
        r = _snap(c, lo, hi)
        if r is not None:
            lo = hi = r
    return RootInterval(lo, hi, mult)


def is_real_rooted(p: Poly) -> bool:
    """Membership in RZ; zero and constants belong by convention."""
    if p.degree == float("-inf") or p.degree < 1:
        return True
    return count_all_real_roots(p) == p.degree


def is_pf(p: Poly) -> bool:
    """Membership in PF: nonnegative coefficients and only real zeros (0 included)."""
    if p.is_zero():
        return True
    return all(c >= 0 for c in p.coeffs) and is_real_rooted(p)


def sign_at_root(test: Poly, host: Poly, interval) -> int:
    """Exact sign of ``test(r)`` where ``r`` is the root of ``host`` isolated by ``interval``."""
    lo, hi, _ = _as_bounds(interval)
    hc = _counter(_sqfree(host))
    _check_isolating(hc, lo, hi)
    if test.is_zero():
        return 0
    if lo == hi:
        return test.sign_at(lo)
    if test.degree == 0:
        return sign(test.lead)
    g = gcd(test, host)
    if g.degree > 0 and _root_in(_counter(_sqfree(g)), lo, hi):
        return 0
    tc = _counter(_sqfree(test))
    while True:
        if tc.count(lo, hi) == 0 and tc.sign_at(lo) != 0:
            return test.sign_at(hi)
        mid = (lo + hi) / 2
        sm = hc.sign_at(mid)
        if sm == 0:
            return test.sign_at(mid)
        if hc.sign_at(lo) != sm:
            hi = mid
        else:
            lo = mid


# -- sign of a polynomial on an interval ---------------------------------------

def _odd_part(p: Poly) -> Poly:
    out = Poly((1,))
    for i, q in enumerate(_decomp(p), start=1):
        if i % 2:
            out = out * q
    return out


def _some_sign(p: Poly, lo: Bound, hi: Bound) -> int:
    """Sign of ``p`` at some non-root point of ``(lo, hi)``."""
    if hi is None:
        return p.sign_at_infinity(+1)
    if lo is None:
        return p.sign_at_infinity(-1)
    k = 1
    while True:
        step = (hi - lo) / (2**k)
        for j in range(1, 2**k, 2):
            s = p.sign_at(lo + j * step)
            if s:
                return s
        k += 1


def _bounds(lo, hi) -> tuple:
    lo = None if lo is None else _frac(lo)
    hi = None if hi is None else _frac(hi)
    if lo is not None and hi is not None and lo > hi:
        raise ValueError("need lo <= hi")
    return lo, hi


def nonnegative_on(p: Poly, lo=None, hi=None) -> bool:
    """Decide ``p(x) >= 0`` for every ``x`` in ``[lo, hi]`` (``None`` = infinite end)."""
    lo, hi = _bounds(lo, hi)
    if p.is_zero():
        return True
    if lo is not None and lo == hi:
        return p.sign_at(lo) >= 0
    if p.degree == 0:
        return p.lead > 0
    odd = _odd_part(p)
    if odd.degree > 0:
        c = _counter(odd)
        inside = c.count(lo, hi) - (1 if hi is not None and c.sign_at(hi) == 0 else 0)
        if inside > 0:
            return False
    return _some_sign(p, lo, hi) > 0


def positive_on(p: Poly, lo=None, hi=None) -> bool:
    """Decide ``p(x) > 0`` for every ``x`` in ``[lo, hi]``."""
    lo, hi = _bounds(lo, hi)
    if p.is_zero() or not nonnegative_on(p, lo, hi):
        return False
    if p.degree < 1:
        return True
    c = _counter(_sqfree(p))
    if lo is not None and c.sign_at(lo) == 0:
        return False
    return c.count(lo, hi) == 0


def gap_points(p: Poly) -> list:
    """One rational point strictly inside each gap between consecutive real roots of ``p``,
    plus one point below the smallest and one above the largest root."""
    iso = isolate_real_roots(p)
    if not iso.roots:
        return [Fraction(0)]
    pts = [iso.roots[0].lo - 1]
    for a, b in zip(iso.roots, iso.roots[1:]):
        pts.append((a.hi + b.lo) / 2)
    pts.append(iso.roots[-1].hi + 1)
    return pts


def negative_witness(p: Poly, lo=None, hi=None) -> Optional[Fraction]:
    """A rational point of ``[lo, hi]`` where ``p < 0``, or ``None`` if there is none."""
    lo, hi = _bounds(lo, hi)
    if p.is_zero():
        return None
    cands = []
    if lo is not None:
        cands.append(lo)
    if hi is not None:
        cands.append(hi)
    cands.extend(gap_points(p))
    if lo is not None and hi is not None:
        cands.append((lo + hi) / 2)
    for x in cands:
        if (lo is None or x >= lo) and (hi is None or x <= hi) and p.sign_at(x) < 0:
            return x
    if nonnegative_on(p, lo, hi):
        return None
    # a negative stretch too short for the sampled gaps; walk dyadic points
    a = lo if lo is not None else (hi - 1 - root_bound(p) if hi is not None else -root_bound(p))
    b = hi if hi is not None else a + 2 * root_bound(p) + 2
    k = 1
    while True:
        step = (b - a) / 2**k
        for j in range(1, 2**k, 2):
            x = a + j * step
            if p.sign_at(x) < 0:
                return x
        k += 1


def approximate_roots(p: Poly, width=Fraction(1, 10**6)) -> list:
    """Refined root intervals (for reporting) with width at most ``width``."""
    iso = isolate_real_roots(p)
    return [refine_root(p, r, width) for r in iso.roots]

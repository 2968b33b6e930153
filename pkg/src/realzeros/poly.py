"""Exact univariate polynomials over the rationals.

A :class:`Poly` stores its coefficients as a tuple of :class:`fractions.Fraction`
in ascending order of degree (index = degree).  The tuple is kept canonical: the
highest-index entry is nonzero, and the zero polynomial is the empty tuple.

Text syntax (parsed by :func:`parse` and produced by ``str``)::

    -1/2*x^3 + 2*x - 7

Whitespace is ignored, ``q`` is accepted as an alias for ``x`` and ``**`` as an
alias for ``^``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Union

__all__ = [
    "Poly",
    "NEG_INF",
    "X",
    "ONE",
    "ZERO",
    "parse",
    "sign",
    "gcd",
    "exact_divide",
    "divmod_poly",
    "squarefree_decomposition",
    "squarefree_part",
    "primitive_int_coeffs",
    "reflect_standardize",
    "is_standard",
]

Rational = Union[int, Fraction]

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""


def sign(r) -> int:
    """Sign of a rational as -1, 0 or +1."""
    return (r > 0) - (r < 0)


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return Fraction(c)


class Poly:
    """Immutable polynomial with arbitrary-precision rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_fraction(c) for c in coeffs]
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        self.coeffs: tuple = tuple(cs[:n])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs must already be canonical Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-_to_fraction(r), 1))
        return p

    # -- basic queries -------------------------------------------------
    @property
    def degree(self):
        """Degree; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- ring operations -----------------------------------------------
    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, r) -> "Poly":
        r = _to_fraction(r)
        if not r:
            return ZERO
        return Poly._raw(tuple(c * r for c in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly._raw((Fraction(0),) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reflect(self) -> "Poly":
        """``p(-x)``."""
        return Poly._raw(tuple(-c if i & 1 else c for i, c in enumerate(self.coeffs)))

    def compose(self, other: "Poly") -> "Poly":
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * other + Poly.constant(c)
        return out

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead)

    # -- evaluation ----------------------------------------------------
    def __call__(self, r) -> Fraction:
        return self.eval(r)

    def eval(self, r) -> Fraction:
        r = _to_fraction(r)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def sign_at(self, r) -> int:
        return sign(self.eval(r))

    def sign_at_infinity(self, direction: int = +1) -> int:
        """Sign for sufficiently large ``x`` (``direction=+1``) or small ``x`` (``-1``)."""
        if not self.coeffs:
            return 0
        s = sign(self.lead)
        if direction < 0 and self.degree % 2:
            s = -s
        return s

    def is_standard(self) -> bool:
        return not self.coeffs or self.lead > 0

    # -- text ------------------------------------------------------------
    def to_text(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = _fmt_rational(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


def _fmt_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _as_poly(obj) -> Optional[Poly]:
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Poly.constant(obj)
    return None


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


# -- parsing ------------------------------------------------------------------

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<coef>\d+(?:/\d+)?)
        (?:\*?(?P<var1>[xq])(?:(?:\^|\*\*)(?P<exp1>\d+))?)?
      |
        (?P<var2>[xq])(?:(?:\^|\*\*)(?P<exp2>\d+))?
    )
    """,
    re.VERBOSE,
)


def parse(text: str) -> Poly:
    """Parse the polynomial text syntax; raises ``ValueError`` on bad input."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    coeffs: dict = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse polynomial text at {s[pos:]!r}")
        first = False
        sgn = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = Fraction(m.group("coef"))
            if m.group("var1"):
                k = int(m.group("exp1") or 1)
            else:
                k = 0
        else:
            c = Fraction(1)
            k = int(m.group("exp2") or 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + sgn * c
        pos = m.end()
    n = max(coeffs) + 1
    return Poly(coeffs.get(k, 0) for k in range(n))


# -- division and gcd -----------------------------------------------------------

def divmod_poly(p: Poly, q: Poly):
    """Euclidean division ``p = quot*q + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.lead
    if len(rem) - 1 < dq:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dq)
    qc = q.coeffs
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if not c:
            continue
        t = c / lead
        quot[k - dq] = t
        base = k - dq
        for j in range(dq + 1):
            rem[base + j] -= t * qc[j]
    return Poly(quot), Poly(rem[:dq])


def exact_divide(p: Poly, q: Poly) -> Optional[Poly]:
    """Quotient ``p / q`` if ``q`` divides ``p`` exactly, else ``None``."""
    quot, rem = divmod_poly(p, q)
    return quot if rem.is_zero() else None


def primitive_int_coeffs(p: Poly) -> list:
    """Integer coefficient list of ``c*p`` for the unique ``c > 0`` making it primitive."""
    if p.is_zero():
        return []
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0)
    return [c // g for c in ints]


def _int_prim(cs: list) -> list:
    g = reduce(math.gcd, cs, 0)
    if g > 1:
        return [c // g for c in cs]
    return cs


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a.pop()
        e -= 1
        while a and not a[-1]:
            a.pop()
    # account for skipped steps so the multiplier is exactly lc(b)^(da-db+1)
    if e > 0 and a:
        m = lb**e
        a = [x * m for x in a]
    return a


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a, b = primitive_int_coeffs(p), primitive_int_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        while r and not r[-1]:
            r.pop()
        a, b = b, _int_prim(r) if r else []
    return Poly(a).monic()


def squarefree_decomposition(p: Poly) -> list:
    """Yun's algorithm: monic pairwise-coprime squarefree ``[q1, q2, ...]`` with
    ``p = lead * q1 * q2^2 * q3^3 ...``.  Trailing unit factors are dropped."""
    if p.degree == NEG_INF or p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a0 = gcd(p, dp)
    b = exact_divide(p, a0)
    c = exact_divide(dp, a0)
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        a = gcd(b, d)
        out.append(a)
        b = exact_divide(b, a)
        c = exact_divide(d, a)
        d = c - b.derivative()
    while out and out[-1].degree == 0:
        out.pop()
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return ONE
    return exact_divide(p, gcd(p, p.derivative())).monic()


def is_standard(p: Poly) -> bool:
    """Zero, or positive leading coefficient."""
    return p.is_standard()


def reflect_standardize(p: Poly) -> Poly:
    """``(-1)**deg(p) * p(-x)``."""
    if p.is_zero():
        raise ValueError("reflect_standardize needs a nonzero polynomial")
    r = p.reflect()
    return -r if p.degree % 2 else r

"""Coefficient-sequence consequences of real-rootedness.

For a real-rooted polynomial with positive coefficients ``a_0..a_n`` the
sequence satisfies Newton's inequalities

    a_i^2 >= a_{i-1} a_{i+1} (1 + 1/i) (1 + 1/(n-i)),

hence is log-concave and unimodal with at most two modes, and every mode lies
in ``[floor(P'(1)/P(1)), ceil(P'(1)/P(1))]``.

A factor ``x^k`` is stripped first, so ``x + 4x^2 + x^3`` is profiled as
``1, 4, 1``.  Zeros inside the remaining support make the Newton and Darroch
clauses inapplicable; they are reported as ``None``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import Poly

__all__ = ["newton_check", "SequenceProfile", "profile", "strip_low_zeros"]


def strip_low_zeros(p: Poly) -> list:
    cs = list(p.coeffs)
    k = 0
    while k < len(cs) and not cs[k]:
        k += 1
    return cs[k:]


def _newton(cs: list) -> list:
    n = len(cs) - 1
    return [
        cs[i] ** 2 - cs[i - 1] * cs[i + 1] * (1 + Fraction(1, i)) * (1 + Fraction(1, n - i))
        for i in range(1, n)
    ]


def newton_check(p: Poly) -> list:
    """Newton margins for ``1 <= i <= n-1`` (after stripping ``x^k``).

    Raises ``ValueError`` unless every remaining coefficient is positive.
    """
    cs = strip_low_zeros(p)
    if not cs or any(c <= 0 for c in cs):
        raise ValueError("Newton's inequalities need strictly positive coefficients")
    return _newton(cs)


@dataclass(frozen=True)
class SequenceProfile:
    coeffs: tuple
    unimodal: bool
    log_concave: bool
    modes: tuple
    newton_margins: Optional[tuple]
    darroch_interval: Optional[tuple]

    @property
    def newton_ok(self) -> Optional[bool]:
        return None if self.newton_margins is None else all(m >= 0 for m in self.newton_margins)

    @property
    def modes_in_darroch(self) -> Optional[bool]:
        if self.darroch_interval is None:
            return None
        lo, hi = self.darroch_interval
        return all(lo <= m <= hi for m in self.modes)

    def to_dict(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
            "modes": list(self.modes),
            "newton_margins": None if self.newton_margins is None else [str(m) for m in self.newton_margins],
            "newton_ok": self.newton_ok,
            "darroch_interval": None if self.darroch_interval is None else list(self.darroch_interval),
            "modes_in_darroch": self.modes_in_darroch,
        }


def _unimodal(cs: list) -> bool:
    i, n = 0, len(cs)
    while i + 1 < n and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < n and cs[i] >= cs[i + 1]:
        i += 1
    return i >= n - 1


def profile(p: Poly) -> SequenceProfile:
    """Profile of the coefficient sequence of ``p`` with any ``x^k`` factor removed."""
    cs = strip_low_zeros(p)
    positive = bool(cs) and all(c > 0 for c in cs)
    nonneg = all(c >= 0 for c in cs)
    top = max(cs) if cs else None
    modes = tuple(i for i, c in enumerate(cs) if c == top) if positive else ()
    log_concave = all(cs[i] ** 2 >= cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))
    margins = tuple(_newton(cs)) if positive else None
    darroch = None
    if positive:
        q = Poly(cs)
        ratio = q.derivative().eval(1) / q.eval(1)
        darroch = (math.floor(ratio), math.ceil(ratio))
    return SequenceProfile(
        tuple(cs),
        _unimodal(cs) if nonneg else False,
        log_concave,
        modes,
        margins,
        darroch,
    )

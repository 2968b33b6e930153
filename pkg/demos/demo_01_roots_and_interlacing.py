"""
Exact root isolation and zero interlacing
=========================================

Isolate the real zeros of a rational polynomial with Sturm chains, refine
them to a chosen width, and compare the zero orders of two polynomials.
"""

from fractions import Fraction

from realzeros.interlace import compare_zero_orders, is_sturm_sequence, prec
from realzeros.poly import parse
from realzeros.roots import approximate_roots, count_real_roots, isolate_real_roots, sturm_chain

# a cubic with three irrational zeros
p = parse("x^3 - 3x + 1")
print("p =", p)
for q in sturm_chain(p):
    print("  chain:", q)

# Sturm counts on half-open intervals (lo, hi]
print("zeros in (0, 1]:", count_real_roots(p, 0, 1))
print("zeros overall:", count_real_roots(p))

# isolating intervals, then refinement to width 1e-8
for r in isolate_real_roots(p).roots:
    print("  isolated in", (str(r.lo), str(r.hi)))
for r in approximate_roots(p, Fraction(1, 10**8)):
    print("  refined: %.8f" % float(r.midpoint))

# rational zeros are reported exactly
for r in isolate_real_roots(parse("6x^3 + x^2 - 2x")).roots:
    print("  exact zero:", r.lo, r.exact)

# the derivative strictly interlaces p (Rolle)
print("p' strictly interlaces p:", prec(p.derivative(), p))

# two quadratics whose zeros alternate: 1 < 2 < 3 < 4
f = parse("x^2 - 6x + 8")
g = parse("x^2 - 4x + 3")
cert = compare_zero_orders(f, g)
print("relation of g to f:", cert.relation)

# a three-term recurrence giving a Sturm sequence
seq = [parse("1"), parse("x"), parse("x^2 - 1"), parse("x^3 - 2x")]
print("Sturm sequence:", is_sturm_sequence(seq))

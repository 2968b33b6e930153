"""
Combinatorial polynomial families
=================================

Generate Eulerian, derangement and Narayana polynomials, check them against
brute-force enumeration, and look at a pair that fails to interlace.
"""

from realzeros import families
from realzeros.diagnostics import profile
from realzeros.interlace import compare_zero_orders, is_generalized_sturm_sequence
from realzeros.poly import Poly, parse
from realzeros.roots import is_real_rooted

# Eulerian polynomials from their recurrence, and from counting excedances
for n in range(1, 6):
    a = families.eulerian_poly(n)
    print("A_%d =" % n, a, " enumeration:", families.enumerate_oracle("eulerian_exc", n))

# derangement polynomials: real-rooted, symmetric, and a generalized Sturm sequence
d = [families.derangement_poly(n) for n in range(12)]
print("d_6 =", d[6].to_text("q"))
print("all real-rooted:", all(is_real_rooted(p) for p in d))
print("generalized Sturm sequence:", is_generalized_sturm_sequence(d))

# Narayana polynomials evaluate to Catalan numbers at 1 and Schroeder numbers at 2
for n in range(1, 7):
    N = families.narayana_poly(n)
    print("N_%d(1) = %s, N_%d(2) = %s" % (n, N.eval(1), n, N.eval(2)))

# a natural-looking sequence whose adjacent members do not interlace
f2 = Poly([0, 2]) * parse("x + 1")
f3 = Poly([0, 2]) * parse("5x^2 + 5x + 1")
cert = compare_zero_orders(f3, f2)
print("f2 vs f3:", cert.relation, "--", cert.witness)

# coefficient profile of a real-rooted polynomial
pr = profile(families.eulerian_poly(7))
print("A_7 modes:", pr.modes, "Darroch interval:", pr.darroch_interval, "Newton ok:", pr.newton_ok)

# the three classical identities, checked exactly
print(families.identity_suite().to_dict()["conclusion_pass"])

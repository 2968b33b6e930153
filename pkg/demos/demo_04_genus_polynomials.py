"""
Genus polynomials of linear graph families
==========================================

Iterate the transfer matrices of eight linear families, factor two of them
into nice matrices, and exhibit the family whose genus polynomial has
non-real zeros.
"""

from functools import reduce

from realzeros import genus
from realzeros.roots import approximate_roots, count_real_roots

# families 1-6: every genus polynomial up to k = 10 has real, negative zeros
for i in range(1, 7):
    rep = genus.verify_linear_family(i, 10)
    print("family %d (%s): %s" % (i, genus.FAMILY_NAMES[i], rep.conclusion_verdict))

# nice matrices keep real-rootedness under iteration
M4, _ = genus.builtin_family(4)
print("M4 nice:", genus.is_nice(M4).verdict, " det =", M4.det())

# families 5 and 6 are products of nice factors
for i in (5, 6):
    M, _ = genus.builtin_family(i)
    factors = genus.decompose_nice(M)
    print("M%d =" % i, " * ".join(str(F) for F in factors))
    print("   product exact:", reduce(genus.mat_mul, factors) == M)

# a matrix that is not nice: det < 0 at x = -1
bad = genus.PolyMatrix.of([["3x", 3], ["2x", "3x+1000"]])
print("witness:", genus.is_nice(bad).failure_witness)

# family 7: the first genus polynomial already has two non-real zeros
u = genus.genus_sequence(7, 1)[0]
print("u =", u)
print("degree", u.degree, "but only", count_real_roots(u), "real zeros:",
      ["%.7f" % float(r.midpoint) for r in approximate_roots(u)])

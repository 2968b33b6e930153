"""
Certifying recurrence steps
===========================

Build ``F = a f + b g`` from an interlacing pair, let the certifier decide each
hypothesis exactly, and run the randomized soundness harness.
"""

from realzeros import criteria
from realzeros.poly import parse

# one step of a recurrence: f = x^2 - 1, g = x, F = x f - g
rep = criteria.check_thm_ffg(parse("x^2 - 1"), parse("x"), parse("x"), parse("-1"))
for c in rep.hypotheses + rep.conclusions:
    print("  %-40s %s" % (c.name, c.passed))
print("F =", rep.constructed["F"])

# a positive b breaks a hypothesis; the report names the offending zero
rep = criteria.check_thm_ffg(parse("x^2 - 1"), parse("x"), parse("0"), parse("1"))
print("failed:", [(c.name, c.witness) for c in rep.hypotheses if not c.passed])

# whole sequences from a recurrence with coefficients depending on n
a, b, c, seeds = criteria.PPP_SPECS["derangement"]
rep = criteria.check_cor_ppp(a, b, c, seeds, 12)
print("derangement recurrence certified:", rep.supported, rep.conclusion_verdict)

# randomized soundness harness: no instance may pass every hypothesis and fail the conclusion
res = criteria.run_harness("thm_wy", instances=200, seed=1)
print(res.to_dict())

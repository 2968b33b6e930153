"""
Matching polynomials and rook placements
========================================

Compute weighted matching polynomials, confirm real zeros and vertex-deletion
interlacing, and read rook numbers off a board.
"""

from fractions import Fraction

from realzeros import graphs
from realzeros.roots import approximate_roots, is_pf

# the 5-cycle with one heavy edge
g = graphs.GraphSpec(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4, Fraction(7, 2))))
print("matching counts:", [str(c) for c in graphs.matching_counts(g)])
Q = graphs.matching_polynomial(g)
print("Q(G, x) =", Q)
print("zeros:", ["%.5f" % float(r.midpoint) for r in approximate_roots(Q)])

# deleting any vertex gives a polynomial whose zeros interlace those of Q
rep = graphs.verify_heilmann_lieb(g)
print("real zeros and interlacing:", rep.conclusion_verdict)

# every connected graph on at most five vertices
atlas = graphs.small_connected_graphs(5)
print(len(atlas), "graphs, all pass:", all(graphs.verify_heilmann_lieb(h).conclusion_verdict for h in atlas))

# rook polynomial of a staircase board
cells = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
R = graphs.rook_polynomial(cells)
print("rook polynomial:", R, " PF:", is_pf(R))

"""
Mixed-integer hull of a small triangle
======================================

A triangle in R^1 x R^1 whose first coordinate must be an integer.  We
compute its mixed-integer hull three ways and look at the pieces each
route produces along the way.
"""

from fractions import Fraction as F

from mixhull import MixedSpace, VRep, vrep_to_hrep
from mixhull.errors import FiberEmpty
from mixhull.formats import format_instance, format_point
from mixhull.mihull import (
    candidate_subsets,
    compute_scale_factor,
    fiber_vertices_in_simplex,
    mih_from_hrep,
    mih_from_vrep,
    mih_oracle,
)

P = VRep(MixedSpace(1, 1), [(F(1, 2), 0), (F(5, 2), 0), (F(3, 2), 2)])
print(format_instance(P))

# The same polytope as inequalities
H = vrep_to_hrep(P)
print(format_instance(H))

# Only x = 1 and x = 2 are integral inside the triangle.  The slices there
# are vertical segments, and the hull of those segments is the answer.
for S in candidate_subsets(P):
    for x in (1, 2):
        try:
            pts = fiber_vertices_in_simplex(S, (x,))
        except FiberEmpty:
            continue
        print("subset", [format_point(s) for s in S], "x =", x, "->", [format_point(p) for p in pts])

# Route 1: from the vertices
print("from vertices:", [format_point(z) for z in mih_from_vrep(P).vertices])

# Route 2: from the inequalities, by stretching y until every fiber vertex
# becomes integral
rep = compute_scale_factor(H)
print("scale factor t =", rep.t, "from", rep.bases_considered, "nonsingular bases")
print("from inequalities:", [format_point(z) for z in mih_from_hrep(H).vertices])

# Route 3: brute force over every integral x
print("oracle:", [format_point(z) for z in mih_oracle(P).vertices])

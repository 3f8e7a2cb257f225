"""
Unbounded polyhedra
===================

An unbounded polyhedron is cut down to a polytope Q whose mixed-integer
hull, plus the recession cone, gives the mixed-integer hull of the
original set.
"""

from fractions import Fraction as F

from mixhull import MixedSpace, VRep, mixed_integer_hull, reduce_to_polytope, vrep_to_hrep
from mixhull.formats import format_instance

# conv{(1/2, 1/3)} + cone{(2, 1)}: a single half-line
P = VRep(MixedSpace(1, 1), [(F(1, 2), F(1, 3))], [(2, 1)])

Q, rays = reduce_to_polytope(P)
print("reduced polytope:")
print(format_instance(Q))

hull = mixed_integer_hull(P)
print("mixed-integer hull:")
print(format_instance(VRep(P.space, hull.vertices, hull.rays)))

# The inequality form goes through a box cut instead and lands on the same answer
other = mixed_integer_hull(vrep_to_hrep(P))
print("same from inequalities:", other.vertices == hull.vertices and other.rays == hull.rays)

"""
Minimizing a concave function over mixed-integer points
=======================================================

A concave function attains its minimum at a vertex, so once the vertices
of the mixed-integer hull are known the problem is a finite scan.
"""

from fractions import Fraction as F

from mixhull import PiecewiseAffineConcave, minimize_over_mih
from mixhull.formats import format_point
from mixhull.generators import random_vrep
from mixhull.mihull import mih_from_vrep
from mixhull.polyrep import MixedSpace, VRep

P = VRep(MixedSpace(1, 1), [(F(1, 2), 0), (F(5, 2), 0), (F(3, 2), 2)])

# f(x, y) = min(y, 4 - y): a tent, lowest at the top and bottom edges
tent = PiecewiseAffineConcave([((0, 1), 0), ((0, -1), 4)])
point, value = minimize_over_mih(P, tent)
print(f"min = {value} at {format_point(point)}")

# (2, 0) ties with (1, 0); the lexicographically smaller point is reported
for z in mih_from_vrep(P).vertices:
    print("  ", format_point(z), tent(z))

# Any callable returning exact rationals works too
point, value = minimize_over_mih(P, lambda z: -(z[0] - 2) ** 2 - z[1] ** 2)
print(f"min of a concave quadratic = {value} at {format_point(point)}")

# A bigger random instance
V = random_vrep(17, n=2, d=2, npoints=7)
f = PiecewiseAffineConcave([((1, -1, 0, 2), 0), ((-2, 0, 1, 0), 3), ((0, 1, 1, 1), F(-1, 2))])
hull = mih_from_vrep(V)
point, value = minimize_over_mih(V, f, hull=hull)
print(f"{len(hull)} hull vertices, min = {value} at {format_point(point)}")

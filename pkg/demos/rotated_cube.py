"""
A rotated box that loses every vertex
=====================================

The box prod [-b_i, b_i] is mapped by a matrix R whose first row is
(1/2, ..., 1/2).  With odd b_i every vertex lands on a
half-integer in the first coordinate, so none of them survives in the
mixed-integer hull.
"""

import time

from mixhull.generators import gen_example1
from mixhull.lp import separating_hyperplane
from mixhull.mihull import mih_from_hrep
from mixhull.formats import format_point

h, v = gen_example1(2)  # b = (3, 5, 9)
print("vertices of P:")
for p in v.points:
    print("  ", format_point(p))

start = time.perf_counter()
hull = mih_from_hrep(h)
print(f"P_MI has {len(hull)} vertices ({time.perf_counter() - start:.2f}s, t = {hull.scale.t})")
print("vertices of P kept:", set(v.points) & set(hull.vertices) or "none")

# Each old vertex can be cut off by a single inequality
for p in v.points:
    c, delta = separating_hyperplane(p, hull.vertices)
    print(format_point(p), "separated by", format_point(c), "with margin", delta)

# With b_i = 3 everywhere the first coordinate (+-3 +-3 ...)/2 is fractional
# only for an odd number of terms; at d + 1 = 4 the box keeps its vertices
for d in (1, 2, 3):
    h, v = gen_example1(d, remark1=True)
    print(f"d + 1 = {d + 1}: |verts(P)| = {len(v.points)}, |verts(P_MI)| = {len(mih_from_hrep(h))}")

"""Convex hulls of finite point sets and Delaunay triangulations.

The Delaunay triangulation is read off the lower hull of the points lifted
onto the paraboloid ``(v, |v|^2)``.  Lower facets are found by trying every
(k+1)-subset in an affine chart of the input; co-spherical facets, which
are not simplices, are split by pulling from their lexicographically
smallest vertex.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import EmptyInput, TooFewPoints
from .lp import point_in_hull
from .polyrep import affine_dim, polytope_facet_sets
from .ratcore import canonical_sorted, mat_det, mat_solve, rref, vec, vsub


@dataclass(frozen=True)
class Triangulation:
    points: tuple
    cells: tuple

    @property
    def dim(self):
        return len(self.cells[0]) - 1 if self.cells else -1

    def cell_points(self, cell):
        return [self.points[i] for i in cell]


def hull_vertices(points):
    """Extreme points of ``conv(points)`` in canonical order.

    Points found to be redundant are dropped from the generator list for
    later tests; the hull does not change, so the answer is unaffected.
    """
    pts = canonical_sorted(vec(p) for p in points)
    if not pts:
        raise EmptyInput("hull of no points")
    if len(pts) <= 2:
        return pts
    alive = list(pts)
    for p in pts:
        others = [q for q in alive if q != p]
        if point_in_hull(p, others):
            alive = others
    return alive


def lift_points(points):
    return [vec(p) + (sum((q * q for q in vec(p)), Fraction(0)),) for p in points]


def _chart(points):
    """Coordinates of ``points`` in a subset of axes injective on their affine hull."""
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    if not diffs:
        return [()] * len(points)
    _, J = rref(diffs)
    return [tuple(p[j] for j in J) for p in points]


def pulling_triangulation(points, indices=None):
    """Pulling triangulation of a point set in convex position.

    Each step cones the lexicographically smallest vertex over the
    triangulated facets that avoid it.
    """
    if indices is None:
        indices = list(range(len(points)))
    sub = [points[i] for i in indices]
    k = affine_dim(sub)
    if len(indices) == k + 1:
        return [tuple(sorted(indices))]
    apex = min(indices, key=lambda i: points[i])
    cells = []
    for facet in polytope_facet_sets(sub):
        glob = [indices[t] for t in facet]
        if apex in glob:
            continue
        for cell in pulling_triangulation(points, glob):
            cells.append(tuple(sorted((apex,) + cell)))
    return sorted(cells)


def delaunay_triangulate(points):
    """Delaunay triangulation of the distinct input points.

    Cells index into ``Triangulation.points``, the canonical-sorted,
    deduplicated input.  Lower-dimensional inputs are triangulated inside
    their affine hull.
    """
    pts = canonical_sorted(vec(p) for p in points)
    if not pts:
        raise TooFewPoints("Delaunay triangulation of no points")
    k = affine_dim(pts)
    if k == 0:
        return Triangulation(tuple(pts), ((0,),))
    chart = _chart(pts)
    # squared norm in the original coordinates: Delaunay w.r.t. the true metric
    heights = [sum((q * q for q in p), Fraction(0)) for p in pts]
    lower = set()
    one = Fraction(1)
    for S in combinations(range(len(pts)), k + 1):
        M = [(one,) + chart[i] for i in S]
        if mat_det(M) == 0:
            continue
        coef = mat_solve(M, [heights[i] for i in S])
        tight = []
        below = False
        for i, c in enumerate(chart):
            gap = heights[i] - coef[0] - sum((a * q for a, q in zip(coef[1:], c)), Fraction(0))
            if gap < 0:
                below = True
                break
            if gap == 0:
                tight.append(i)
        if not below:
            lower.add(tuple(tight))
    cells = set()
    for face in lower:
        if len(face) == k + 1:
            cells.add(face)
        else:
            cells.update(pulling_triangulation(pts, list(face)))
    return Triangulation(tuple(pts), tuple(sorted(cells)))


def simplex_volume(points):
    """k-dimensional volume of a full-dimensional simplex given in a chart."""
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    return abs(mat_det(diffs)) / factorial(len(diffs))


def triangulation_volume(tri):
    chart = _chart(list(tri.points))
    return sum((simplex_volume([chart[i] for i in c]) for c in tri.cells), Fraction(0))


def circumsphere(simplex):
    """Center and squared radius of the sphere through a full-dimensional simplex."""
    simplex = [vec(p) for p in simplex]
    p0 = simplex[0]
    n0 = sum(q * q for q in p0)
    M = [tuple(2 * (a - b) for a, b in zip(p, p0)) for p in simplex[1:]]
    rhs = [sum(q * q for q in p) - n0 for p in simplex[1:]]
    center = mat_solve(M, rhs)
    r2 = sum((a - b) ** 2 for a, b in zip(p0, center))
    return center, r2


def in_circumsphere(simplex, q):
    """True iff ``q`` lies strictly inside the circumsphere of ``simplex``."""
    center, r2 = circumsphere(simplex)
    return sum((a - b) ** 2 for a, b in zip(vec(q), center)) < r2


def covers(tri, q):
    """True iff ``q`` lies in some cell of the triangulation."""
    return any(point_in_hull(q, tri.cell_points(c)) for c in tri.cells)

"""Integer hulls of polytopes.

Two routes to ``conv(P ∩ Z^n)``: a brute-force oracle that enumerates the
lattice points of an inequality description, and a triangulation route for
vertex-described polytopes that hulls each Delaunay cell separately and
merges the results.  Both enumerate lattice points inside exact LP bounds,
so neither runs in time polynomial in the encoding size.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor

from .errors import DimensionMismatch, EmptyInput, UnboundedInput
from .hull import delaunay_triangulate, hull_vertices
from .lp import coordinate_bounds, is_bounded
from .polyrep import MixedSpace, VRep, vrep_to_hrep
from .ratcore import encoding_size, vec


@dataclass(frozen=True)
class IntegerHull:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    @property
    def empty(self):
        return not self.vertices


def lattice_points(h):
    """All integer points of a bounded, purely integer H-representation."""
    if h.space.d != 0:
        raise DimensionMismatch("lattice_points needs a pure integer space (d = 0)")
    if not is_bounded(h):
        raise UnboundedInput("cannot enumerate lattice points of an unbounded set")
    bounds = coordinate_bounds(h)
    ranges = [range(ceil(lo), floor(hi) + 1) for lo, hi in bounds]
    rows = h.integer_rows()
    out = []
    for z in product(*ranges):
        if all(sum(a * q for a, q in zip(r, z)) <= beta for r, beta in rows):
            out.append(tuple(Fraction(q) for q in z))
    return out


def integer_hull_oracle(h):
    pts = lattice_points(h)
    return IntegerHull(tuple(hull_vertices(pts)) if pts else ())


def cell_integer_hulls(V):
    """Per-cell integer hulls of the Delaunay triangulation of ``V``.

    Returns a list of ``(cell_points, IntegerHull)`` pairs; the union of the
    hull vertices is a superset of the vertices of ``conv(V)_I``.
    """
    V = [vec(v) for v in V]
    if not V:
        raise EmptyInput("integer hull of no points")
    n = len(V[0])
    tri = delaunay_triangulate(V)
    space = MixedSpace(n, 0)
    out = []
    for cell in tri.cells:
        cell_pts = tri.cell_points(cell)
        h = vrep_to_hrep(VRep(space, cell_pts))
        out.append((cell_pts, integer_hull_oracle(h)))
    return out


def integer_hull_from_vertices(V):
    """Vertices of the integer hull of ``conv(V)`` via a Delaunay triangulation."""
    pool = set()
    for _, cell_hull in cell_integer_hulls(V):
        pool.update(cell_hull.vertices)
    if not pool:
        return IntegerHull(())
    return IntegerHull(tuple(hull_vertices(pool)))


def integer_hull_of_points(V):
    """Oracle integer hull of ``conv(V)``: convert to inequalities, enumerate."""
    V = [vec(v) for v in V]
    if not V:
        raise EmptyInput("integer hull of no points")
    return integer_hull_oracle(vrep_to_hrep(VRep(MixedSpace(len(V[0]), 0), V)))


def max_encoding_size(V):
    return max(encoding_size(vec(v)) for v in V)


def intvertex_bound(n, nu, num_points, simplex=False):
    """Upper bound on the vertex count of the integer hull of ``conv(V)``.

    With ``phi = 4 n^2 nu`` the general bound is
    ``(1/3) 12^n n^(3n-2) phi^(n-1) |V|^(n+1)``; for a simplex
    (``|V| = n + 1``) it is ``(2/3) 24^n n^(3n-2) phi^(n-1)``.
    """
    if n < 1:
        raise ValueError("the bound needs n >= 1")
    phi = 4 * n * n * nu
    common = Fraction(n) ** (3 * n - 2) * Fraction(phi) ** (n - 1)
    if simplex:
        return Fraction(2, 3) * Fraction(24) ** n * common
    return Fraction(1, 3) * Fraction(12) ** n * common * Fraction(num_points) ** (n + 1)


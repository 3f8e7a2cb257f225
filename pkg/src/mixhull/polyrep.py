"""Polyhedra over a mixed space R^n x R^d.

The first ``n`` coordinates form the integer block x, the remaining ``d``
the continuous block y.  :class:`HRep` stores ``A z <= b`` and
:class:`VRep` stores ``conv(points) + cone(rays)``.  Conversions work by
exhaustive basis enumeration, which is exact and cheap in the small fixed
dimensions this package targets.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import (
    DimensionMismatch,
    EmptyInput,
    EmptyPolyhedron,
    ImplicitLineality,
    ZeroRay,
)
from .ratcore import (
    canonical_sorted,
    clear_denominators,
    int_det,
    int_rank,
    mat,
    mat_rank,
    nullspace,
    primitive_integer,
    rref,
    vec,
    vsub,
)


@dataclass(frozen=True)
class MixedSpace:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 0 or self.d < 0 or self.n + self.d < 1:
            raise DimensionMismatch(f"invalid mixed space n={self.n} d={self.d}")

    @property
    def dim(self):
        return self.n + self.d


@dataclass(frozen=True)
class HRep:
    """``{z in R^(n+d) : A z <= b}``."""

    space: MixedSpace
    A: tuple
    b: tuple

    def __post_init__(self):
        A = mat(self.A)
        b = vec(self.b)
        if len(A) != len(b):
            raise DimensionMismatch("A and b have different row counts")
        if any(len(row) != self.space.dim for row in A):
            raise DimensionMismatch("row length differs from n + d")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self):
        return len(self.A)

    def contains(self, z):
        return all(sum(a * c for a, c in zip(row, z)) <= rhs for row, rhs in zip(self.A, self.b))

    def integer_rows(self):
        """Rows ``(a, beta)`` scaled to coprime integers; the set is unchanged."""
        out = []
        for row, rhs in zip(self.A, self.b):
            ints, _ = clear_denominators(row + (rhs,))
            out.append((ints[:-1], ints[-1]))
        return out

    def integral(self):
        """Same polyhedron with every row cleared to integer data."""
        rows = self.integer_rows()
        return HRep(self.space, [r for r, _ in rows], [beta for _, beta in rows])


@dataclass(frozen=True)
class VRep:
    """``conv(points) + cone(rays)``; duplicates are dropped on construction."""

    space: MixedSpace
    points: tuple
    rays: tuple = ()

    def __post_init__(self):
        pts = [vec(p) for p in self.points]
        if any(len(p) != self.space.dim for p in pts):
            raise DimensionMismatch("point length differs from n + d")
        rays = [vec(r) for r in self.rays]
        if any(len(r) != self.space.dim for r in rays):
            raise DimensionMismatch("ray length differs from n + d")
        object.__setattr__(self, "points", tuple(canonical_sorted(pts)))
        object.__setattr__(self, "rays", tuple(normalize_rays(rays)))

    @property
    def is_polytope(self):
        return not self.rays


def normalize_rays(raw):
    """Scale each ray to a primitive integer vector and drop duplicates."""
    out = set()
    for r in raw:
        r = vec(r)
        if all(q == 0 for q in r):
            raise ZeroRay("zero vector given as a ray")
        out.add(primitive_integer(r))
    return canonical_sorted(out)


def affine_dim(points):
    points = [vec(p) for p in points]
    if not points:
        raise EmptyInput("affine dimension of an empty set")
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    return mat_rank(diffs) if diffs else 0


def minkowski_sum_points(point_sets):
    """All sums choosing one point from each set; deduplicated, not filtered."""
    point_sets = [[vec(p) for p in s] for s in point_sets]
    if not point_sets or any(not s for s in point_sets):
        raise EmptyInput("Minkowski sum of an empty family")
    dims = {len(p) for s in point_sets for p in s}
    if len(dims) != 1:
        raise DimensionMismatch("Minkowski summands live in different spaces")
    sums = set()
    for combo in product(*point_sets):
        sums.add(tuple(sum(coords, Fraction(0)) for coords in zip(*combo)))
    return canonical_sorted(sums)


def project_x(v):
    """Projection of a V-representation onto the integer block."""
    n = v.space.n
    if n == 0:
        raise DimensionMismatch("projection onto an empty integer block")
    pts = {p[:n] for p in v.points}
    rays = [r[:n] for r in v.rays if any(q != 0 for q in r[:n])]
    return VRep(MixedSpace(n, 0), sorted(pts), rays)


def fiber_slice(h, xhat):
    """``h`` with the extra rows ``x <= xhat`` and ``-x <= -xhat``."""
    xhat = vec(xhat)
    n, k = h.space.n, h.space.dim
    if len(xhat) != n:
        raise DimensionMismatch("fiber point has the wrong length")
    A = list(h.A)
    b = list(h.b)
    for sign in (1, -1):
        for i in range(n):
            A.append(tuple(Fraction(sign * int(j == i)) for j in range(k)))
            b.append(sign * xhat[i])
    return HRep(h.space, A, b)


# -- vertex enumeration ---------------------------------------------------


def _replace_col(M, j, col):
    return [row[:j] + [c] + row[j + 1:] for row, c in zip(M, col)]


def basic_feasible_points(A, b):
    """Feasible basic solutions of ``A z <= b`` for integer data.

    Every nonsingular square row subset is solved by Cramer's rule in
    integers; feasible solutions are vertices of the polyhedron.
    """
    m = len(A)
    if m == 0:
        return []
    k = len(A[0])
    if k == 0:
        return [()] if all(beta >= 0 for beta in b) else []
    found = set()
    for S in combinations(range(m), k):
        M = [list(A[i]) for i in S]
        det = int_det(M)
        if det == 0:
            continue
        rhs = [b[i] for i in S]
        nums = [int_det(_replace_col(M, j, rhs)) for j in range(k)]
        if det < 0:
            det = -det
            nums = [-x for x in nums]
        key = (tuple(nums), det)
        if key in found:
            continue
        if all(sum(a * x for a, x in zip(A[i], nums)) <= b[i] * det for i in range(m)):
            found.add(key)
    return canonical_sorted(tuple(Fraction(x, det) for x in nums) for nums, det in found)


def _extreme_rays(A, k):
    """Extreme rays of the pointed cone ``{z : A z <= 0}`` (integer ``A``)."""
    rays = set()
    if k == 1:
        candidates = [[(Fraction(1),)]]
    else:
        candidates = (
            nullspace([A[i] for i in S]) for S in combinations(range(len(A)), k - 1)
        )
    for ns in candidates:
        if len(ns) != 1:
            continue
        r = ns[0]
        for cand in (r, tuple(-q for q in r)):
            if all(sum(a * q for a, q in zip(row, cand)) <= 0 for row in A):
                rays.add(primitive_integer(cand))
    return canonical_sorted(rays)


def hrep_to_vrep(h):
    """Vertices and extreme rays of a pointed polyhedron."""
    from .lp import lp_feasible

    k = h.space.dim
    rows = h.integer_rows()
    A = [r for r, _ in rows]
    b = [beta for _, beta in rows]
    if int_rank(A) < k:
        if not lp_feasible(h):
            raise EmptyPolyhedron("inequality system is infeasible")
        raise ImplicitLineality("polyhedron contains a line")
    points = basic_feasible_points(A, b)
    if not points:
        raise EmptyPolyhedron("inequality system is infeasible")
    return VRep(h.space, points, _extreme_rays(A, k))


class FiberEnumerator:
    """Vertex enumeration of the fibers ``P_xhat`` of a fixed polytope.

    The continuous part ``A2`` is shared by every fiber, so the inverse of
    each nonsingular d x d row subset is computed once; a fiber then costs
    one integer matrix-vector product per subset.
    """

    def __init__(self, h):
        self.space = h.space
        n, d = h.space.n, h.space.d
        rows = h.integer_rows()
        self.A1 = [r[:n] for r, _ in rows]
        self.A2 = [r[n:] for r, _ in rows]
        self.b = [beta for _, beta in rows]
        self._bases = []
        if d == 0:
            return
        for S in combinations(range(len(rows)), d):
            M = [list(self.A2[i]) for i in S]
            det = int_det(M)
            if det == 0:
                continue
            adj = _adjugate(M)
            if det < 0:
                det = -det
                adj = [[-a for a in row] for row in adj]
            # A2 . adj, so that feasibility is checked without forming y
            W = [[sum(a2[l] * adj[l][j] for l in range(d)) for j in range(d)] for a2 in self.A2]
            self._bases.append((S, det, adj, W))
        if int_rank(self.A2) < d:
            raise ImplicitLineality("fibers contain a line; polyhedron is unbounded")

    def residual(self, xhat):
        return [beta - sum(a * x for a, x in zip(a1, xhat)) for a1, beta in zip(self.A1, self.b)]

    def vertices(self, xhat):
        """Vertices ``(xhat, y)`` of the fiber at an integral ``xhat``."""
        xhat = [int(q) for q in xhat]
        r = self.residual(xhat)
        if self.space.d == 0:
            return [tuple(Fraction(x) for x in xhat)] if all(v >= 0 for v in r) else []
        found = set()
        m = len(r)
        for S, det, adj, W in self._bases:
            rS = [r[i] for i in S]
            ok = True
            for i in range(m):
                if sum(w * q for w, q in zip(W[i], rS)) > r[i] * det:
                    ok = False
                    break
            if ok:
                ynum = tuple(sum(a * q for a, q in zip(row, rS)) for row in adj)
                found.add((ynum, det))
        xpart = tuple(Fraction(x) for x in xhat)
        pts = {xpart + tuple(Fraction(y, det) for y in ynum) for ynum, det in found}
        return canonical_sorted(pts)


def _adjugate(M):
    k = len(M)
    if k == 1:
        return [[1]]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1:] for r, row in enumerate(M) if r != i]
            adj[j][i] = (-1) ** (i + j) * int_det(minor)
    return adj


# -- facet enumeration ----------------------------------------------------


def cone_facets(gens):
    """Facets and equations of ``cone(gens)``.

    Returns ``(facets, equations)`` where each facet is ``(a, tight)`` with
    ``a . g <= 0`` for every generator and ``tight`` the frozenset of
    generator indices on the facet, and ``equations`` is a basis of the
    vectors vanishing on the linear span.  Facets are found in a coordinate
    chart where the span is full-dimensional.
    """
    G = mat(gens)
    if not G:
        raise EmptyInput("cone of no generators")
    k = len(G[0])
    equations = nullspace(G)
    r = k - len(equations)
    _, J = rref(G)
    chart = [tuple(g[j] for j in J) for g in G]
    seen = {}
    for T in combinations(range(len(G)), r - 1):
        if r - 1 == 0:
            ns = [(Fraction(1),)]
        else:
            sub = [chart[i] for i in T]
            if mat_rank(sub) != r - 1:
                continue
            ns = nullspace(sub)
        aJ = ns[0]
        vals = [sum(a * c for a, c in zip(aJ, g)) for g in chart]
        if all(v <= 0 for v in vals):
            pass
        elif all(v >= 0 for v in vals):
            aJ = tuple(-a for a in aJ)
        else:
            continue
        tight = frozenset(i for i, v in enumerate(vals) if v == 0)
        if not tight or tight in seen:
            continue
        a = [Fraction(0)] * k
        for j, coef in zip(J, aJ):
            a[j] = coef
        seen[tight] = tuple(a)
    facets = [(a, tight) for tight, a in seen.items()]
    return facets, equations


def polytope_facet_sets(points):
    """Index sets of the points lying on each facet of ``conv(points)``."""
    gens = [tuple(p) + (Fraction(1),) for p in points]
    facets, _ = cone_facets(gens)
    return sorted((tuple(sorted(t)) for _, t in facets))


def vrep_to_hrep(v):
    """Irredundant inequality description of ``conv(points) + cone(rays)``.

    Lower-dimensional inputs get a pair of opposite inequalities for each
    equation of the affine hull.
    """
    if not v.points:
        raise EmptyInput("V-representation without points")
    one, zero = Fraction(1), Fraction(0)
    gens = [p + (one,) for p in v.points] + [r + (zero,) for r in v.rays]
    facets, equations = cone_facets(gens)
    rows = set()

    def add(a):
        # a_z . z + a_s <= 0  <=>  a_z . z <= -a_s
        az, beta = a[:-1], -a[-1]
        if all(q == 0 for q in az):
            return
        rows.add(primitive_integer(az + (beta,)))

    for a, _ in facets:
        add(a)
    for e in equations:
        add(e)
        add(tuple(-q for q in e))
    rows = sorted(rows)
    return HRep(v.space, [r[:-1] for r in rows], [r[-1] for r in rows])

"""Mixed-integer hulls ``conv(P ∩ (Z^n x R^d))``.

Three routes are provided:

* :func:`mih_from_hrep` -- stretch the continuous block by an integer
  ``t`` that makes every fiber vertex integral, take the integer hull of the
  stretched polytope and shrink back.
* :func:`mih_from_vrep` -- for every (n'+1)-subset of the vertices, take the
  integer hull of the projected simplex and collect the vertices of the
  fibers of the simplex over its integer vertices.
* :func:`mih_oracle` -- enumerate every integral fiber and hull the union.

:func:`reduce_to_polytope` cuts unbounded inputs down to a polytope whose
mixed-integer hull plus the recession cone is the answer.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, comb, floor
from typing import Optional

from .errors import (
    FiberEmpty,
    MixedInfeasible,
    NonPolytopeInput,
    UnboundedInput,
)
from .hull import hull_vertices
from .inthull import integer_hull_from_vertices
from .lp import coordinate_bounds, is_bounded, lp_feasible, point_in_generated
from .polyrep import (
    FiberEnumerator,
    HRep,
    MixedSpace,
    VRep,
    affine_dim,
    fiber_slice,
    hrep_to_vrep,
    minkowski_sum_points,
    vrep_to_hrep,
)
from .ratcore import (
    encoding_size,
    int_det,
    is_integral,
    lcm_all,
    mat_solve,
    matvec,
    rref,
    vec,
    vscale,
    vsub,
)


@dataclass(frozen=True)
class ScaleReport:
    t: int
    bases_considered: int
    max_abs_det: int
    # rows of the augmented system and the count of its (n+d)-subsets
    augmented_rows: int = 0
    subsets_enumerated: int = 0
    # the binomial C(m+n, n+d) as printed next to the product formula
    bases_bound: int = 0
    phi: int = 0
    hadamard_ok: bool = True


@dataclass(frozen=True)
class MixedIntegerHull:
    space: MixedSpace
    vertices: tuple
    rays: tuple = ()
    scale: Optional[ScaleReport] = field(default=None, compare=False)

    def __len__(self):
        return len(self.vertices)


# -- shared helpers -------------------------------------------------------


def _as_hrep(p):
    if isinstance(p, HRep):
        return p
    if p.rays:
        raise UnboundedInput("input has rays")
    return vrep_to_hrep(p)


def x_ranges(p):
    """Integer ranges covering the projection of a bounded ``p`` onto x."""
    n = p.space.n
    if isinstance(p, VRep):
        if p.rays:
            raise UnboundedInput("input has rays")
        bounds = [(min(v[j] for v in p.points), max(v[j] for v in p.points)) for j in range(n)]
    else:
        bounds = coordinate_bounds(p, range(n))
    return [range(ceil(lo), floor(hi) + 1) for lo, hi in bounds]


def mixed_feasible(p):
    """Decide ``P ∩ (Z^n x R^d) != ∅`` for a bounded ``p`` by fiber LPs."""
    h = _as_hrep(p)
    for xhat in product(*x_ranges(h)):
        if lp_feasible(fiber_slice(h, xhat)):
            return True
    return False


def _fiber_pool(h, ranges):
    fe = FiberEnumerator(h)
    pool = []
    for xhat in product(*ranges):
        pool.extend(fe.vertices(xhat))
    return pool


# -- oracle ---------------------------------------------------------------


def mih_oracle(p):
    """Ground truth: hull of the vertices of every integral fiber."""
    h = _as_hrep(p)
    if not is_bounded(h):
        raise UnboundedInput("oracle needs a bounded polyhedron")
    pool = _fiber_pool(h, x_ranges(p))
    if not pool:
        raise MixedInfeasible("no fiber over an integral point is nonempty")
    return MixedIntegerHull(h.space, tuple(hull_vertices(pool)))


# -- scaling algorithm ----------------------------------------------------


def _augmented_rows(h):
    n, k = h.space.n, h.space.dim
    A = [r for r, _ in h.integer_rows()]
    for sign in (1, -1):
        for i in range(n):
            A.append([sign * int(j == i) for j in range(k)])
    return A


def _sign_normalized(row):
    lead = next((a for a in row if a != 0), 0)
    return tuple(row) if lead >= 0 else tuple(-a for a in row)


def row_encoding_size(h):
    """Largest encoding size of a row ``(a, beta)`` of the integral system."""
    return max(encoding_size(list(map(Fraction, r)) + [Fraction(beta)]) for r, beta in h.integer_rows())


def compute_scale_factor(h):
    """Integer ``t`` such that every fiber of the stretched polytope is integral.

    ``t`` is the lcm of ``|det(A_B)|`` over the nonsingular square row
    subsets ``B`` of ``[A; I 0; -I 0]``, where ``A`` is the integral form of
    ``h``.  Rows equal up to sign give the same ``|det|``, so they are
    enumerated once.
    """
    h = h.integral()
    if not is_bounded(h):
        raise UnboundedInput("scaling needs a bounded polytope")
    n, k, m = h.space.n, h.space.dim, h.m
    aug = _augmented_rows(h)
    unique = sorted({_sign_normalized(r) for r in aug if any(r)})
    dets = []
    for S in combinations(unique, k):
        det = int_det([list(r) for r in S])
        if det:
            dets.append(abs(det))
    t = lcm_all(dets) if dets else 1
    phi = row_encoding_size(h)
    max_det = max(dets, default=0)
    return ScaleReport(
        t=t,
        bases_considered=len(dets),
        max_abs_det=max_det,
        augmented_rows=len(aug),
        subsets_enumerated=comb(len(aug), k),
        bases_bound=comb(m + n, k),
        phi=phi,
        # Hadamard: |det A_B| <= prod of row norms <= 2^(k phi)
        hadamard_ok=max_det <= 2 ** (k * phi),
    )


def scale_polytope(h, t):
    """``{(x, t y) : (x, y) in P}`` as ``(t A1, A2) z <= t b``, integral rows."""
    if t < 1:
        raise ValueError("scale factor must be >= 1")
    t = Fraction(t)
    n = h.space.n
    A = [tuple(a * t for a in row[:n]) + row[n:] for row in h.A]
    b = [beta * t for beta in h.b]
    return HRep(h.space, A, b).integral()


def unscale_points(points, n, t):
    inv = Fraction(1, t)
    return [p[:n] + vscale(inv, p[n:]) for p in points]


def mih_from_hrep(h):
    """Mixed-integer hull of a bounded H-representation by scaling.

    The integer hull of the stretched polytope is computed fiber by fiber:
    each stretched fiber over an integral x already has integral vertices.
    Extreme points are filtered after shrinking back; the linear map
    preserves extremality and the unscaled coordinates are far smaller.
    """
    report = compute_scale_factor(h)
    n = h.space.n
    ht = scale_polytope(h, report.t)
    # x is not stretched, so the original system gives the same x-ranges
    pool = _fiber_pool(ht, x_ranges(h))
    if not pool:
        raise MixedInfeasible("no fiber over an integral point is nonempty")
    bad = [z for z in pool if not is_integral(z)]
    if bad:
        raise ArithmeticError(f"scale factor {report.t} left a fractional fiber vertex {bad[0]}")
    verts = hull_vertices(unscale_points(pool, n, report.t))
    return MixedIntegerHull(h.space, tuple(verts), scale=report)


# -- subset algorithm -----------------------------------------------------


def candidate_subsets(v):
    """All (n'+1)-subsets of the vertices with ``n' = min(n, dim P)``."""
    if v.rays:
        raise NonPolytopeInput("candidate subsets need a polytope")
    nprime = min(v.space.n, affine_dim(v.points))
    return combinations(v.points, nprime + 1)


def fiber_vertices_in_simplex(S, xhat):
    """Vertices of ``conv(S) ∩ {x = xhat}``.

    Enumerates the vertices of the weight polytope
    ``{lam >= 0 : sum lam = 1, sum lam proj_x(s) = xhat}`` by trying every
    support set, then maps each weight vector back to a point.
    """
    S = [vec(s) for s in S]
    xhat = vec(xhat)
    n, k = len(xhat), len(S)
    M = [[s[j] for s in S] for j in range(n)] + [[Fraction(1)] * k]
    rhs = list(xhat) + [Fraction(1)]
    found = set()
    for size in range(1, min(k, n + 1) + 1):
        for T in combinations(range(k), size):
            aug = [[row[i] for i in T] + [r] for row, r in zip(M, rhs)]
            R, piv = rref(aug)
            if size in piv or len(piv) != size:
                continue
            lam = [R[i][size] for i in range(size)]
            if any(q < 0 for q in lam):
                continue
            point = [Fraction(0)] * len(S[0])
            for q, i in zip(lam, T):
                if q:
                    point = [a + q * c for a, c in zip(point, S[i])]
            found.add(tuple(point))
    if not found:
        raise FiberEmpty("xhat is not in the projection of the simplex")
    return sorted(found)


def fiber_point_on_face(A1, A2, b, xhat):
    """The unique ``y`` with ``A1 xhat + A2 y = b`` for invertible square ``A2``."""
    rhs = vsub(vec(b), matvec([vec(r) for r in A1], vec(xhat)))
    return mat_solve(A2, rhs)


def mih_from_vrep(v):
    """Mixed-integer hull of ``conv(V)`` from its vertices."""
    if v.rays:
        raise NonPolytopeInput("mih_from_vrep needs a polytope")
    n = v.space.n
    if n == 0:
        return MixedIntegerHull(v.space, tuple(hull_vertices(v.points)))
    pool = set()
    cache = {}
    for S in candidate_subsets(v):
        key = frozenset(s[:n] for s in S)
        if key not in cache:
            cache[key] = integer_hull_from_vertices(sorted(key)).vertices
        for xhat in cache[key]:
            try:
                pool.update(fiber_vertices_in_simplex(S, xhat))
            except FiberEmpty:
                pass
    if not pool:
        raise MixedInfeasible("no mixed-integer point in conv(V)")
    return MixedIntegerHull(v.space, tuple(hull_vertices(pool)))


# -- unbounded inputs -----------------------------------------------------


def reduce_to_polytope(p):
    """Polytope ``Q`` and rays with ``P_MI = conv(Q ∩ (Z^n x R^d)) + cone(rays)``.

    V-input: ``Q = conv(V) + (n+d) conv(W ∪ {0})``.  H-input: ``Q`` is ``P``
    cut by the box ``[-R', R']^(n+d)`` with ``R' = (n+d+1) R`` and ``R`` the
    largest absolute coordinate over the vertices and rays of ``P``.
    """
    k = p.space.dim
    if isinstance(p, VRep):
        rays = list(p.rays)
        zero = tuple(Fraction(0) for _ in range(k))
        pts = minkowski_sum_points([p.points, [zero] + [vscale(k, w) for w in rays]])
        Q = VRep(p.space, pts)
    else:
        gen = hrep_to_vrep(p)
        rays = list(gen.rays)
        R = max((abs(q) for z in gen.points + gen.rays for q in z), default=Fraction(0))
        Rp = (k + 1) * R
        A, b = list(p.A), list(p.b)
        for j in range(k):
            e = tuple(Fraction(int(i == j)) for i in range(k))
            A += [e, tuple(-q for q in e)]
            b += [Rp, Rp]
        Q = HRep(p.space, A, b)
    if not mixed_feasible(Q):
        raise MixedInfeasible("no mixed-integer point in the polyhedron")
    return Q, rays


def extreme_with_rays(points, rays):
    """Vertices of ``conv(points) + cone(rays)``."""
    pts = hull_vertices(points)
    if not rays:
        return pts
    alive = list(pts)
    for q in pts:
        others = [r for r in alive if r != q]
        if others and point_in_generated(q, others, rays):
            alive = others
    return alive


def mixed_integer_hull(p, method="auto"):
    """Mixed-integer hull of any pointed polyhedron with a mixed-integer point.

    ``method`` is ``"scaling"``, ``"subsets"``, ``"oracle"`` or ``"auto"``
    (subsets for V-input, scaling for H-input).
    """
    if method == "auto":
        method = "subsets" if isinstance(p, VRep) else "scaling"
    bounded = p.is_polytope if isinstance(p, VRep) else is_bounded(p)
    rays = []
    if not bounded:
        p, rays = reduce_to_polytope(p)
    if method == "subsets":
        q = p if isinstance(p, VRep) else hrep_to_vrep(p)
        res = mih_from_vrep(q)
    elif method == "scaling":
        res = mih_from_hrep(_as_hrep(p))
    elif method == "oracle":
        res = mih_oracle(p)
    else:
        raise ValueError(f"unknown method {method!r}")
    if not rays:
        return res
    verts = extreme_with_rays(res.vertices, rays)
    return MixedIntegerHull(res.space, tuple(sorted(verts)), tuple(rays), res.scale)


# -- vertex count bounds --------------------------------------------------


def vertex_bound_hrep(m, n, d, phi):
    """``2 m^(n+d) (6 (n+d)^2 phi')^(n+d-1)`` with ``phi' = phi + n phi (m+n)^(n+d)``."""
    k = n + d
    phi2 = phi + n * phi * (m + n) ** k
    return Fraction(2 * m ** k) * Fraction(6 * k * k * phi2) ** (k - 1)


def vertex_bound_vrep(n, nu, num_points):
    """``(4/3) 48^n n^(3n-2) phi^(n-1) |V|^(n+1)`` with ``phi = 4 n^2 nu``."""
    if n < 1:
        raise ValueError("the bound needs n >= 1")
    phi = 4 * n * n * nu
    return (
        Fraction(4, 3)
        * Fraction(48) ** n
        * Fraction(n) ** (3 * n - 2)
        * Fraction(phi) ** (n - 1)
        * Fraction(num_points) ** (n + 1)
    )


def bound_hrep_for(h):
    h = h.integral()
    return vertex_bound_hrep(h.m, h.space.n, h.space.d, row_encoding_size(h))


def bound_vrep_for(v):
    nu = max(encoding_size(p) for p in v.points)
    return vertex_bound_vrep(v.space.n, nu, len(v.points))

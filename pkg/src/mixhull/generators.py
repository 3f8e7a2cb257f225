"""Instance generators: the rotated cube, knapsack polytopes, random polytopes."""
import random
from fractions import Fraction
from itertools import product

from .errors import BadDimension
from .polyrep import HRep, MixedSpace, VRep, normalize_rays


def rotation_matrices(d):
    """``(R, A)`` with ``A = R^-1`` for the rotated cube in R^(d+1).

    ``R`` has first row ``(1/2, ..., 1/2)`` and ``A`` first row
    ``(2, -1, ..., -1)``; the remaining rows are ``(0 | I_d)`` in both.
    """
    k = d + 1
    half = Fraction(1, 2)
    R = [[half] * k] + [[Fraction(int(j == i + 1)) for j in range(k)] for i in range(d)]
    A = [[Fraction(2)] + [Fraction(-1)] * d] + [[Fraction(int(j == i + 1)) for j in range(k)] for i in range(d)]
    return R, A


def example1_b(d, remark1=False):
    if remark1:
        return [3] * (d + 1)
    return [2 ** i + 1 for i in range(1, d + 2)]


def gen_example1(d, b=None, remark1=False):
    """The cube ``prod [-b_i, b_i]`` mapped by ``R``; one integer coordinate.

    Returns ``(hrep, vrep)`` of the same polytope in ``R^1 x R^d``.
    """
    if d < 0:
        raise BadDimension("d must be nonnegative")
    if b is None:
        b = example1_b(d, remark1)
    b = [Fraction(q) for q in b]
    if len(b) != d + 1:
        raise BadDimension(f"need {d + 1} half-widths, got {len(b)}")
    if any(q <= 0 for q in b):
        raise BadDimension("half-widths must be positive")
    R, A = rotation_matrices(d)
    space = MixedSpace(1, d)
    rows, rhs = [], []
    for row, bi in zip(A, b):
        rows += [row, [-a for a in row]]
        rhs += [bi, bi]
    verts = []
    for signs in product((1, -1), repeat=d + 1):
        s = [sg * bi for sg, bi in zip(signs, b)]
        verts.append([sum((r * q for r, q in zip(row, s)), Fraction(0)) for row in R])
    return HRep(space, rows, rhs), VRep(space, verts)


def gen_knapsack(m, n, d, seed=0, max_coef=4, max_rhs=6):
    """``{z >= 0 : A z <= b}`` with strictly positive integer ``A``."""
    rng = random.Random(seed)
    k = n + d
    rows, rhs = [], []
    for _ in range(m):
        rows.append([rng.randint(1, max_coef) for _ in range(k)])
        rhs.append(rng.randint(1, max_rhs))
    for j in range(k):
        rows.append([-int(i == j) for i in range(k)])
        rhs.append(0)
    return HRep(MixedSpace(n, d), rows, rhs)


def random_rational(rng, pmax, qmax):
    return Fraction(rng.randint(-pmax, pmax), rng.randint(1, qmax))


def random_vrep(seed, n=None, d=None, npoints=None, pmax=5, qmax=4, require_mixed=True):
    """A seeded random polytope ``conv(V)`` with entries ``p/q``.

    Unspecified sizes are drawn with ``n`` in {1, 2}, ``d`` in {0..3} and
    ``|V|`` in {2..8}.  With ``require_mixed`` the draw is repeated until
    ``conv(V)`` contains a mixed-integer point.
    """
    from .mihull import mixed_feasible

    rng = random.Random(seed)
    while True:
        nn = rng.randint(1, 2) if n is None else n
        dd = rng.randint(0, 3) if d is None else d
        npts = rng.randint(2, 8) if npoints is None else npoints
        pts = [[random_rational(rng, pmax, qmax) for _ in range(nn + dd)] for _ in range(npts)]
        v = VRep(MixedSpace(nn, dd), pts)
        if not require_mixed or mixed_feasible(v):
            return v


def random_points(seed, dim, npoints, pmax=8, qmax=4):
    rng = random.Random(seed)
    return [tuple(random_rational(rng, pmax, qmax) for _ in range(dim)) for _ in range(npoints)]


def random_unbounded_vrep(seed, d=None, npoints=None, pmax=3, qmax=3, ray_max=2):
    """``conv(V) + cone(w)`` with one integer variable and one primitive ray."""
    from .mihull import mixed_feasible

    rng = random.Random(seed)
    while True:
        dd = rng.randint(0, 1) if d is None else d
        k = 1 + dd
        npts = rng.randint(1, 3) if npoints is None else npoints
        pts = [[random_rational(rng, pmax, qmax) for _ in range(k)] for _ in range(npts)]
        w = [rng.randint(-ray_max, ray_max) for _ in range(k)]
        if not any(w):
            continue
        v = VRep(MixedSpace(1, dd), pts, normalize_rays([w]))
        bounded = VRep(v.space, [p for p in v.points] + [tuple(a + 3 * r for a, r in zip(p, v.rays[0])) for p in v.points])
        if mixed_feasible(bounded):
            return v

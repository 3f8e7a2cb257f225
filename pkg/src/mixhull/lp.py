"""Exact linear programming and convexity predicates.

A dense two-phase tableau simplex over Fractions with Bland's rule.  It
is slow compared to floating point solvers but never cycles and never
rounds, which is what the hull computations need.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import (
    DimensionMismatch,
    EmptyGenerators,
    EmptyPolyhedron,
    PNotInCandidates,
    UnboundedInput,
)
from .ratcore import clear_denominators, vec

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    point: Optional[tuple] = None
    value: Optional[Fraction] = None


class _Tableau:
    """Standard form ``min c x, A x = b, x >= 0`` with integer data, ``b >= 0``.

    Fraction-free: every stored entry is an integer equal to ``D`` times the
    true tableau entry, where ``D`` is the previous pivot.  Pivoting divides
    exactly (Bareiss), so no rational arithmetic happens in the loop.
    """

    def __init__(self, A, b):
        self.m = len(A)
        self.nvar = len(A[0]) if A else 0
        # artificial columns nvar .. nvar+m-1, rhs last
        self.rows = []
        for i, (row, rhs) in enumerate(zip(A, b)):
            art = [0] * self.m
            art[i] = 1
            self.rows.append(list(row) + art + [rhs])
        self.basis = [self.nvar + i for i in range(self.m)]
        self.D = 1
        self.obj = None

    def _pivot(self, r, c):
        R = self.rows[r]
        p = R[c]
        D = self.D
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    self.rows[i] = [(p * a - f * q) // D for a, q in zip(row, R)]
                else:
                    self.rows[i] = [p * a // D for a in row]
        f = self.obj[c]
        self.obj = [(p * a - f * q) // D for a, q in zip(self.obj, R)]
        self.D = p
        self.basis[r] = c

    def set_cost(self, cost):
        """Install an integer cost vector (over all columns) for the current basis."""
        D = self.D
        obj = [D * cj for cj in cost] + [0]
        for bi, row in zip(self.basis, self.rows):
            cb = cost[bi]
            if cb:
                obj = [a - cb * q for a, q in zip(obj, row)]
        self.obj = obj

    def optimize(self, columns):
        """Bland's rule on the installed cost; returns False when unbounded."""
        while True:
            sgn = 1 if self.D > 0 else -1
            obj = self.obj
            entering = next((j for j in columns if obj[j] * sgn < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a * sgn > 0:
                    key = (Fraction(row[-1], a), self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self._pivot(best[1], entering)

    def phase_one(self):
        """Drive to a feasible basis; returns False if infeasible."""
        total = self.nvar + self.m
        self.set_cost([0] * self.nvar + [1] * self.m)
        self.optimize(list(range(total)))
        if any(self.rows[i][-1] != 0 for i, bi in enumerate(self.basis) if bi >= self.nvar):
            return False
        # pivot zero-level artificials out, dropping redundant rows
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.nvar:
                col = next((j for j in range(self.nvar) if self.rows[i][j] != 0), None)
                if col is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self._pivot(i, col)
            i += 1
        return True

    def solution(self):
        x = [_ZERO] * self.nvar
        for i, bi in enumerate(self.basis):
            if bi < self.nvar:
                x[bi] = Fraction(self.rows[i][-1], self.D)
        return x


def _int_rows(A, b):
    """Scale each equation to integers; flip signs so that ``b >= 0``."""
    outA, outb = [], []
    for row, rhs in zip(A, b):
        ints, _ = clear_denominators(list(row) + [rhs])
        if ints[-1] < 0:
            ints = [-a for a in ints]
        outA.append(ints[:-1])
        outb.append(ints[-1])
    return outA, outb


def _standard_form_feasible(A, b):
    T = _Tableau(*_int_rows(A, b))
    return T, T.phase_one()


def lp_solve(h, c, sense="max"):
    """Optimize ``c . z`` over ``{z : A z <= b}`` exactly.

    The optimum returned is a basic solution (a vertex when the polyhedron
    is pointed).  ``sense`` is ``"max"`` or ``"min"``.
    """
    c = vec(c)
    k = h.space.dim
    if len(c) != k:
        raise DimensionMismatch("objective length differs from n + d")
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    m = h.m
    if m == 0:
        if all(q == 0 for q in c):
            return LpResult(LpStatus.OPTIMAL, tuple([_ZERO] * k), _ZERO)
        return LpResult(LpStatus.UNBOUNDED)
    # z = zp - zn, slack s:  A zp - A zn + s = b
    A = []
    for i, row in enumerate(h.A):
        slack = [_ZERO] * m
        slack[i] = _ONE
        A.append(list(row) + [-a for a in row] + slack)
    T, feasible = _standard_form_feasible(A, h.b)
    if not feasible:
        return LpResult(LpStatus.INFEASIBLE)
    sign = -1 if sense == "max" else 1
    cint, _ = clear_denominators(c)
    cost = [sign * q for q in cint] + [-sign * q for q in cint] + [0] * m
    cost += [0] * m  # artificial columns, never re-entered
    T.set_cost(cost)
    if not T.optimize(list(range(2 * k + m))):
        return LpResult(LpStatus.UNBOUNDED)
    x = T.solution()
    z = tuple(x[j] - x[k + j] for j in range(k))
    value = sum((a * q for a, q in zip(c, z)), _ZERO)
    return LpResult(LpStatus.OPTIMAL, z, value)


def lp_feasible(h):
    if h.m == 0:
        return True
    return lp_solve(h, [0] * h.space.dim).status is not LpStatus.INFEASIBLE


def barycentric_weights(p, generators):
    """Weights ``lam >= 0`` with ``sum lam = 1`` and ``sum lam g = p``, or None."""
    p = vec(p)
    gens = [vec(g) for g in generators]
    if not gens:
        raise EmptyGenerators("convex hull of no generators")
    if any(len(g) != len(p) for g in gens):
        raise DimensionMismatch("generator dimension differs from point")
    A = [[g[j] for g in gens] for j in range(len(p))]
    A.append([_ONE] * len(gens))
    T, feasible = _standard_form_feasible(A, list(p) + [_ONE])
    if not feasible:
        return None
    return tuple(T.solution())


def point_in_hull(p, generators):
    return barycentric_weights(p, generators) is not None


def point_in_generated(p, points, rays=()):
    """Membership of ``p`` in ``conv(points) + cone(rays)``."""
    p = vec(p)
    if not points:
        raise EmptyGenerators("convex hull of no generators")
    one = [_ONE]
    cols = [vec(q) + (_ONE,) for q in points] + [vec(r) + (_ZERO,) for r in rays]
    A = [[c[j] for c in cols] for j in range(len(p) + 1)]
    _, feasible = _standard_form_feasible(A, list(p) + one)
    return feasible


def is_extreme_point(p, candidates):
    """True iff ``p`` is not in the convex hull of the other candidates."""
    p = vec(p)
    candidates = [vec(c) for c in candidates]
    if p not in candidates:
        raise PNotInCandidates("point is not among the candidates")
    others = [c for c in candidates if c != p]
    if not others:
        return True
    return not point_in_hull(p, others)


def is_bounded(h):
    """True iff every coordinate is bounded above and below over ``h``."""
    k = h.space.dim
    for j in range(k):
        e = [int(i == j) for i in range(k)]
        for sense in ("max", "min"):
            res = lp_solve(h, e, sense)
            if res.status is LpStatus.INFEASIBLE:
                raise EmptyPolyhedron("bounding an infeasible system")
            if res.status is LpStatus.UNBOUNDED:
                return False
    return True


def coordinate_bounds(h, coords=None):
    """Exact ``(min, max)`` of each requested coordinate over ``h``."""
    k = h.space.dim
    coords = range(k) if coords is None else coords
    out = []
    for j in coords:
        e = [int(i == j) for i in range(k)]
        lo = lp_solve(h, e, "min")
        if lo.status is LpStatus.INFEASIBLE:
            raise EmptyPolyhedron("bounding an infeasible system")
        hi = lp_solve(h, e, "max")
        if LpStatus.UNBOUNDED in (lo.status, hi.status):
            raise UnboundedInput(f"coordinate {j} is unbounded")
        out.append((lo.value, hi.value))
    return out


def separating_hyperplane(p, generators):
    """An exact ``(c, delta)`` with ``c.p - c.g >= delta > 0`` for all g, or None.

    Maximizes the margin ``delta`` over ``c`` in the unit box.
    """
    from .polyrep import HRep, MixedSpace

    p = vec(p)
    gens = [vec(g) for g in generators]
    if not gens:
        raise EmptyGenerators("separation from an empty set")
    k = len(p)
    A, b = [], []
    # variables (c_1..c_k, delta):  c.(g - p) + delta <= 0
    for g in gens:
        A.append([gi - pi for gi, pi in zip(g, p)] + [_ONE])
        b.append(_ZERO)
    for j in range(k):
        e = [_ZERO] * (k + 1)
        e[j] = _ONE
        A.append(e)
        b.append(_ONE)
        A.append([-q for q in e])
        b.append(_ONE)
    h = HRep(MixedSpace(0, k + 1), A, b)
    res = lp_solve(h, [0] * k + [1], "max")
    if res.status is not LpStatus.OPTIMAL or res.value <= 0:
        return None
    return res.point[:k], res.value

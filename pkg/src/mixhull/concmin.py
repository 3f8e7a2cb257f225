"""Concave minimization over the mixed-integer points of a polytope.

A concave function attains its minimum over a polytope at a vertex, so the
minimum over ``P ∩ (Z^n x R^d)`` is attained at a vertex of the
mixed-integer hull.  Evaluating the objective on that finite list solves the
problem exactly.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, EmptyInput
from .mihull import mih_from_vrep
from .polyrep import HRep, hrep_to_vrep
from .ratcore import to_rat, vec


@dataclass(frozen=True)
class PiecewiseAffineConcave:
    """``f(z) = min_i (c_i . z + c0_i)``."""

    pieces: tuple

    def __post_init__(self):
        pieces = tuple((vec(c), to_rat(c0)) for c, c0 in self.pieces)
        if not pieces:
            raise EmptyInput("a piecewise affine function needs at least one piece")
        if len({len(c) for c, _ in pieces}) != 1:
            raise DimensionMismatch("pieces have different lengths")
        object.__setattr__(self, "pieces", pieces)

    @property
    def dim(self):
        return len(self.pieces[0][0])

    def __call__(self, z):
        return evaluate(self, z)

    def scaled(self, s):
        s = to_rat(s)
        return PiecewiseAffineConcave(tuple((tuple(s * a for a in c), s * c0) for c, c0 in self.pieces))


def evaluate(f, z):
    z = vec(z)
    if len(z) != f.dim:
        raise DimensionMismatch(f"point has length {len(z)}, objective expects {f.dim}")
    return min(sum((a * q for a, q in zip(c, z)), Fraction(0)) + c0 for c, c0 in f.pieces)


def minimize_over_mih(p, f, hull=None):
    """Minimize a concave ``f`` over the mixed-integer points of a polytope.

    ``f`` is a :class:`PiecewiseAffineConcave` or any callable returning an
    exact rational.  Returns ``(point, value)``; among minimizers the
    lexicographically smallest vertex wins.  A precomputed hull may be passed.
    """
    if hull is None:
        v = hrep_to_vrep(p) if isinstance(p, HRep) else p
        hull = mih_from_vrep(v)
    best = min(((to_rat(f(z)), z) for z in hull.vertices))
    return best[1], best[0]

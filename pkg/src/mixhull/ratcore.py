"""Exact rational scalars, vectors and matrices.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  Vectors are tuples of fractions and matrices are tuples of
row tuples, so every value is immutable and hashable.  Heavy inner loops
(determinants, rank) clear denominators first and run fraction-free on
Python integers.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
import re

from .errors import EmptyList, SingularMatrix, DimensionMismatch

Rat = Fraction

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def to_rat(value):
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: their binary expansion is rarely what the caller
    meant, and silently accepting them defeats exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rat(token):
    m = _RAT_RE.match(token)
    if m is None:
        raise ValueError(f"malformed rational {token!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return Fraction(num, den)


def format_rat(q):
    q = to_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values):
    return tuple(to_rat(v) for v in values)


def mat(rows):
    rows = tuple(vec(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionMismatch("ragged matrix")
    return rows


def zeros(k):
    return (Fraction(0),) * k


def identity(k):
    return tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k))


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, v):
    return tuple(s * a for a in v)


def matvec(M, v):
    return tuple(dot(row, v) for row in M)


def transpose(M):
    return tuple(zip(*M))


def is_integral(v):
    return all(q.denominator == 1 for q in v)


def lcm_all(values):
    """Least common multiple of the absolute values of nonzero integers."""
    values = list(values)
    if not values:
        raise EmptyList("lcm of an empty list")
    if any(v == 0 for v in values):
        raise ValueError("lcm_all needs nonzero integers")
    return reduce(lcm, (abs(int(v)) for v in values), 1)


def clear_denominators(v):
    """Return ``(ints, L)`` with ``ints = L * v`` integral and ``L > 0`` minimal."""
    L = reduce(lcm, (to_rat(q).denominator for q in v), 1)
    return [int(q * L) for q in v], L


def primitive_integer(v):
    """Scale ``v`` by a positive rational so it becomes integral with gcd 1."""
    ints, _ = clear_denominators(v)
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(Fraction(0) for _ in ints)
    return tuple(Fraction(a // g) for a in ints)


def canonical_sorted(points):
    """Deduplicate and sort points lexicographically by coordinate value."""
    return sorted(set(points))


# -- integer kernels ------------------------------------------------------


def int_det(M):
    """Bareiss fraction-free determinant of a square integer matrix."""
    k = len(M)
    if k == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for i in range(k - 1):
        if A[i][i] == 0:
            for r in range(i + 1, k):
                if A[r][i] != 0:
                    A[i], A[r] = A[r], A[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = A[i][i]
        Ai = A[i]
        for r in range(i + 1, k):
            Ar = A[r]
            f = Ar[i]
            for c in range(i + 1, k):
                Ar[c] = (piv * Ar[c] - f * Ai[c]) // prev
            Ar[i] = 0
        prev = piv
    return sign * A[k - 1][k - 1]


def int_rank(M):
    """Rank of an integer matrix by fraction-free elimination."""
    A = [list(r) for r in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    rank = 0
    for c in range(cols):
        piv_row = next((r for r in range(rank, rows) if A[r][c] != 0), None)
        if piv_row is None:
            continue
        A[rank], A[piv_row] = A[piv_row], A[rank]
        P = A[rank]
        piv = P[c]
        for r in range(rank + 1, rows):
            f = A[r][c]
            if f:
                row = [piv * a - f * b for a, b in zip(A[r], P)]
                g = reduce(gcd, row, 0)
                A[r] = [a // g for a in row] if g > 1 else row
        rank += 1
        if rank == rows:
            break
    return rank


def _cleared_rows(M):
    out = []
    scale = Fraction(1)
    for row in M:
        ints, L = clear_denominators(row)
        out.append(ints)
        scale *= L
    return out, scale


# -- rational operations --------------------------------------------------


def mat_det(M):
    """Exact determinant; rows are cleared to integers, then Bareiss."""
    M = mat(M)
    if any(len(r) != len(M) for r in M):
        raise DimensionMismatch("determinant of a non-square matrix")
    ints, scale = _cleared_rows(M)
    return Fraction(int_det(ints)) / scale


def mat_rank(M):
    M = mat(M)
    if not M:
        return 0
    ints, _ = _cleared_rows(M)
    return int_rank(ints)


def mat_solve(M, rhs):
    """Solve ``M z = rhs`` exactly; raises :class:`SingularMatrix`."""
    M = mat(M)
    rhs = vec(rhs)
    k = len(M)
    if any(len(r) != k for r in M) or len(rhs) != k:
        raise DimensionMismatch("mat_solve needs a square system")
    A = [list(M[i]) + [rhs[i]] for i in range(k)]
    for c in range(k):
        piv = next((r for r in range(c, k) if A[r][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        row = [a / p for a in A[c]]
        A[c] = row
        for r in range(k):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], row)]
    return tuple(A[i][k] for i in range(k))


def rref(M):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    A = [list(r) for r in mat(M)]
    if not A:
        return [], []
    rows, cols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [a / p for a in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def nullspace(M, ncols=None):
    """Basis of ``{z : M z = 0}``, each vector primitive integral."""
    M = mat(M)
    if not M:
        if ncols is None:
            raise DimensionMismatch("column count unknown for an empty matrix")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    cols = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        z = [Fraction(0)] * cols
        z[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            z[pc] = -row[f]
        basis.append(primitive_integer(z))
    return basis


def encoding_size(q):
    """Binary encoding size in bits.

    A rational p/q costs ``1 + ceil(log2(|p|+1)) + ceil(log2(q+1))`` with the
    numerator charged at least one bit; vectors and matrices sum over
    entries.
    """
    if isinstance(q, (tuple, list)):
        return sum(encoding_size(e) for e in q)
    q = to_rat(q)
    return 1 + max(1, abs(q.numerator).bit_length()) + q.denominator.bit_length()

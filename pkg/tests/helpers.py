from fractions import Fraction as F

from mixhull.polyrep import HRep, MixedSpace, VRep


def box(n, d, lo=0, hi=1):
    k = n + d
    A, b = [], []
    for j in range(k):
        e = [int(i == j) for i in range(k)]
        A += [e, [-q for q in e]]
        b += [hi, -lo]
    return HRep(MixedSpace(n, d), A, b)


def unit_square(n=1, d=1):
    return box(n, d)


TRIANGLE = VRep(MixedSpace(1, 1), [(F(1, 2), 0), (F(5, 2), 0), (F(3, 2), 2)])
TRIANGLE_MIH = [(F(1), F(0)), (F(1), F(1)), (F(2), F(0)), (F(2), F(1))]


def as_points(rows):
    return sorted(tuple(F(q) for q in r) for r in rows)

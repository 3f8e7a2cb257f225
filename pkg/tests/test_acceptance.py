"""Acceptance criteria 1-11.

Each test records a PASS/FAIL line that the terminal summary prints (see
conftest.py), then asserts.  Run alone with ``pytest tests/test_acceptance.py``
or ``python3 tests/test_acceptance.py``.
"""
import random
import time
from fractions import Fraction as F
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from mixhull import cli
from mixhull.concmin import PiecewiseAffineConcave, minimize_over_mih
from mixhull.formats import format_instance, parse_instance
from mixhull.generators import gen_example1, random_points, random_unbounded_vrep, random_vrep
from mixhull.hull import delaunay_triangulate, in_circumsphere
from mixhull.inthull import integer_hull_from_vertices, integer_hull_of_points, intvertex_bound, max_encoding_size
from mixhull.lp import point_in_generated, separating_hyperplane
from mixhull.mihull import (
    _fiber_pool,
    bound_hrep_for,
    bound_vrep_for,
    mih_from_hrep,
    mih_from_vrep,
    mih_oracle,
    mixed_integer_hull,
    reduce_to_polytope,
    scale_polytope,
    x_ranges,
)
from mixhull.polyrep import HRep, vrep_to_hrep
from mixhull.ratcore import is_integral, mat_det

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
SEEDS = range(100)


@lru_cache(maxsize=None)
def example1(d, remark1):
    h, v = gen_example1(d, remark1=remark1)
    return h, v, mih_from_hrep(h), mih_oracle(h)


@lru_cache(maxsize=None)
def instance(seed):
    v = random_vrep(seed)
    return v, vrep_to_hrep(v), mih_oracle(v)


@lru_cache(maxsize=None)
def hrep_result(seed):
    return mih_from_hrep(instance(seed)[1])


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_01_example1_cut_off(record):
    def run():
        h, v, hull, oracle = example1(2, False)
        shared = set(v.points) & set(hull.vertices)
        separated = [separating_hyperplane(p, hull.vertices) for p in v.points]
        return hull, oracle, shared, separated

    (hull, oracle, shared, separated), secs = timed(run)
    ok = (
        hull.vertices == oracle.vertices
        and not shared
        and len(separated) == 8
        and all(s is not None and s[1] > 0 for s in separated)
        and secs < 60
    )
    record(1, ok, f"|verts(P_MI)|={len(hull)}, shared with P: {len(shared)}, 8/8 separated, {secs:.1f}s")
    assert ok


def test_criterion_02_remark1_growth(record):
    def run():
        return {d + 1: example1(d, True) for d in (1, 2)}

    res, secs = timed(run)
    counts = {k: len(r[2]) for k, r in res.items()}
    agree = all(r[2].vertices == r[3].vertices for r in res.values())
    ok = agree and counts[3] > 2**3 and all(len(r[1].points) == 2**k for k, r in res.items()) and secs < 120
    record(2, ok, f"|verts(P_MI)| = {counts[2]} (d+1=2), {counts[3]} (d+1=3) vs 2^(d+1); oracle agrees; {secs:.1f}s")
    assert ok


def test_criterion_03_vrep_equivalence(record):
    def run():
        return [mih_from_vrep(instance(s)[0]) == instance(s)[2] for s in SEEDS]

    res, secs = timed(run)
    ok = all(res) and secs < 600
    record(3, ok, f"{sum(res)}/100 mih_from_vrep = oracle, {secs:.1f}s")
    assert ok


def test_criterion_04_hrep_equivalence(record):
    def run():
        return [hrep_result(s) == instance(s)[2] for s in SEEDS]

    res, secs = timed(run)
    ok = all(res) and secs < 600
    record(4, ok, f"{sum(res)}/100 mih_from_hrep = oracle, {secs:.1f}s")
    assert ok


def test_criterion_05_scaling_soundness(record):
    failures = []
    for s in SEEDS:
        v, h, oracle = instance(s)
        t = hrep_result(s).scale.t
        ht = scale_polytope(h, t)
        # every vertex of P^t_MI is a vertex of some fiber over an integral x
        pool = _fiber_pool(ht, x_ranges(h))
        stretched = [z[: h.space.n] + tuple(t * q for q in z[h.space.n:]) for z in oracle.vertices]
        if not pool or not all(is_integral(z) for z in pool) or not all(is_integral(z) for z in stretched):
            failures.append(s)
        elif not set(stretched) <= set(pool):
            failures.append(s)
    ok = not failures
    record(5, ok, f"{100 - len(failures)}/100 scaled hulls fully integral")
    assert ok, failures


def integer_instance(seed):
    rng = random.Random(10_000 + seed)
    n = 1 + seed % 3
    return random_points(10_000 + seed, n, rng.randint(2, 8), pmax=8, qmax=4)


def test_criterion_06_integer_hull(record):
    def run():
        out = []
        for s in SEEDS:
            V = integer_instance(s)
            got = integer_hull_from_vertices(V)
            want = integer_hull_of_points(V)
            bound = intvertex_bound(len(V[0]), max_encoding_size(V), len(V))
            out.append(got == want and len(got) <= bound)
        return out

    res, secs = timed(run)
    ok = all(res)
    record(6, ok, f"{sum(res)}/100 Delaunay route = lattice oracle within the bound, {secs:.1f}s")
    assert ok


def test_criterion_07_vertex_bounds(record):
    cases = []
    for d, remark1 in ((2, False), (1, True), (2, True)):
        h, v, hull, _ = example1(d, remark1)
        cases.append((len(hull), bound_vrep_for(v), bound_hrep_for(h)))
    for s in SEEDS:
        v, h, oracle = instance(s)
        cases.append((len(oracle), bound_vrep_for(v), bound_hrep_for(h)))
    bad = [c for c in cases if not (c[0] <= c[1] and c[0] <= c[2])]
    ok = not bad
    record(7, ok, f"{len(cases) - len(bad)}/{len(cases)} instances within both bounds")
    assert ok


def box_cut(h, R):
    k = h.space.dim
    A, b = list(h.A), list(h.b)
    for j in range(k):
        e = tuple(F(int(i == j)) for i in range(k))
        A += [e, tuple(-q for q in e)]
        b += [F(R), F(R)]
    return HRep(h.space, A, b)


def ray_reduction_agrees(v, R=20):
    hull = mixed_integer_hull(v)
    Q, _ = reduce_to_polytope(v)
    truncated = mih_oracle(box_cut(vrep_to_hrep(v), R))
    O = set(truncated.vertices)

    def inside(z):
        return all(abs(q) <= R for q in z)

    # the vertices of P_MI are vertices of the truncation
    if not all(z in O for z in hull.vertices if inside(z)):
        return False
    # the truncation lies inside conv(V_MI) + cone(W)
    if not all(point_in_generated(z, hull.vertices, hull.rays) for z in O):
        return False
    # the reduced polytope's mixed-integer hull lies in the truncation
    if not all(point_in_generated(z, truncated.vertices) for z in mih_oracle(Q).vertices):
        return False
    # integral steps along the rays stay in the truncation
    for z in hull.vertices:
        for w in hull.rays:
            for k in range(1, 2 * R + 1):
                p = tuple(a + k * c for a, c in zip(z, w))
                if not inside(p):
                    break
                if not point_in_generated(p, truncated.vertices):
                    return False
    return True


def test_criterion_08_ray_reduction(record):
    res, secs = timed(lambda: [ray_reduction_agrees(random_unbounded_vrep(s)) for s in range(25)])
    ok = all(res)
    record(8, ok, f"{sum(res)}/25 unbounded instances agree on [-20, 20]^(n+d), {secs:.1f}s")
    assert ok


def test_criterion_09_concave_minimization(record):
    rng = random.Random(9)
    res = []
    for s in range(50):
        v, _, oracle = instance(s)
        pieces = [
            ([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(v.space.dim)], F(rng.randint(-5, 5)))
            for _ in range(1 + s % 4)
        ]
        f = PiecewiseAffineConcave(pieces)
        point, value = minimize_over_mih(v, f)
        res.append(value == min(f(z) for z in oracle.vertices) and point in oracle.vertices)
    ok = all(res)
    record(9, ok, f"{sum(res)}/50 minima equal the brute-force minimum")
    assert ok


def incircle(a, b, c, d):
    rows = [[p[0] - d[0], p[1] - d[1], (p[0] - d[0]) ** 2 + (p[1] - d[1]) ** 2] for p in (a, b, c)]
    orient = mat_det([[b[0] - a[0], b[1] - a[1]], [c[0] - a[0], c[1] - a[1]]])
    return mat_det(rows) * (1 if orient > 0 else -1)


def general_position_points(seed):
    rng = random.Random(seed)
    while True:
        pts = random_points(rng.randrange(10**9), 2, rng.randint(4, 10), pmax=20, qmax=3)
        if len(set(pts)) < len(pts):
            continue
        collinear = any(
            mat_det([[b[0] - a[0], b[1] - a[1]], [c[0] - a[0], c[1] - a[1]]]) == 0
            for a, b, c in combinations(pts, 3)
        )
        if collinear:
            continue
        if any(incircle(a, b, c, d) == 0 for a, b, c, d in combinations(pts, 4)):
            continue
        return pts


def test_criterion_10_delaunay(record):
    empty = 0
    for s in range(50):
        tri = delaunay_triangulate(general_position_points(s))
        good = all(
            incircle(*tri.cell_points(c), q) < 0 and not in_circumsphere(tri.cell_points(c), q)
            for c in tri.cells
            for i, q in enumerate(tri.points)
            if i not in c
        )
        empty += good
    square = delaunay_triangulate([(1, 1), (0, 1), (1, 0), (0, 0)])
    tie = repr(square.cells) == "((0, 1, 3), (0, 2, 3))"
    ok = empty == 50 and tie
    record(10, ok, f"{empty}/50 empty-circumcircle; square cells {square.cells}")
    assert ok


def test_criterion_11_cli(record, capsys):
    files = sorted(CORPUS.iterdir())
    codes = {}
    for path in files:
        codes[path.name] = cli.main(["verify", str(path)])
    capsys.readouterr()
    roundtrip = [format_instance(parse_instance(p.read_text())) == p.read_text() for p in files]
    ok = files and all(c == 0 for c in codes.values()) and all(roundtrip)
    bad = [n for n, c in codes.items() if c]
    record(11, ok, f"verify exit 0 on {len(files) - len(bad)}/{len(files)} corpus files; {sum(roundtrip)} byte-identical round trips")
    assert ok, bad


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))

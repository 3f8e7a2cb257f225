"""Command-line front end.

Exit codes: 0 success, 1 other error, 2 parse error, 3 infeasible,
4 unbounded, 5 verification mismatch.
"""
import argparse
import sys
import time
from fractions import Fraction as F
from pathlib import Path

from .concmin import minimize_over_mih
from .errors import (
    EmptyPolyhedron,
    MixedInfeasible,
    NonPolytopeInput,
    ParseError,
    PolyhedralError,
    UnboundedInput,
)
from .formats import format_instance, format_point, parse_instance, parse_objective
from .generators import gen_example1, gen_knapsack, random_vrep
from .inthull import integer_hull_from_vertices
from .lp import is_bounded
from .mihull import (
    bound_hrep_for,
    bound_vrep_for,
    mih_oracle,
    mixed_integer_hull,
    reduce_to_polytope,
)
from .polyrep import HRep, MixedSpace, VRep, hrep_to_vrep, vrep_to_hrep
from .ratcore import format_rat

EXIT_OK, EXIT_OTHER, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_UNBOUNDED, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5

METHODS = ("auto", "scaling", "subsets", "oracle")


class Mismatch(Exception):
    pass


def _read_instance(path):
    return parse_instance(Path(path).read_text())


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _polytope_forms(p):
    if isinstance(p, VRep):
        return vrep_to_hrep(p), p
    return p, hrep_to_vrep(p)


def _stats(hull, method, millis, polytope):
    h, v = _polytope_forms(polytope)
    t = "-" if hull.scale is None else str(hull.scale.t)
    bound_v = format_rat(bound_vrep_for(v)) if v.space.n >= 1 else "-"
    return (
        f"vertices: {len(hull.vertices)}\n"
        f"t: {t}\n"
        f"bound_hrep: {format_rat(bound_hrep_for(h))}\n"
        f"bound_vrep: {bound_v}\n"
        f"method: {method}\n"
        f"millis: {millis}\n"
    )


def _emit(result_text, stats_text, out):
    # with --out the result goes to the file and stats to stdout,
    # otherwise the result owns stdout and stats go to stderr
    if out is None:
        sys.stdout.write(result_text)
        sys.stderr.write(stats_text)
    else:
        Path(out).write_text(result_text)
        sys.stdout.write(stats_text)


def _resolve(method, p):
    if method == "auto":
        return "subsets" if isinstance(p, VRep) else "scaling"
    return method


def _bounded_part(p):
    bounded = p.is_polytope if isinstance(p, VRep) else is_bounded(p)
    return p if bounded else reduce_to_polytope(p)[0]


def cmd_hull(args):
    p = _read_instance(args.file)
    method = _resolve(args.method, p)
    start = time.perf_counter()
    res = mixed_integer_hull(p, method)
    millis = round((time.perf_counter() - start) * 1000)
    text = format_instance(VRep(res.space, res.vertices, res.rays))
    _emit(text, _stats(res, method, millis, _bounded_part(p)), args.out)
    return EXIT_OK


def cmd_integer_hull(args):
    p = _read_instance(args.file)
    if p.space.d != 0:
        raise ValueError("integer-hull needs d = 0")
    if isinstance(p, HRep):
        if not is_bounded(p):
            raise UnboundedInput("integer-hull needs a bounded polytope")
        p = hrep_to_vrep(p)
    if p.rays:
        raise NonPolytopeInput("integer-hull needs a polytope")
    start = time.perf_counter()
    res = integer_hull_from_vertices(p.points)
    millis = round((time.perf_counter() - start) * 1000)
    if res.empty:
        raise MixedInfeasible("the polytope has no integer point")
    text = format_instance(VRep(p.space, res.vertices))
    h = vrep_to_hrep(p)
    stats = (
        f"vertices: {len(res)}\n"
        "t: -\n"
        f"bound_hrep: {format_rat(bound_hrep_for(h))}\n"
        f"bound_vrep: {format_rat(bound_vrep_for(p))}\n"
        "method: delaunay\n"
        f"millis: {millis}\n"
    )
    _emit(text, stats, args.out)
    return EXIT_OK


def cmd_reduce(args):
    p = _read_instance(args.file)
    Q, rays = reduce_to_polytope(p)
    rays_text = format_instance(VRep(p.space, (), rays))
    if args.out is None and args.rays_out is None:
        sys.stdout.write(format_instance(Q) + rays_text)
        return EXIT_OK
    _write(format_instance(Q), args.out)
    _write(rays_text, args.rays_out)
    return EXIT_OK


def cmd_minimize(args):
    p = _read_instance(args.file)
    f = parse_objective(Path(args.objective).read_text(), dim=p.space.dim)
    if isinstance(p, HRep):
        if not is_bounded(p):
            raise UnboundedInput("minimize needs a bounded polytope")
    elif p.rays:
        raise UnboundedInput("minimize needs a bounded polytope")
    point, value = minimize_over_mih(p, f)
    sys.stdout.write(f"{format_rat(value)}@{format_point(point)}\n")
    return EXIT_OK


def cmd_verify(args):
    p = _read_instance(args.file)
    method = _resolve(args.method, p)
    got = mixed_integer_hull(p, method)
    want = mih_oracle(p)
    if sorted(got.vertices) != sorted(want.vertices):
        raise Mismatch(f"{method}: {len(got)} vertices, oracle: {len(want)}")
    sys.stdout.write(f"ok: {len(got)} vertices ({method} = oracle)\n")
    return EXIT_OK


def cmd_gen(args):
    if args.kind == "example1":
        h, v = gen_example1(args.d, args.b, remark1=args.remark1)
        if args.prefix is not None:
            Path(f"{args.prefix}.hrep").write_text(format_instance(h))
            Path(f"{args.prefix}.vrep").write_text(format_instance(v))
        else:
            _write(format_instance(h if args.form == "hrep" else v), None)
    elif args.kind == "knapsack":
        _write(format_instance(gen_knapsack(args.m, args.n, args.d, args.seed)), args.out)
    elif args.kind == "random":
        v = random_vrep(args.seed, n=args.n, d=args.d, npoints=args.points)
        _write(format_instance(v if args.form == "vrep" else vrep_to_hrep(v)), args.out)
    elif args.kind == "corpus":
        for name in write_corpus(args.directory):
            sys.stdout.write(name + "\n")
    return EXIT_OK


def corpus_instances():
    """``(file name, instance)`` pairs of the bundled verification corpus."""
    out = []
    h, v = gen_example1(2)
    out += [("example1_d2.hrep", h), ("example1_d2.vrep", v)]
    for d in (1, 2):
        h, v = gen_example1(d, remark1=True)
        out += [(f"remark1_d{d}.hrep", h), (f"remark1_d{d}.vrep", v)]
    tri = VRep(MixedSpace(1, 1), [(F(1, 2), 0), (F(5, 2), 0), (F(3, 2), 2)])
    out.append(("triangle.vrep", tri))
    for seed in range(100):
        v = random_vrep(seed)
        out += [(f"random_{seed:03d}.vrep", v), (f"random_{seed:03d}.hrep", vrep_to_hrep(v))]
    return out


def write_corpus(directory):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for name, p in corpus_instances():
        (directory / name).write_text(format_instance(p))
        names.append(name)
    return names


def build_parser():
    parser = argparse.ArgumentParser(prog="mixhull", description="Exact mixed-integer hulls of rational polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="mixed-integer hull of an instance file")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("integer-hull", help="integer hull of a pure integer polytope (d = 0)")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_integer_hull)

    p = sub.add_parser("reduce", help="cut an unbounded polyhedron down to a polytope plus rays")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--rays-out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("minimize", help="minimize a min-of-affine objective over the mixed-integer points")
    p.add_argument("file")
    p.add_argument("--objective", required=True)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify", help="compare a method against the brute-force oracle")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="write instance files")
    gsub = gen.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("example1", help="rotated box with one integer coordinate")
    g.add_argument("d", type=int)
    g.add_argument("--b", type=int, nargs="+")
    g.add_argument("--remark1", action="store_true", help="use b_i = 3 throughout")
    g.add_argument("--form", choices=("hrep", "vrep"), default="hrep")
    g.add_argument("--prefix", help="write PREFIX.hrep and PREFIX.vrep")
    g = gsub.add_parser("knapsack", help="random bounded knapsack polytope")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g.add_argument("d", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g = gsub.add_parser("random", help="seeded random polytope")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--points", type=int)
    g.add_argument("--form", choices=("hrep", "vrep"), default="vrep")
    g.add_argument("--out")
    g = gsub.add_parser("corpus", help="write the bundled verification corpus")
    g.add_argument("directory")
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except (MixedInfeasible, EmptyPolyhedron) as exc:
        code, msg = EXIT_INFEASIBLE, f"infeasible: {exc}"
    except (UnboundedInput, NonPolytopeInput) as exc:
        code, msg = EXIT_UNBOUNDED, f"unbounded: {exc}"
    except Mismatch as exc:
        code, msg = EXIT_MISMATCH, f"mismatch: {exc}"
    except (PolyhedralError, ValueError, OSError) as exc:
        code, msg = EXIT_OTHER, f"error: {exc}"
    sys.stderr.write(msg + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Plain-text instance and objective files.

Instance grammar::

    mixed n=<int> d=<int>
    hrep                      |  vrep
    a_1 ... a_{n+d} <= b      |  v z_1 ... z_{n+d}
    ...                       |  r w_1 ... w_{n+d}

Rationals are written ``p/q`` (``p`` when ``q = 1``); ``#`` starts a
comment.  Objective files hold one affine piece per line,
``c_1 ... c_{n+d} | c0``.
"""
import re

from .concmin import PiecewiseAffineConcave
from .errors import ParseError
from .polyrep import HRep, MixedSpace, VRep
from .ratcore import format_rat, parse_rat

_HEADER = re.compile(r"^mixed\s+n=(\d+)\s+d=(\d+)$")


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, raw, line


def _rat(token, lineno, raw):
    try:
        return parse_rat(token)
    except ValueError as exc:
        col = raw.find(token) + 1 if token in raw else None
        raise ParseError(str(exc), lineno, col) from None


def parse_instance(text):
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty instance", 1)
    lineno, raw, header = lines[0]
    m = _HEADER.match(header)
    if m is None:
        raise ParseError("expected header 'mixed n=<int> d=<int>'", lineno, 1)
    n, d = int(m.group(1)), int(m.group(2))
    try:
        space = MixedSpace(n, d)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None
    k = n + d
    if len(lines) < 2 or lines[1][2] not in ("hrep", "vrep"):
        where = lines[1][0] if len(lines) > 1 else lineno + 1
        raise ParseError("expected 'hrep' or 'vrep'", where, 1)
    kind = lines[1][2]
    body = lines[2:]
    if kind == "hrep":
        A, b = [], []
        for lineno, raw, line in body:
            if "<=" not in line:
                raise ParseError("inequality row needs '<='", lineno)
            lhs, rhs = line.split("<=", 1)
            coefs = lhs.split()
            if len(coefs) != k:
                raise ParseError(f"expected {k} coefficients, got {len(coefs)}", lineno)
            rhs_tokens = rhs.split()
            if len(rhs_tokens) != 1:
                raise ParseError("expected one right-hand side", lineno)
            A.append([_rat(t, lineno, raw) for t in coefs])
            b.append(_rat(rhs_tokens[0], lineno, raw))
        return HRep(space, A, b)
    points, rays = [], []
    for lineno, raw, line in body:
        tag, *tokens = line.split()
        if tag not in ("v", "r"):
            raise ParseError(f"expected 'v' or 'r', got {tag!r}", lineno, 1)
        if len(tokens) != k:
            raise ParseError(f"expected {k} coordinates, got {len(tokens)}", lineno)
        coords = [_rat(t, lineno, raw) for t in tokens]
        (points if tag == "v" else rays).append(coords)
    try:
        return VRep(space, points, rays)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_vector(z):
    return " ".join(format_rat(q) for q in z)


def format_instance(p, comment=None):
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"mixed n={p.space.n} d={p.space.d}")
    if isinstance(p, HRep):
        out.append("hrep")
        out += [f"{format_vector(row)} <= {format_rat(beta)}" for row, beta in zip(p.A, p.b)]
    else:
        out.append("vrep")
        out += [f"v {format_vector(z)}" for z in p.points]
        out += [f"r {format_vector(w)}" for w in p.rays]
    return "\n".join(out) + "\n"


def format_point(z):
    return "(" + ",".join(format_rat(q) for q in z) + ")"


def parse_objective(text, dim=None):
    pieces = []
    for lineno, raw, line in _lines(text):
        if "|" not in line:
            raise ParseError("objective piece needs '|'", lineno)
        lhs, rhs = line.split("|", 1)
        coefs = [_rat(t, lineno, raw) for t in lhs.split()]
        consts = rhs.split()
        if len(consts) != 1:
            raise ParseError("expected one constant after '|'", lineno)
        if dim is not None and len(coefs) != dim:
            raise ParseError(f"expected {dim} coefficients, got {len(coefs)}", lineno)
        pieces.append((coefs, _rat(consts[0], lineno, raw)))
    if not pieces:
        raise ParseError("objective has no pieces", 1)
    try:
        return PiecewiseAffineConcave(pieces)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_objective(f):
    return "".join(f"{format_vector(c)} | {format_rat(c0)}\n" for c, c0 in f.pieces)

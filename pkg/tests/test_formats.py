from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from mixhull.concmin import PiecewiseAffineConcave
from mixhull.errors import ParseError
from mixhull.formats import format_instance, format_objective, format_point, parse_instance, parse_objective
from mixhull.generators import random_vrep
from mixhull.polyrep import HRep, MixedSpace, VRep, vrep_to_hrep

from helpers import unit_square


def test_parse_vrep():
    v = parse_instance("mixed n=1 d=1\nvrep\nv 0 0\nv 1 0\n")
    assert isinstance(v, VRep) and len(v.points) == 2


def test_parse_hrep_square():
    h = parse_instance("mixed n=1 d=1\nhrep\n1 0 <= 1\n-1 0 <= 0\n0 1 <= 1\n0 -1 <= 0\n")
    assert isinstance(h, HRep)
    assert h == HRep(MixedSpace(1, 1), [[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 0, 1, 0])


def test_parse_comments_and_rays():
    text = "# a cone\nmixed n=1 d=1   # header\n\nvrep\nv 1/2 0\nr 2 4  # not primitive\n"
    v = parse_instance(text)
    assert v.points == ((F(1, 2), F(0)),)
    assert v.rays == ((F(1), F(2)),)


@pytest.mark.parametrize(
    "text, line",
    [
        ("mixed n=1 d=1\nvrep\nv 1/0 0\n", 3),
        ("mixed n=1 d=1\nvrep\nv 1 2 3\n", 3),
        ("mixed n=1\nvrep\n", 1),
        ("mixed n=1 d=1\nboth\n", 2),
        ("mixed n=1 d=1\nhrep\n1 0 >= 1\n", 3),
        ("mixed n=1 d=1\nhrep\n1 0 <= 1 2\n", 3),
        ("mixed n=1 d=1\nvrep\nq 1 2\n", 3),
        ("mixed n=1 d=1\nvrep\nv 1.5 2\n", 3),
        ("", 1),
        ("mixed n=0 d=0\nvrep\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert info.value.line == line


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        parse_instance("mixed n=1 d=1\nvrep\nv 0 7/0\n")
    assert info.value.column == 5


def test_format_instance():
    assert format_instance(unit_square()) == "mixed n=1 d=1\nhrep\n1 0 <= 1\n-1 0 <= 0\n0 1 <= 1\n0 -1 <= 0\n"
    v = VRep(MixedSpace(1, 1), [(F(1, 2), 0)], [(0, 1)])
    assert format_instance(v) == "mixed n=1 d=1\nvrep\nv 1/2 0\nr 0 1\n"
    assert format_instance(v, comment="hello").startswith("# hello\n")


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_roundtrip(seed):
    v = random_vrep(seed, require_mixed=False)
    for p in (v, vrep_to_hrep(v)):
        text = format_instance(p)
        assert parse_instance(text) == p
        assert format_instance(parse_instance(text)) == text


def test_reformat_canonicalizes():
    messy = "mixed n=1  d=1\nvrep\n  v 2/2   0\nv 0 0\n\n"
    assert format_instance(parse_instance(messy)) == "mixed n=1 d=1\nvrep\nv 0 0\nv 1 0\n"


def test_objective_roundtrip():
    text = "0 1 | 0\n0 -1 | 4\n"
    f = parse_objective(text, dim=2)
    assert f == PiecewiseAffineConcave([((0, 1), 0), ((0, -1), 4)])
    assert format_objective(f) == text


def test_objective_errors():
    with pytest.raises(ParseError):
        parse_objective("1 2 3\n")
    with pytest.raises(ParseError):
        parse_objective("# nothing\n")
    with pytest.raises(ParseError):
        parse_objective("1 2 | 0\n", dim=3)
    with pytest.raises(ParseError):
        parse_objective("1 | 0 1\n")


def test_format_point():
    assert format_point((F(1), F(-1, 2))) == "(1,-1/2)"

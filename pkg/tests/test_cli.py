import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from mixhull import cli
from mixhull.formats import format_instance, parse_instance
from mixhull.mihull import MixedIntegerHull, mih_from_vrep

from helpers import TRIANGLE, TRIANGLE_MIH

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def stats_of(text):
    return dict(line.split(": ", 1) for line in text.strip().splitlines())


def test_hull_to_file(files, tmp_path, capsys):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    out = tmp_path / "hull.vrep"
    assert cli.main(["hull", src, "--out", str(out)]) == 0
    assert list(parse_instance(out.read_text()).points) == TRIANGLE_MIH
    stats = stats_of(capsys.readouterr().out)
    assert set(stats) == {"vertices", "t", "bound_hrep", "bound_vrep", "method", "millis"}
    assert stats["vertices"] == "4" and stats["method"] == "subsets" and stats["t"] == "-"


def test_hull_stdout_and_scaling(files, capsys):
    src = files("sq.hrep", "mixed n=1 d=1\nhrep\n1 0 <= 1\n-1 0 <= 0\n0 2 <= 1\n0 -2 <= 0\n")
    assert cli.main(["hull", src]) == 0
    captured = capsys.readouterr()
    assert parse_instance(captured.out).points == ((0, 0), (0, F(1, 2)), (1, 0), (1, F(1, 2)))
    stats = stats_of(captured.err)
    assert stats["t"] == "2" and stats["method"] == "scaling"


@pytest.mark.parametrize("method", ["scaling", "subsets", "oracle"])
def test_hull_methods(files, capsys, method):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    assert cli.main(["hull", src, "--method", method]) == 0
    assert list(parse_instance(capsys.readouterr().out).points) == TRIANGLE_MIH


def test_hull_unbounded(files, capsys):
    src = files("ray.vrep", "mixed n=1 d=0\nvrep\nv 1/2\nr 1\n")
    assert cli.main(["hull", src]) == 0
    assert capsys.readouterr().out == "mixed n=1 d=0\nvrep\nv 1\nr 1\n"


def test_integer_hull(files, capsys):
    src = files("tri.vrep", "mixed n=2 d=0\nvrep\nv 0 0\nv 7/2 0\nv 0 7/2\n")
    assert cli.main(["integer-hull", src]) == 0
    assert capsys.readouterr().out == "mixed n=2 d=0\nvrep\nv 0 0\nv 0 3\nv 3 0\n"
    src = files("tri.hrep", "mixed n=1 d=0\nhrep\n1 <= 5/2\n-1 <= -1/2\n")
    assert cli.main(["integer-hull", src]) == 0
    assert capsys.readouterr().out == "mixed n=1 d=0\nvrep\nv 1\nv 2\n"


def test_integer_hull_needs_pure_integer(files, capsys):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    assert cli.main(["integer-hull", src]) == 1
    assert "d = 0" in capsys.readouterr().err


def test_reduce(files, tmp_path, capsys):
    src = files("ray.vrep", "mixed n=1 d=0\nvrep\nv 1/2\nr 1\n")
    q, r = tmp_path / "q.vrep", tmp_path / "r.vrep"
    assert cli.main(["reduce", src, "--out", str(q), "--rays-out", str(r)]) == 0
    assert q.read_text() == "mixed n=1 d=0\nvrep\nv 1/2\nv 3/2\n"
    assert r.read_text() == "mixed n=1 d=0\nvrep\nr 1\n"
    assert cli.main(["reduce", src]) == 0
    assert capsys.readouterr().out.count("mixed n=1 d=0") == 2


def test_minimize(files, capsys):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    obj = files("tent.obj", "0 1 | 0\n0 -1 | 4\n")
    assert cli.main(["minimize", src, "--objective", obj]) == 0
    assert capsys.readouterr().out == "0@(1,0)\n"


def test_minimize_linear_matches_hull(files, capsys):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    obj = files("lin.obj", "-1 2 | 1/2\n")
    assert cli.main(["minimize", src, "--objective", obj]) == 0
    value = F(capsys.readouterr().out.split("@")[0])
    assert value == min(-z[0] + 2 * z[1] + F(1, 2) for z in mih_from_vrep(TRIANGLE).vertices)


def test_verify_ok(capsys):
    assert cli.main(["verify", str(CORPUS / "example1_d2.hrep")]) == 0
    assert capsys.readouterr().out.startswith("ok: 24 vertices")


def test_verify_mismatch(files, capsys, monkeypatch):
    src = files("triangle.vrep", format_instance(TRIANGLE))
    monkeypatch.setattr(cli, "mih_oracle", lambda p: MixedIntegerHull(p.space, ((F(1), F(0)),)))
    assert cli.main(["verify", src]) == 5
    assert capsys.readouterr().err.startswith("mismatch:")


@pytest.mark.parametrize(
    "text, argv_tail, code",
    [
        ("mixed n=1 d=1\nvrep\nv 1/0 0\n", [], 2),
        ("mixed n=1 d=1\nvrep\nv 1/3 0\nv 2/3 1\n", [], 3),
        ("mixed n=1 d=1\nhrep\n1 0 <= 0\n-1 0 <= -1\n0 1 <= 0\n0 -1 <= 0\n", [], 3),
        ("mixed n=1 d=0\nvrep\nv 0\nr 1\n", [], 4),
    ],
)
def test_verify_exit_codes(files, capsys, text, argv_tail, code):
    src = files("x.inst", text)
    assert cli.main(["verify", src] + argv_tail) == code
    err = capsys.readouterr().err
    assert err.count("\n") == 1


def test_missing_file(capsys):
    assert cli.main(["hull", "/nonexistent/file.vrep"]) == 1


def test_gen_example1(tmp_path, capsys):
    prefix = tmp_path / "ex"
    assert cli.main(["gen", "example1", "1", "--b", "3", "5", "--prefix", str(prefix)]) == 0
    v = parse_instance((tmp_path / "ex.vrep").read_text())
    assert v.points == ((-4, -5), (-1, -5), (1, 5), (4, 5))
    assert cli.main(["gen", "example1", "2", "--remark1", "--form", "vrep"]) == 0
    assert len(parse_instance(capsys.readouterr().out).points) == 8
    assert cli.main(["gen", "example1", "1", "--b", "3"]) == 1


def test_gen_knapsack_deterministic(capsys):
    assert cli.main(["gen", "knapsack", "2", "1", "1", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["gen", "knapsack", "2", "1", "1", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first


def test_gen_random(capsys):
    assert cli.main(["gen", "random", "--seed", "5", "--form", "hrep"]) == 0
    assert "hrep" in capsys.readouterr().out


def test_bundled_corpus_is_current(tmp_path):
    names = cli.write_corpus(tmp_path)
    assert sorted(names) == sorted(p.name for p in CORPUS.iterdir())
    for name in names:
        assert (tmp_path / name).read_bytes() == (CORPUS / name).read_bytes()


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "mixhull.cli", "verify", str(CORPUS / "triangle.vrep")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("ok: 4 vertices")

"""Command-line behavior: exact output bytes, formats, exit codes."""

import json

import pytest

from tandemwalks.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_count_transversal_v0(capsys):
    rc, out = run(capsys, "count", "--model", "transversal", "--n", "9", "--v", "0")
    assert rc == 0
    assert out == "1 2 6 24 116 642 3938 26194 186042\n"


def test_count_models(capsys):
    rc, out = run(capsys, "count", "--model", "posets-edges", "--n", "8")
    assert rc == 0
    assert out == "1 1 1 2 5 12 32 93\n"
    rc, out = run(capsys, "count", "--model", "posets-vertices", "--n", "6")
    assert rc == 0
    assert out == "1 2 6 23 104 530\n"


def test_count_symbolic(capsys):
    rc, out = run(capsys, "count", "--model", "transversal", "--n", "5", "--v", "symbolic")
    assert rc == 0
    assert out == "1, 2, 6, 24 + v, 116 + 12*v\n"


def test_count_fraction(capsys):
    rc, out = run(capsys, "count", "--model", "transversal", "--n", "4", "--v", "1/2")
    assert rc == 0
    assert out.split()[-1] == "49/2"


def test_count_json(capsys):
    rc, out = run(capsys, "count", "--model", "posets-vertices", "--n", "4", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["model"] == "posets-vertices"
    assert data["terms"] == [1, 2, 6, 23]


def test_count_json_terms_stay_integers(capsys):
    # exact-rational arithmetic inside the DP must not leak Fraction
    # rendering into terms that are whole numbers
    rc, out = run(capsys, "count", "--model", "transversal", "--n", "4", "--format", "json")
    assert rc == 0
    assert json.loads(out)["terms"] == [1, 2, 6, 24]

    rc, out = run(
        capsys, "count", "--model", "transversal", "--n", "5", "--v", "1/2",
        "--format", "json",
    )
    assert rc == 0
    assert json.loads(out)["terms"] == [1, 2, 6, "49/2", 122]


def test_count_csv(capsys):
    rc, out = run(capsys, "count", "--model", "posets-edges", "--n", "3", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == ["n,term", "1,1", "2,1", "3,1"]


def test_asymptotics_text(capsys):
    rc, out = run(capsys, "asymptotics", "--model", "transversal", "--v", "0")
    assert rc == 0
    assert "gamma = 13.5\n" in out
    assert "xi = 0.875\n" in out
    assert "dfinite_obstruction = true" in out


def test_asymptotics_json(capsys):
    rc, out = run(capsys, "asymptotics", "--model", "posets-vertices", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["alpha"] == pytest.approx(6.0, abs=1e-9)
    assert data["dfinite_obstruction"] is False


def test_asymptotics_deterministic(capsys):
    _, first = run(capsys, "asymptotics", "--model", "posets-edges")
    _, second = run(capsys, "asymptotics", "--model", "posets-edges")
    assert first == second


@pytest.mark.parametrize(
    "suite,mx",
    [("kmsw", "4"), ("poset-v", "4"), ("transversal", "3"), ("plane-perm", "5"), ("gt", "5")],
)
def test_verify_suites(capsys, suite, mx):
    rc, out = run(capsys, "verify", "--suite", suite, "--max", mx)
    assert rc == 0
    assert "ok" in out


def test_generate_plane_perms(capsys):
    rc, out = run(capsys, "generate", "--class", "plane-perm", "--size", "4")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 23
    assert lines == sorted(lines)
    assert lines[0] == "1 2 3 4"


def test_generate_posets(capsys):
    rc, out = run(capsys, "generate", "--class", "poset", "--size", "4")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 2
    for line in lines:
        obj = json.loads(line)
        assert obj["vertices"] >= 2


def test_generate_bipolar_count(capsys):
    rc, out = run(capsys, "generate", "--class", "bipolar", "--size", "4")
    assert rc == 0
    assert len(out.splitlines()) == 22


def test_generate_transversal_count(capsys):
    rc, out = run(capsys, "generate", "--class", "transversal", "--size", "3")
    assert rc == 0
    assert len(out.splitlines()) == 6


def test_gt_text(capsys):
    rc, out = run(capsys, "gt", "--levels", "4")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "level 1: (1,1)x1 total 1"
    assert lines[3].endswith("total 23")


def test_gt_csv(capsys):
    rc, out = run(capsys, "gt", "--levels", "2", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == ["level,h,k,count", "1,1,1,1", "2,1,2,1", "2,2,1,1"]


def test_gt_json(capsys):
    rc, out = run(capsys, "gt", "--levels", "3", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert [lv["total"] for lv in data["levels"]] == [1, 2, 6]
    for lv in data["levels"]:
        assert sum(lab["count"] for lab in lv["labels"]) == lv["total"]


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["count", "--model", "nonsense", "--n", "3"],
        ["count"],
        ["count", "--model", "transversal", "--n", "3", "--v", "-1"],
        ["count", "--model", "posets-edges", "--n", "3", "--v", "symbolic"],
        ["verify", "--suite", "gt", "--max", "3", "--format", "csv"],
        ["generate", "--class", "poset", "--size", "3", "--format", "csv"],
        ["bogus-subcommand"],
        [],
    ):
        with pytest.raises(SystemExit) as err:
            main(argv)
        assert err.value.code == 2, argv
        capsys.readouterr()

import json

import pytest

from spincut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def check_schema(report):
    assert set(report) >= {"command", "inputs", "checks", "overall"}
    for c in report["checks"]:
        assert set(c) >= {"name", "residual", "tolerance", "pass"}
        assert isinstance(c["pass"], bool)
    assert report["overall"] == all(c["pass"] for c in report["checks"])


@pytest.mark.parametrize("argv", [
    ("verify", "clifford", "--samples", "10"),
    ("verify", "plane", "--ell", "3"),
    ("verify", "sphere", "--k", "0", "--n", "2", "--samples", "20"),
    ("verify", "cpn", "--n", "2", "--samples", "10"),
])
def test_verify_suites_pass(capsys, argv):
    code, report, err = run(capsys, *argv)
    check_schema(report)
    assert code == 0 and report["overall"]
    assert err.strip().endswith("overall: PASS")


def test_verify_sphere_reports_interval(capsys):
    _, report, _ = run(capsys, "verify", "sphere", "--k", "0", "--n", "2", "--samples", "10")
    assert report["moment_image"] == [0.5, 2.5]


def test_verify_cpn_reports_admissible_coefficient(capsys):
    _, report, _ = run(capsys, "verify", "cpn", "--n", "2", "--samples", "5")
    assert report["omega_fs_coefficient"] == "-3/2"
    assert any(c["name"].startswith("t = -3/2") and c["pass"] for c in report["checks"])


def test_cut_default_level(capsys):
    code, report, _ = run(capsys, "cut", "--k", "0", "--n", "2", "--ell", "3", "--samples", "10")
    check_schema(report)
    assert code == 0
    cut = report["cut"]
    assert cut["admissible"] and cut["validity"]
    assert cut["cut_plus"] == {"k": 1, "n": 1, "omega": 1}
    assert cut["cut_minus"] == {"k": 0, "n": 1, "omega": 1}


def test_cut_off_level(capsys):
    code, report, err = run(capsys, "cut", "--k", "0", "--n", "2", "--ell", "3", "--alpha", "1.0")
    assert code == 1
    assert report["cut"]["admissible"] is False
    assert "FAIL" in err


def test_cut_boundary(capsys):
    code, report, _ = run(capsys, "cut", "--k", "0", "--n", "2", "--ell", "1")
    assert code == 1
    assert report["cut"]["validity"] is False
    assert report["cut"]["reason"]
    failed = [c for c in report["checks"] if not c["pass"]]
    assert failed and all(c.get("detail") for c in failed)


@pytest.mark.parametrize("point,expected", [(("1", "0"), 2.5), (("0", "1"), 0.5)])
def test_moment_at_point(capsys, point, expected):
    code, report, _ = run(capsys, "moment", "--k", "0", "--n", "2", "--point", *point)
    assert code == 0
    assert report["values"][0]["phi"] == pytest.approx(expected, abs=1e-12)
    assert report["image"] == [0.5, 2.5]


def test_moment_grid_is_monotone(capsys):
    code, report, _ = run(capsys, "moment", "--k", "-1", "--n", "3", "--samples", "11")
    assert code == 0
    phis = [v["phi"] for v in report["values"]]
    assert phis == sorted(phis)
    assert phis[0] == pytest.approx(-0.5) and phis[-1] == pytest.approx(2.5)


def test_json_flag_indents(capsys):
    run(capsys, "moment", "--point", "1", "0")
    main(["moment", "--point", "1", "0", "--json"])
    out, _ = capsys.readouterr()
    assert "\n  " in out


def test_seed_reproducible(capsys):
    _, a, _ = run(capsys, "verify", "plane", "--seed", "7", "--samples", "5")
    _, b, _ = run(capsys, "verify", "plane", "--seed", "7", "--samples", "5")
    assert a == b


@pytest.mark.parametrize("argv", [
    ("verify", "plane", "--ell", "2"),
    ("cut", "--ell", "4"),
    ("moment", "--point", "1", "1"),
    ("verify", "cpn", "--n", "0"),
])
def test_malformed_input_exits_2(capsys, argv):
    code, report, err = run(capsys, *argv)
    assert code == 2 and report is None
    assert err.startswith("spincut: error:")


def test_usage_errors_exit_2(capsys):
    for argv in (["verify", "torus"], ["verify", "plane", "--ell", "x"], ["verify", "plane", "--samples", "0"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()

"""CLI behaviour: exit codes, JSON stability, sweeps."""

import json

from branchpolar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_row1(capsys):
    code, out = run_cli(capsys, "analyze", "x=t^5; y=t^12", "--seed", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["semigroup"]["generators"] == [5, 12]
    assert payload["differential_values"] == []
    assert payload["zariski_invariant"] is None
    assert payload["polar"]["type"]["branches"] == [[4, 11]]
    assert payload["polar"]["genericity"]["certified"] is True


def test_analyze_row5(capsys):
    code, out = run_cli(
        capsys, "analyze", "x=t^5; y=t^12+t^26+c t^28 where c=1", "--seed", "3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["differential_values"] == [31, 38, 43]
    assert payload["zariski_invariant"] == 26


def test_analyze_malformed_exits_2(capsys):
    code, out = run_cli(capsys, "analyze", "x=t^5; y=")
    assert code == 2
    assert "error" in json.loads(out)


def test_analyze_nonprimitive_reports_stage(capsys):
    code, out = run_cli(capsys, "analyze", "x=t^4; y=t^6")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["stage"] == "semigroup"


def test_json_byte_stability(capsys):
    _, out1 = run_cli(capsys, "analyze", "x=t^5; y=t^12+t^21", "--seed", "9")
    _, out2 = run_cli(capsys, "analyze", "x=t^5; y=t^12+t^21", "--seed", "9")
    assert out1 == out2


def test_analyze_file_input(tmp_path, capsys):
    p = tmp_path / "branch.txt"
    p.write_text("x=t^2; y=t^3\n", encoding="utf-8")
    code, out = run_cli(capsys, "analyze", str(p))
    assert code == 0
    assert json.loads(out)["semigroup"]["generators"] == [2, 3]


def test_family_command(capsys):
    code, out = run_cli(capsys, "family", "gamma-5-12/10", "--params", "c=7", "--seed", "1")
    assert code == 0
    inst = json.loads(out)["instances"][0]
    assert inst["parameters"]["c"] == "7"
    assert "t^16" in inst["spec"]


def test_family_rejects_bad_params(capsys):
    code, out = run_cli(capsys, "family", "gamma-5-12/5", "--params", "c=0")
    assert code == 2


def test_family_unknown(capsys):
    code, _ = run_cli(capsys, "family", "no-such-family")
    assert code == 2


def test_sweep_stratum_11(capsys):
    code, out = run_cli(capsys, "sweep", "gamma-5-12/11", "--trials", "4", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    groups = payload["report"]["groups"]
    assert len(groups) == 1
    assert groups[0]["type"]["branches"] == [[2, 5], [2, 5]]
    assert groups[0]["type"]["intersections"][0][1] == 10


def test_sweep_zero_trials_rejected(capsys):
    code, _ = run_cli(capsys, "sweep", "gamma-5-12/11", "--trials", "0")
    assert code == 2


def test_sweep_worker_independence(capsys):
    _, out1 = run_cli(capsys, "sweep", "gamma-5-12/10", "--trials", "3", "--seed", "4")
    _, out2 = run_cli(
        capsys, "sweep", "gamma-5-12/10", "--trials", "3", "--seed", "4",
        "--workers", "2",
    )
    assert out1 == out2


def test_families_listing(capsys):
    code, out = run_cli(capsys, "families")
    assert code == 0
    names = json.loads(out)["families"]
    assert "gamma-5-12/18" in names and "mult4-g2" in names

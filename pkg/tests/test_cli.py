import json
import math

import pytest

from lightcone_envelopes.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out


def test_member_envelope_mu_cone(capsys):
    rc, out = run(capsys, "member", "--envelope", "mu-cone", "--mu", "1", "--z", "2,0;0,1")
    assert rc == 0
    data = json.loads(out)
    assert data["verdict"] == "inside"


def test_member_shell_complement(capsys):
    rc, out = run(capsys, "member", "--envelope", "shell", "--m", "1", "--z", "0.5,0;0,0")
    assert rc == 0
    assert json.loads(out)["verdict"] == "excluded"


def test_member_region(capsys):
    rc, out = run(
        capsys,
        "member",
        "--region",
        '{"type":"DoubleCone","a":[-1,0],"b":[0,0]}',
        "--p",
        "-0.5,0",
    )
    assert rc == 0
    data = json.loads(out)
    assert data["verdict"] == "inside"
    assert data["margin"] == pytest.approx(math.sqrt(2) / 4)


def test_member_region_witness_search(capsys):
    rc, out = run(
        capsys,
        "--budget",
        "32",
        "member",
        "--region",
        '{"type":"HyperboloidShell","m1":1,"m2":3}',
        "--z",
        "0,0",
    )
    assert rc == 0
    assert json.loads(out)["verdict"] == "excluded"


def test_schema_error_exit_2(capsys):
    rc, _ = run(capsys, "member", "--region", '{"type":"Nope"}', "--p", "0,0")
    assert rc == 2
    rc, _ = run(capsys, "member", "--envelope", "mu-cone", "--z", "2,0")
    assert rc == 2  # missing --mu
    rc, _ = run(capsys, "member", "--envelope", "mu-cone", "--mu", "1", "--z", "bad")
    assert rc == 2


def test_unsupported_region_exit_3(capsys):
    rc, _ = run(
        capsys,
        "member",
        "--region",
        '{"type":"Wedge","shift":[0,0]}',
        "--z",
        "1,2;0,0.5",
    )
    assert rc == 3


def test_slice_csv_shape_and_header(capsys):
    rc, out = run(
        capsys,
        "slice",
        "--envelope",
        "hyperboloid-shell",
        "--m1",
        "1",
        "--m2",
        "3",
        "--y",
        "0,0.5",
        "--bounds",
        "0,3,-1,1",
        "--res",
        "4",
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x0,x1,verdict,margin"
    assert len(lines) == 1 + 16
    # the point (2, 0) carries "inside" at this imaginary part
    rc, out = run(
        capsys,
        "member",
        "--envelope",
        "hyperboloid-shell",
        "--m1",
        "1",
        "--m2",
        "3",
        "--z",
        "2,0;0,0.5",
    )
    assert json.loads(out)["verdict"] == "inside"


def test_slice_y_zero_reproduces_region(capsys):
    rc, out = run(
        capsys,
        "slice",
        "--envelope",
        "mu-cone",
        "--mu",
        "1",
        "--y",
        "0,0",
        "--bounds",
        "0,3,0,0",
        "--res",
        "4",
    )
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    verdicts = {float(r[0]): r[2] for r in rows}
    assert verdicts[0.0] == "excluded"
    assert verdicts[3.0] == "inside"


def test_slice_resolution_validation(capsys):
    rc, _ = run(
        capsys,
        "slice",
        "--envelope",
        "mu-cone",
        "--mu",
        "1",
        "--bounds",
        "0,1,0,1",
        "--res",
        "1",
    )
    assert rc == 2


def test_slice_threads_deterministic(capsys, monkeypatch):
    args = (
        "slice", "--envelope", "mu-cone", "--mu", "1", "--y", "0,1",
        "--bounds", "-1,2,-1,1", "--res", "5",
    )
    monkeypatch.setenv("LIGHTCONE_ENV_THREADS", "1")
    _, out1 = run(capsys, *args)
    monkeypatch.setenv("LIGHTCONE_ENV_THREADS", "4")
    _, out2 = run(capsys, *args)
    assert out1 == out2


def test_transform_phi(capsys):
    rc, out = run(capsys, "transform", "--map", "phi", "--z", "2,0")
    assert rc == 0
    data = json.loads(out)
    assert data["t"][0] == pytest.approx(-0.5)


def test_massgap_cli(capsys):
    rc, out = run(capsys, "massgap", "--m", "1", "--m1", "2")
    assert rc == 0
    data = json.loads(out)
    assert data["q_square"] < 0
    assert data["q_square"] == pytest.approx(
        5 - 4 * math.cosh(data["theta"]), abs=1e-9
    )
    rc, out = run(capsys, "massgap", "--m", "1", "--m1", "inf")
    assert rc == 0
    assert json.loads(out)["witness"] is None
    rc, out = run(capsys, "massgap", "--m", "2", "--m1", "3", "--s", "1,0")
    data = json.loads(out)
    assert data["q_square"] < 0


def test_massgap_bad_params_exit_2(capsys):
    rc, _ = run(capsys, "massgap", "--m", "0", "--m1", "2")
    assert rc == 2
    rc, _ = run(capsys, "massgap", "--m", "2", "--m1", "1")
    assert rc == 2


def test_oracle_pass_and_exit_codes(capsys):
    rc, out = run(capsys, "oracle", "pflug", "--n", "200")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["command"] == "oracle pflug"


def test_oracle_deterministic_output(capsys):
    rc1, out1 = run(capsys, "oracle", "massgap", "--seed", "5")
    rc2, out2 = run(capsys, "oracle", "massgap", "--seed", "5")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "verdict.json"
    rc, out = run(
        capsys, "--out", str(target), "member", "--envelope", "mu-cone",
        "--mu", "1", "--z", "2,0;0,1",
    )
    assert rc == 0
    assert out == ""
    assert json.loads(target.read_text())["verdict"] == "inside"


def test_continue_cli(capsys):
    rc, out = run(capsys, "continue", "--alphas", "0,0.2", "--nodes", "128")
    assert rc == 0
    data = json.loads(out)
    assert data["max_deviation"] <= 1e-6

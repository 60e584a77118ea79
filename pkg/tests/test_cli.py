import json
import subprocess
import sys


from banachkit.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_density(capsys):
    status, out, _ = run(capsys, "density", "--spec", "periodic(2;0)", "--window", "0:999", "--L", "100")
    assert status == 0
    assert json.loads(out) == {"value": "1/2", "window_length": 100, "achieving_window": [0, 99]}


def test_pws_not_found(capsys):
    status, out, _ = run(capsys, "pws", "--spec", "explicit(0)", "--window", "0:10", "--kmax", "2", "--lmin", "5")
    assert status == 1 and json.loads(out) == {"result": "NotFound"}


def test_jin(capsys):
    status, out, _ = run(capsys, "jin", "--specA", "periodic(2;0)", "--specB", "periodic(2;1)",
                         "--window", "0:9999", "--kmax", "2", "--lmin", "100")
    assert status == 0 and json.loads(out)["certificate"]["k"] == 1


def test_parse_and_errors(capsys):
    status, out, _ = run(capsys, "parse", "--spec", "union(periodic(6;3,1),ap(2;5))")
    assert status == 0 and json.loads(out) == {"canonical": "union(periodic(6;1,3), ap(2;5))"}
    status, _, err = run(capsys, "parse", "--spec", "periodic(2;")
    assert status == 2 and "position" in err
    status, _, _ = run(capsys, "frobnicate")
    assert status == 2
    status, _, err = run(capsys, "materialize", "--spec", "random(1/2;3)", "--window", "0:9")
    assert status == 2 and "--seed" in err
    status, _, _ = run(capsys, "materialize", "--spec", "periodic(2;0)", "--window", "5:1")
    assert status == 2


def test_negative_windows(capsys):
    status, out, _ = run(capsys, "materialize", "--spec", "periodic(5;0)", "--window", "-10:10")
    assert status == 0 and json.loads(out)["members"] == [-10, -5, 0, 5, 10]


def test_folner_and_cover(capsys):
    status, out, _ = run(capsys, "folner", "--spec", "periodic(3;0)", "--range", "0:9")
    assert status == 0
    assert json.loads(out) == {"shifts": [0, 1, 2], "m": 3, "bound": "3/1", "cover_verified": True}
    status, out, _ = run(capsys, "cover", "--spec", "periodic(3;0)", "--shifts", "0,1", "--window", "-50:50")
    assert status == 1 and json.loads(out) == {"covered": False}


def test_bohr_commands(capsys):
    status, out, _ = run(capsys, "bohr", "--freqs", "1/2", "--eps", "1/4", "--k", "1")
    assert status == 0 and json.loads(out) == {"member": False}
    status, out, _ = run(capsys, "bohr", "--freqs", "1/3", "--eps", "3/10",
                         "--spec", "periodic(3;0)", "--window", "-300:300")
    assert status == 0 and json.loads(out) == {"pass": True, "exceptional_density": "0/1"}
    status, out, _ = run(capsys, "pwbohr", "--spec", "periodic(1;0)", "--freqs", "0.3", "--eps", "0.1",
                         "--window", "0:999", "--interval", "0:499")
    assert status == 0 and json.loads(out) == {"contained": True}
    status, out, _ = run(capsys, "spectrum", "--spec", "periodic(2;0)", "--window", "0:4095",
                         "--grid", "4096", "--top", "1")
    assert status == 0 and out.splitlines() == ["frequency,magnitude", "1/2,1.0"]


def test_lattice_commands(capsys):
    status, out, _ = run(capsys, "lattice-density", "--spec", "periodic(2;0)", "--spec", "periodic(3;0)",
                         "--box", "0:29,0:29", "--L", "6")
    assert status == 0 and json.loads(out) == {"value": "1/6"}
    status, out, _ = run(capsys, "lattice-pws", "--spec", "periodic(2;0)", "--spec", "periodic(2;0)",
                         "--box", "0:99,0:99", "--kmax", "1", "--lmin", "50")
    assert status == 0 and json.loads(out)["k"] == 1


def test_check_round_trips(capsys, tmp_path):
    cases = [
        (["pws", "--spec", "periodic(4;0,1)", "--window", "0:500", "--kmax", "3", "--lmin", "50"],
         ["--spec", "periodic(4;0,1)"]),
        (["folner", "--spec", "union(periodic(4;0),ap(1;6))", "--range", "0:11"],
         ["--spec", "union(periodic(4;0),ap(1;6))"]),
        (["jin", "--specA", "periodic(3;0)", "--specB", "periodic(5;1,2)", "--window", "0:3000",
          "--kmax", "5", "--lmin", "100", "--probes", "6", "--seed", "11"],
         ["--specA", "periodic(3;0)", "--specB", "periodic(5;1,2)"]),
        (["lattice-pws", "--spec", "periodic(2;0)", "--spec", "periodic(3;1)", "--box", "0:59,0:59",
          "--kmax", "2", "--lmin", "20"],
         ["--spec", "periodic(2;0)", "--spec", "periodic(3;1)"]),
    ]
    for i, (emit, check) in enumerate(cases):
        path = tmp_path / f"cert{i}.json"
        assert main(emit + ["--out", str(path)]) == 0
        status, out, _ = run(capsys, "check", "--cert", str(path), *check)
        assert status == 0 and json.loads(out) == {"valid": True}, emit
    # a tampered certificate is rejected
    doc = json.loads((tmp_path / "cert0.json").read_text())
    doc["k"] -= 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    status, out, _ = run(capsys, "check", "--cert", str(bad), "--spec", "periodic(4;0,1)")
    assert status == 1 and json.loads(out) == {"valid": False}
    status, _, _ = run(capsys, "check", "--cert", str(tmp_path / "missing.json"), "--spec", "periodic(2;0)")
    assert status == 2


def test_tampered_folner_report(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"shifts": [0, 3], "m": 2, "bound": "3/1", "cover_verified": True}))
    status, out, _ = run(capsys, "check", "--cert", str(path), "--spec", "periodic(3;0)")
    assert status == 1


def test_determinism_subprocess():
    argv = [sys.executable, "-m", "banachkit", "jin", "--specA", "random(1/3;5)", "--specB",
            "periodic(4;1)", "--window", "0:4000", "--kmax", "6", "--lmin", "100",
            "--probes", "4", "--seed", "2"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == second.returncode
    assert first.stdout == second.stdout and first.stdout

import json
import subprocess
import sys
import time

import pytest

from hkdual.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out), out


def test_polarization_type_from_form_file(tmp_path, capsys):
    f = tmp_path / "phi.txt"
    f.write_text("0 0 1 0\n0 0 0 3\n-1 0 0 0\n0 -3 0 0\n")
    code, out, _ = run(capsys, "polarization-type", "--form", str(f))
    assert code == 0 and out.strip() == "(1,3)"


def test_polarization_type_literal_and_types(capsys):
    code, out, _ = run(capsys, "polarization-type", "--form", "[[0,2],[-2,0]]")
    assert out.strip() == "(2)"
    code, out, _ = run(capsys, "polarization-type", "--d1", "2", "--d2", "4")
    assert out.strip() == "(2,4)"


def test_kernel_dual(capsys):
    code, out, _ = run(capsys, "kernel", "--dual", "--d1", "1", "--d2", "3")
    assert code == 0 and out.strip() == "Z/3 ⊕ Z/3"
    code, data, _ = run_json(capsys, "kernel", "--matrix", "[[2,0],[0,3]]")
    assert data["kernel"] == "Z/6" and data["order"] == 6


def test_fujiki_kum2(capsys):
    code, data, _ = run_json(capsys, "fujiki", "--lattice", "kum2", "--vectors", "h,h,x,x")
    assert code == 0 and data["value"] == "6"
    code, out, _ = run(capsys, "fujiki", "--vectors", "y,y,y,y", "--define", "y=1,1,0,0,0,0,0")
    assert out.strip() == str(3 * 3 * 4)


def test_fujiki_custom_gram(capsys):
    code, out, _ = run(capsys, "fujiki", "--gram", "[[2]]", "--c", "1/2", "--half-dim", "1", "--vectors", "a,a", "--define", "a=3")
    assert code == 0 and out.strip() == "9"


def test_snf_json(capsys):
    code, data, _ = run_json(capsys, "snf", "--matrix", "[[2,4],[6,8]]")
    assert data["diagonal"] == [2, 4]
    assert data["cokernel"] == "Z/2 ⊕ Z/4"
    assert data["schemaVersion"] == 1


def test_galois_and_factorization(capsys):
    code, data, _ = run_json(capsys, "galois", "--n", "5", "--d1", "1", "--s", "5")
    assert data["group"] == "Z/6 ⊕ Z/6 ⊕ Z/6 ⊕ Z/6"
    assert data["cokernelMinimalIsogeny"] == data["group"]
    code, data, _ = run_json(capsys, "galois", "--max-m", "4")
    assert len(data["configs"]) > 3
    code, out, _ = run(capsys, "factorization", "--d1", "2", "--d2", "2")
    assert code == 0 and "True" in out


def test_cup_l(capsys):
    code, data, _ = run_json(capsys, "cup-l", "--d1", "1", "--d2", "3")
    assert data["matrix"] == [[0, 0, -3, 0], [0, 0, 0, -1], [3, 0, 0, 0], [0, 1, 0, 0]]


def test_orbits(capsys):
    code, data, _ = run_json(capsys, "orbits")
    assert (data["involutions"], data["orbits"]) == (81, 9)


def test_llv(capsys):
    code, data, _ = run_json(capsys, "llv", "--decomposition", "dual-kum2")
    assert data["euler"] == 36 and data["total"] == 68
    code, data, _ = run_json(capsys, "llv", "--so", "9", "--weight", "2")
    assert data["dimension"] == 44
    code, data, _ = run_json(capsys, "llv", "--b2", "23", "--n", "2")
    assert data["profile"][4] == 276


def test_dual_kummer_report_and_ledger_file(tmp_path, capsys):
    path = tmp_path / "ledger.json"
    code, data, _ = run_json(capsys, "dual-kummer-report", "--write-ledger", str(path))
    assert data["declared"]["stepwise"] == 18 and data["declared"]["status"] == "FLAGGED"
    assert data["model"]["burnside"] == 36
    assert data["orbifoldEuler"] == "36"
    code, data, _ = run_json(capsys, "dual-kummer-report", "--ledger", str(path))
    assert code == 0 and data["ledger"]["stepwise"] == 36


def test_json_flag_position(capsys):
    _, before, _ = run(capsys, "--json", "orbits")
    _, after, _ = run(capsys, "orbits", "--json")
    assert before == after and json.loads(before)["orbits"] == 9


@pytest.mark.parametrize(
    "argv",
    [
        ["snf", "--matrix", "[[1,2],[3]]"],
        ["snf", "--matrix", "/nonexistent/file"],
        ["polarization-type", "--form", "[[0,1],[1,0]]"],
        ["polarization-type"],
        ["kernel"],
        ["kernel", "--dual", "--d1", "2", "--d2", "3"],
        ["galois", "--n", "4", "--d1", "1", "--d2", "3"],
        ["fujiki", "--vectors", "h,q,x,x"],
        ["fujiki", "--vectors", "h,h"],
        ["fujiki", "--lattice", "k3", "--vectors", "h,h,x,x"],
        ["dual-kummer-report", "--ledger", "/nonexistent/ledger.json"],
        ["llv", "--weight", "1,2"],
        ["verify-paper", "--only", "nothing"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    for argv in (["bogus"], [], ["snf"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_bad_ledger_file(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"schemaVersion": 7}')
    assert run(capsys, "dual-kummer-report", "--ledger", str(p))[0] == 2
    p.write_text("not json")
    assert run(capsys, "dual-kummer-report", "--ledger", str(p))[0] == 2


def test_verify_default_run(capsys):
    t0 = time.perf_counter()
    code, data, _ = run_json(capsys, "verify-paper")
    assert time.perf_counter() - t0 < 10
    assert code == 0
    assert data["summary"]["FAIL"] == 0 and data["summary"]["FLAGGED"] == 1
    flagged = [c for c in data["checks"] if c["status"] == "FLAGGED"]
    assert "18" in flagged[0]["computed"] and "36" in flagged[0]["computed"]
    for c in data["checks"]:
        assert set(c) == {"name", "paperRef", "expected", "computed", "status"}


def test_verify_only_galois(capsys):
    code, data, _ = run_json(capsys, "verify-paper", "--only", "galois")
    assert code == 0
    assert data["checks"] and all(c["name"].startswith("Gal(phi)") for c in data["checks"])


def test_verify_failure_exit_code(monkeypatch, capsys):
    from hkdual import verify

    def broken():
        yield verify._check("deliberately wrong", "none", 1, 2)

    monkeypatch.setitem(verify.FAMILIES, "kernel", broken)
    code, out, _ = run(capsys, "verify-paper", "--only", "kernel")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [["verify-paper"], ["dual-kummer-report"], ["snf", "--matrix", "[[3,1],[1,5]]"], ["llv"], ["galois", "--max-m", "5"]],
)
def test_json_round_trip_is_byte_identical(argv, capsys):
    _, data, raw = run_json(capsys, *argv)
    assert dump_json(data) + "\n" == raw


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "hkdual", "kernel", "--dual", "--d1", "1", "--d2", "3"],
        capture_output=True,
        text=True,
        encoding="utf-8",
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "Z/3 ⊕ Z/3"

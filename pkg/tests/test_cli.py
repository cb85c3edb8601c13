import json
import pathlib
import subprocess
import sys

import pytest

from pairstab.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "examples_index.json": ["examples"],
    "examples_quadric.json": ["examples", "quadric-2x2"],
    "examples_xnil.json": ["examples", "sl3-xnil"],
    "examples_boundary.json": ["examples", "inaccessible-boundary"],
    "examples_gkz.json": ["examples", "gkz"],
    "chow_d3.json": ["chow-polytope", "--d", "3"],
    "disc_d3.json": ["disc-polytope", "--d", "3"],
    "resultant_quad.json": ["resultant", "--f=-1,0,1", "--g=-4,0,1"],
    "sl2_violation.json": ["pair-check-sl2", "--f=0,0,1", "--g=0,0,0,1"],
    "euler.json": ["euler-degree", "--h0", "0,4"],
    "scaled_d4.json": ["scaled-containment", "--d", "4"],
    "koszul_res.json": ["koszul-resultant", "--f=-1,0,1", "--g=-4,0,1", "--m", "4"],
}

EXIT_2_CASES = {"sl2_violation.json"}


@pytest.mark.parametrize("fname", sorted(GOLDEN_CASES))
def test_golden_output(fname):
    code, out = run(GOLDEN_CASES[fname])
    assert out == (GOLDEN / fname).read_text()
    assert code == (2 if fname in EXIT_2_CASES else 0)


def test_outputs_are_deterministic():
    for argv in GOLDEN_CASES.values():
        assert run(argv) == run(argv)


def test_output_schema_marker():
    _, out = run(["resultant", "--f=0,1", "--g=1,1"])
    doc = json.loads(out)
    assert doc["schema"] == "pairstab/v1"
    assert out.endswith("\n")


def _pair_doc():
    return {
        "v": {"N": 1, "shape": "Wedge(2)", "entries": [[[0, 1], 1]]},
        "w": {"N": 1, "shape": "Sym(2)", "entries": [[[1, 1], 1]]},
    }


def _write(tmp, name, doc):
    p = tmp / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_pair_check_file_roundtrip(tmp_path):
    path = _write(tmp_path, "pair.json", _pair_doc())
    code, out = run(["pair-check", "--pair", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"]["status"] == "not-refuted"
    assert doc["verdict"]["tori_tested"] == 65


def test_pair_check_unstable_exit_2(tmp_path):
    doc = _pair_doc()
    doc["w"]["entries"] = [[[2, 0], 1]]
    path = _write(tmp_path, "pair.json", doc)
    code, out = run(["pair-check", "--pair", path])
    assert code == 2
    verdict = json.loads(out)["verdict"]
    assert verdict["status"] == "unstable"
    assert verdict["witness"] == [1, -1]
    assert verdict["futaki"] == 2


def test_futaki_subcommand(tmp_path):
    doc = _pair_doc()
    doc["w"]["entries"] = [[[2, 0], 1]]
    path = _write(tmp_path, "pair.json", doc)
    code, out = run(["futaki", "--pair", path, "--u", "1,-1"])
    assert code == 0
    assert json.loads(out)["futaki"] == 2


def test_characteristic_subcommand(tmp_path):
    vec = {"N": 1, "shape": "Sym(2)", "entries": [[[2, 0], 1]]}
    path = _write(tmp_path, "vec.json", vec)
    code, out = run(["characteristic", "--vector", path])
    assert code == 0
    doc = json.loads(out)
    assert doc["chi_min"] == [2, 0]
    assert doc["chi_min_traceless"] == [1, -1]
    assert doc["ht_sq"] == 2


def test_characteristic_height_zero_is_error(tmp_path):
    vec = {"N": 1, "shape": "Sym(2)", "entries": [[[1, 1], 1]]}
    path = _write(tmp_path, "vec.json", vec)
    code, out = run(["characteristic", "--vector", path])
    assert code == 1
    doc = json.loads(out)
    assert doc["op"] == "characteristic"
    assert "error" in doc


def test_energy_profile_csv(tmp_path):
    path = _write(tmp_path, "pair.json", _pair_doc())
    code, out = run(
        ["energy-profile", "--pair", path, "--u", "1,-1", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,log_t2,nu"
    assert len(lines) == 26  # header + default grid


def test_energy_profile_json_slope(tmp_path):
    doc = _pair_doc()
    doc["w"]["entries"] = [[[2, 0], 1]]
    path = _write(tmp_path, "pair.json", doc)
    code, out = run(["energy-profile", "--pair", path, "--u", "1,-1"])
    assert code == 0
    parsed = json.loads(out)
    assert abs(parsed["slope"] - 2.0) < 1e-9
    assert parsed["futaki"] == 2


def test_toric_extend_exit_codes(tmp_path):
    a = _write(tmp_path, "a.json", {"points": [[0], [1], [2], [3]]})
    b_ok = _write(tmp_path, "b1.json", {"points": [[0], [3]]})
    b_bad = _write(tmp_path, "b2.json", {"points": [[0], [1]]})
    code, out = run(["toric-extend", "--A", a, "--B", b_ok])
    assert code == 0
    assert json.loads(out)["extends"] is True
    code, out = run(["toric-extend", "--A", a, "--B", b_bad])
    assert code == 2
    doc = json.loads(out)
    assert doc["extends"] is False
    assert "star_violator" in doc
    assert doc["lhs"] > doc["rhs"]


def test_malformed_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"v": \n  oops}')
    code, out = run(["pair-check", "--pair", str(p)])
    assert code == 1
    doc = json.loads(out)
    assert doc["line"] == 2
    assert doc["column"] == 3
    assert doc["op"] == "pair-check"


def test_missing_file_is_exit_1():
    code, out = run(["pair-check", "--pair", "/no/such/file.json"])
    assert code == 1
    assert "no such file" in json.loads(out)["error"]


def test_argparse_errors_are_exit_1():
    code, out = run(["no-such-command"])
    assert code == 1
    assert out == ""
    code, _ = run(["resultant", "--f=0,1"])  # missing --g
    assert code == 1


def test_inexact_complex_is_exit_1(tmp_path):
    doc = {"dims": [2, 2], "maps": [[[1, 2], [2, 4]]]}
    path = _write(tmp_path, "c.json", doc)
    code, out = run(["torsion", "--complex", path])
    assert code == 1
    assert "not exact" in json.loads(out)["error"]


def test_torsion_subcommand(tmp_path):
    doc = {"dims": [2, 2], "maps": [[[1, 2], [3, 4]]]}
    path = _write(tmp_path, "c.json", doc)
    code, out = run(["torsion", "--complex", path])
    assert code == 0
    parsed = json.loads(out)
    assert parsed["torsion"] == -2
    assert parsed["ranks"] == [2]


def test_output_flag_writes_file(tmp_path):
    target = tmp_path / "out.json"
    code, out = run(["chow-polytope", "--d", "2", "--output", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["d"] == 2


def test_seed_env_changes_default(tmp_path, monkeypatch):
    path = _write(tmp_path, "pair.json", _pair_doc())
    monkeypatch.setenv("PAIRSTAB_SEED", "7")
    _, out_env = run(["pair-check", "--pair", path])
    monkeypatch.delenv("PAIRSTAB_SEED")
    _, out_exp = run(["pair-check", "--pair", path, "--seed", "7"])
    assert out_env == out_exp


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "pairstab.cli", "resultant", "--f=-1,0,1", "--g=-4,0,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["resultant"] == 9


def test_console_script_exit_2():
    proc = subprocess.run(
        [sys.executable, "-m", "pairstab.cli", "pair-check-sl2", "--f=0,0,1", "--g=0,0,0,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["semistable"] is False

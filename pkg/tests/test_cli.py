import io
import json
import subprocess
import sys

import numpy as np
import pytest

from bellsym.cli import main, read_matrix_file, write_matrix_file
from bellsym.errors import ParseError

from conftest import EQ7, EQ10, MIXED


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def state_file(tmp_path):
    def make(m, name="state.json"):
        path = tmp_path / name
        write_matrix_file(path, m)
        return str(path)

    return make


def test_matrix_file_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    path = tmp_path / "m.json"
    write_matrix_file(path, m)
    assert np.array_equal(read_matrix_file(path), m)
    doc = json.loads(path.read_text())
    assert np.asarray(doc["matrix"]).shape == (4, 4, 2)


@pytest.mark.parametrize("text", [
    "not json",
    '{"rows": []}',
    '{"matrix": [[[1, 0]]]}',
    '{"matrix": ' + json.dumps([[[1, 0]] * 4] * 3) + "}",
    '{"matrix": ' + json.dumps([[[1, 0, 0]] * 4] * 4) + "}",
    '{"matrix": ' + json.dumps([[["1", 0]] * 4] * 4) + "}",
    '{"matrix": ' + json.dumps([[[True, 0]] * 4] * 4) + "}",
    '{"matrix": ' + json.dumps([[[1, 0]] * 4] * 3 + [[[1, 0]] * 3 + [[float("nan"), 0]]]) + "}",
])
def test_parse_errors(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(ParseError):
        read_matrix_file(path)
    code, _ = run(["check", str(path)])
    assert code == 2


def test_missing_file_is_parse_error(tmp_path):
    assert run(["concurrence", str(tmp_path / "absent.json")])[0] == 2


def test_check_phi_plus(state_file):
    code, text = run(["check", state_file(EQ10), "--json"])
    assert code == 0
    doc = json.loads(text)
    rep = doc["report"]
    assert doc["grid_size"] == 32 and doc["tool_version"]
    assert rep["concurrence"] == pytest.approx(1, abs=1e-10)
    for key in ("hermiticity_residual", "trace_residual", "reduced_a_residual", "reduced_b_residual",
                "swap_parties_residual", "swap_axes_residual", "rotational_residual"):
        assert rep[key] <= 1e-10
    assert rep["atomic_residuals"]["parallel"] <= 1e-10


def test_check_semiclassical_text_and_json(state_file):
    path = state_file(EQ7)
    code, text = run(["check", path])
    assert code == 0
    assert "atomic_residuals[parallel]" in text and "0.125" in text
    code, text = run(["check", path, "--json", "--grid", "16"])
    assert json.loads(text)["report"]["atomic_residuals"]["parallel"] == pytest.approx(0.125, abs=1e-12)


def test_check_trace_two(state_file, capsys):
    code, _ = run(["check", state_file(2 * EQ10)])
    assert code == 3
    assert "TraceNotOne" in capsys.readouterr().err


def test_check_not_positive(state_file, capsys):
    from bellsym.derivation import build_rho_r

    assert run(["check", state_file(build_rho_r(0.6, 0.1))])[0] == 3
    assert "positive" in capsys.readouterr().err


@pytest.mark.parametrize("kind,d,c", [("phi+", "0.5", "0.5"), ("psi-", "0", "0"), ("phi-", "0.5", "-0.5"),
                                      ("psi+", "0", "0")])
def test_derive(kind, d, c):
    code, text = run(["derive", kind])
    assert code == 0
    assert f"d={d} c={c}" in text


def test_derive_unknown_kind():
    assert run(["derive", "chi+"])[0] == 5


def test_derive_then_check_round_trip(tmp_path):
    path = str(tmp_path / "phi.json")
    assert run(["derive", "phi+", "--out", path])[0] == 0
    assert np.abs(read_matrix_file(path) - EQ10).max() <= 1e-12
    code, text = run(["check", path, "--json"])
    rep = json.loads(text)["report"]
    assert code == 0
    assert rep["concurrence"] == pytest.approx(1, abs=1e-10)
    assert max(rep["reduced_a_residual"], rep["swap_parties_residual"], rep["rotational_residual"]) <= 1e-10


def test_concurrence_command(state_file):
    assert run(["concurrence", state_file(EQ10)]) == (0, "concurrence = 1\n")
    assert run(["concurrence", state_file(MIXED)]) == (0, "concurrence = 0\n")


def test_atomic_command(state_file):
    code, text = run(["atomic", state_file(EQ7), "--mode", "parallel", "--grid", "16"])
    assert code == 0 and "0.125" in text
    assert run(["atomic", state_file(EQ7), "--mode", "sideways"])[0] == 5


def test_chsh_command(state_file):
    code, text = run(["chsh", state_file(EQ10)])
    assert code == 0
    assert text.startswith("S = 2.828427125") and "quantum_excess = true" in text
    code, text = run(["chsh", state_file(EQ7), "--angles", "0", "45", "22.5", "67.5"])
    assert text.startswith("S = 1.414213562") and "quantum_excess = false" in text
    quarter = str(np.pi / 4)
    code, text = run(["chsh", state_file(EQ10), "--radians", "--angles", "0", quarter, str(np.pi / 8),
                      str(3 * np.pi / 8)])
    assert text.startswith("S = 2.828427125")
    code, text = run(["chsh", state_file(MIXED)])
    assert text.startswith("S = 0 ") and "false" in text


def test_sweep_csv(tmp_path):
    path = tmp_path / "sweep.csv"
    code, _ = run(["sweep", "--c", "middle", "--eps-max", "0.1", "--steps", "11", "--out", str(path)])
    assert code == 0
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == "epsilon,concurrence,atomic_residual"
    assert len(lines) == 13
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[1:-1]])
    assert np.allclose(rows[:, 1], 1 - 6 * rows[:, 0], atol=1e-12)
    assert lines[-1].startswith("# slope=")
    assert float(lines[-1].split("=")[1]) == pytest.approx(-6, abs=1e-9)


def test_sweep_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        run(["sweep", "--c", "high", "--eps-max", "0.1", "--steps", "11", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()
    assert float(a.read_text().splitlines()[-1].split("=")[1]) == pytest.approx(-4, abs=1e-9)


def test_sweep_rejections(tmp_path):
    out = str(tmp_path / "x.csv")
    assert run(["sweep", "--c", "middle", "--eps-max", "0", "--steps", "2", "--out", out])[0] == 4
    assert run(["sweep", "--c", "middle", "--eps-max", "0.3", "--steps", "2", "--out", out])[0] == 4
    assert run(["sweep", "--c", "centre", "--eps-max", "0.1", "--steps", "2", "--out", out])[0] == 5


def test_console_entry_point(state_file):
    proc = subprocess.run([sys.executable, "-m", "bellsym.cli", "concurrence", state_file(EQ10)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "concurrence = 1"

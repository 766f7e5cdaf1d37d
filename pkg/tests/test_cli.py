"""Command line behavior: outputs, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from quivalg import (
    direct_sum,
    format_algebra,
    format_module,
    indec_projectives,
    simples,
)
from quivalg.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def l2_files(tmp_path_factory, l2):
    """Algebra file plus a two-summand module file referencing it by path."""
    root = tmp_path_factory.mktemp("l2io")
    alg_path = root / "l2.alg"
    alg_path.write_text(format_algebra(l2.quiver, l2.relations))
    mixed = direct_sum([simples(l2)[0], indec_projectives(l2)[0]])[0]
    mod_path = root / "mixed.mod"
    mod_path.write_text(format_module(mixed, str(alg_path)))
    return alg_path, mod_path


def test_verify_paper_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 0
    assert "dim_b_hom = 165  [pass]" in out
    assert "gldim_b = 3  [pass]" in out
    assert out.strip().endswith("result = pass")


def test_verify_paper_low_bound_inconclusive(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--bound", "2")
    assert code == 2
    assert "[inconclusive]" in out
    assert "result = inconclusive" in out


def test_end_quiver_file_roundtrip(capsys, l2_files):
    _, mod_path = l2_files
    code, out, _ = run_cli(capsys, "end-quiver", str(mod_path))
    assert code == 0
    assert "# summary" in out
    assert "adjacency = " in out
    assert "end_dim = 5" in out
    assert "incomplete = False" in out


def test_end_quiver_structured(capsys, l2_files):
    _, mod_path = l2_files
    code, out, _ = run_cli(capsys, "end-quiver", str(mod_path), "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    assert payload["end_dim"] == 5
    assert payload["relation_count"] == len(
        [ln for ln in payload["presentation"].splitlines() if ln.startswith("relation")]
    )
    assert payload["incomplete"] is False


def test_tau2_chain_through_files(capsys, tmp_path):
    da = tmp_path / "da.mod"
    da.write_text(
        subprocess.run(
            [
                sys.executable,
                "-c",
                "from quivalg import two_loop_local_algebra, regular_module, dual, format_module;"
                "a = two_loop_local_algebra();"
                "print(format_module(dual(regular_module(a.opposite)), 'builtin:two-loop-local'), end='')",
            ],
            capture_output=True,
            text=True,
            check=True,
        ).stdout
    )
    out1 = tmp_path / "u1.mod"
    code, out, _ = run_cli(capsys, "tau2", str(da), "--out", str(out1))
    assert code == 0
    assert "total_dim = 8" in out
    code, out, _ = run_cli(capsys, "tau2", str(out1))
    assert code == 0
    assert "total_dim = 5" in out


def test_gldim_and_domdim_builtin(capsys):
    code, out, _ = run_cli(capsys, "gldim", "builtin:end-reference")
    assert code == 0 and "gldim = 3" in out
    code, out, _ = run_cli(capsys, "domdim", "builtin:end-reference")
    assert code == 0 and "domdim = 3" in out


def test_gldim_bound_exit_two(capsys):
    code, out, _ = run_cli(capsys, "gldim", "builtin:two-loop-local", "--bound", "4")
    assert code == 2
    assert "gldim = exceeds-bound" in out
    assert "bound = 4" in out


def test_domdim_bound_exit_two(capsys, l2_files):
    alg_path, _ = l2_files
    code, out, _ = run_cli(capsys, "domdim", str(alg_path), "--bound", "3")
    assert code == 2
    assert "domdim = at-least-bound" in out


def test_cartan_local(capsys):
    code, out, _ = run_cli(capsys, "cartan", "builtin:two-loop-local")
    assert code == 0
    assert "cartan_matrix = [[6]]" in out
    assert "cartan_det = 6" in out


def test_probe_ext(capsys):
    code, out, _ = run_cli(capsys, "probe-ext", "--imax", "1")
    assert code == 0
    assert "ext1_da_a = 0" in out
    assert "ext1_m_m = 0" in out


def test_input_errors_exit_three(capsys, tmp_path):
    code, _, err = run_cli(capsys, "gldim", str(tmp_path / "missing.alg"))
    assert code == 3 and "cannot read" in err
    code, _, err = run_cli(capsys, "gldim", "builtin:nope")
    assert code == 3 and "unknown builtin" in err
    bad = tmp_path / "bad.mod"
    bad.write_text("algebra builtin:two-loop-local\nvertex v 1\narrow zz\n0\n")
    code, _, err = run_cli(capsys, "tau2", str(bad))
    assert code == 3 and "unknown arrow" in err
    code, _, err = run_cli(capsys, "probe-ext", "--imax", "0")
    assert code == 3


def test_invalid_module_rejected(capsys, tmp_path):
    # x acting as identity breaks x^2 = 0 over the one-loop algebra
    p = tmp_path / "l2.alg"
    p.write_text("vertices v\narrow x: v -> v\nrelation x*x\n")
    bad = tmp_path / "notmod.mod"
    bad.write_text(f"algebra {p}\nvertex v 1\narrow x\n1\n")
    code, _, err = run_cli(capsys, "tau2", str(bad))
    assert code == 3
    assert "not a module" in err


def test_cartan_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "cartan", "builtin:end-reference")
    code2, out2, _ = run_cli(capsys, "cartan", "builtin:end-reference")
    assert (code1, out1) == (code2, out2)


def test_console_script_wiring():
    proc = subprocess.run(
        ["quivalg", "gldim", "builtin:end-reference"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "gldim = 3" in proc.stdout

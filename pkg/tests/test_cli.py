"""End-to-end tests for the command-line interface."""

from pathlib import Path

import pytest

from weilzeta.cli import RunConfig, build_parser, main
from weilzeta.errors import InvalidInput

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_projective_line(capsys, tmp_path):
    path = tmp_path / "p1.variety"
    path.write_text("field p=2\nambient projective dim=1 vardim=1\n")
    code, out, _ = _run(capsys, ["count", str(path), "--mmax", "3"])
    assert code == 0
    assert "N_1 = 3" in out
    assert "N_2 = 5" in out
    assert "N_3 = 9" in out


def test_count_elliptic_curve_sample(capsys):
    code, out, _ = _run(capsys, ["count", str(SAMPLES / "ell_f5.variety"), "--mmax", "2"])
    assert code == 0
    assert "N_1 = 8" in out
    assert "N_2 = 32" in out


def test_count_malformed_file_exits_2(capsys):
    code, out, err = _run(capsys, ["count", str(SAMPLES / "bad_token.variety")])
    assert code == 2
    assert "error: ParseError" in err


def test_count_missing_file_fails_cleanly(capsys):
    code, _, err = _run(capsys, ["count", str(SAMPLES / "missing.variety")])
    assert code == 1
    assert err.startswith("error:")


def test_count_budget_exceeded_exits_3(capsys):
    code, _, err = _run(
        capsys, ["count", str(SAMPLES / "ell_f5.variety"), "--mmax", "1", "--budget", "5"]
    )
    assert code == 3
    assert "EnumerationBudgetExceeded" in err


def test_weil_projective_plane(capsys):
    code, out, _ = _run(capsys, ["weil", str(SAMPLES / "p2_f3.variety"), "--mmax", "3"])
    assert code == 0
    assert "verdict: PASS" in out
    assert "(1) / (1 - 13*t + 39*t^2 - 27*t^3)" in out
    assert "P_0 = 1 - t" in out
    assert "P_2 = 1 - 3*t" in out
    assert "P_4 = 1 - 9*t" in out
    assert "functional equation sign: -1" in out


def test_weil_elliptic_curve_full_pipeline(capsys):
    code, out, _ = _run(
        capsys,
        ["weil", str(SAMPLES / "ell_f5.variety"), "--mmax", "4", "--betti", "1,2,1"],
    )
    assert code == 0
    assert "verdict: PASS" in out
    assert "P_1 = 1 + 2*t + 5*t^2" in out
    assert "functional equation sign: +1" in out
    assert "b_1: pass" in out


def test_weil_betti_mismatch_fails(capsys):
    code, out, _ = _run(
        capsys,
        ["weil", str(SAMPLES / "ell_f5.variety"), "--mmax", "4", "--betti", "1,3,1"],
    )
    assert code == 1
    assert "verdict: FAIL" in out
    assert "b_1: FAIL" in out


def test_weil_wrong_vardim_fails(capsys, tmp_path):
    path = tmp_path / "wrong.variety"
    path.write_text("field p=2\nambient projective dim=1 vardim=0\n")
    code, out, _ = _run(capsys, ["weil", str(path), "--mmax", "2"])
    assert code == 1
    assert "verdict: FAIL" in out
    assert "WeightOutOfRange" in out


def test_cm_sweep_reports_zero_mismatches(capsys):
    code, out, _ = _run(capsys, ["cm", "5", "37"])
    assert code == 0
    assert "p=5: gross=-2 brute=-2" in out
    assert "p=13: gross=6 brute=6" in out
    assert "mismatches: 0" in out
    assert "verdict: PASS" in out


def test_lattice_sqrt2_report(capsys):
    code, out, _ = _run(capsys, ["lattice", str(SAMPLES / "sqrt2.lattice")])
    assert code == 0
    assert "endomorphism ring rank: 2" in out
    assert "matrix [[0, 2], [1, 0]]" in out
    assert "endomorphism matrices commute: yes" in out
    assert "density witness" in out
    assert "verdict: PASS" in out


def test_lattice_cubic_sample_rank_one(capsys):
    code, out, _ = _run(capsys, ["lattice", str(SAMPLES / "cbrt2.lattice")])
    assert code == 0
    assert "endomorphism ring rank: 1" in out


def test_dimgroup_report(capsys):
    code, out, _ = _run(
        capsys, ["dimgroup", str(SAMPLES / "hecke_3111.matrix"), "--det-check", "2"]
    )
    assert code == 0
    assert "lambda minpoly: 2 - 4*x + x^2" in out
    assert "level coherence tau(v,k) = tau(Tv,k+1): exact" in out
    assert "shift scaling tau(shift x) = lambda*tau(x): exact" in out
    assert "minimal polynomial: 1 - 4*x + 2*x^2" in out
    assert "verified algebraic unit: false" in out
    assert "verdict: PASS" in out


def test_dimgroup_det_check_mismatch_exits_2(capsys):
    code, _, err = _run(
        capsys, ["dimgroup", str(SAMPLES / "hecke_3111.matrix"), "--det-check", "3"]
    )
    assert code == 2
    assert "InvalidInput" in err


def test_out_flag_writes_report_file(capsys, tmp_path):
    out_path = tmp_path / "report.txt"
    code, out, _ = _run(
        capsys,
        ["count", str(SAMPLES / "ell_f5.variety"), "--mmax", "1", "--out", str(out_path)],
    )
    assert code == 0
    assert out == ""
    text = out_path.read_text()
    assert "N_1 = 8" in text


def test_run_config_validation():
    with pytest.raises(InvalidInput):
        RunConfig(command="count", path="x", budget=0)
    with pytest.raises(InvalidInput):
        RunConfig(command="weil", path="x", rh_tol=0.7)
    with pytest.raises(InvalidInput):
        RunConfig(command="weil", path="x", weight_tol=0.0)


def test_cli_flag_validation_exits_2(capsys):
    code, _, err = _run(
        capsys, ["count", str(SAMPLES / "ell_f5.variety"), "--budget", "0"]
    )
    assert code == 2
    assert "InvalidInput" in err


def test_parser_rejects_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["frobnicate"])
    assert info.value.code == 2


def test_timing_lines_are_marked(capsys):
    code, out, _ = _run(capsys, ["count", str(SAMPLES / "p2_f3.variety"), "--mmax", "2"])
    assert code == 0
    assert any(line.startswith("# timing") for line in out.splitlines())

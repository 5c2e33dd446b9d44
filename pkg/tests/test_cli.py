"""Command-line layer: deterministic CSV output, figure properties, JSON
breakdowns, config precedence, exit codes, and the check suite."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from loopentropy import checks as checks_mod
from loopentropy.cli import SweepConfig, cmd_figure2, cmd_figure3, fmt, main


def _parse_csv(text):
    lines = [ln for ln in text.strip().split("\n") if not ln.startswith("#")]
    header = lines[0].split(",")
    rows = [[float(v) for v in ln.split(",")] for ln in lines[1:]]
    return header, rows


# ----------------------------------------------------------------------
# figure 2
# ----------------------------------------------------------------------
def test_figure2_csv_shape_and_column_arithmetic():
    cfg = SweepConfig(m0_min=1.0, m0_max=10.0, steps=50, mu=(1.0,))
    text = cmd_figure2(cfg)
    header, rows = _parse_csv(text)
    assert header == ["m0", "S_total", "S_ext", "S_int", "I", "S_ext_plus_S_int"]
    assert len(rows) == 50
    for row in rows:
        assert row[5] == pytest.approx(row[2] + row[3], abs=1e-14)
        # mutual information is the defining combination of the other three
        assert row[4] == pytest.approx(row[2] + row[3] - row[1], abs=1e-10)


def test_figure2_deterministic_byte_for_byte(tmp_path):
    cfg1 = SweepConfig(steps=40, mu=(1.0,), out=str(tmp_path / "a.csv"))
    cfg2 = SweepConfig(steps=40, mu=(1.0,), out=str(tmp_path / "b.csv"))
    cmd_figure2(cfg1)
    cmd_figure2(cfg2)
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert b"\r" not in (tmp_path / "a.csv").read_bytes()


def test_figure2_17_digit_round_trip():
    cfg = SweepConfig(steps=5, mu=(1.0,))
    text = cmd_figure2(cfg)
    _, rows = _parse_csv(text)
    from loopentropy import entropy as en
    from loopentropy.loops import SchemeParams

    for row in rows:
        p = SchemeParams.from_tv(m0=row[0], mu=1.0, lambda0=1.0, tv=1.0)
        assert row[1] == en.s_total_21(p).finite  # exact, not approximate


def test_figure2_curves_increase_and_dominance():
    cfg = SweepConfig(m0_min=1.0, m0_max=10.0, steps=100, mu=(1.0,))
    _, rows = _parse_csv(cmd_figure2(cfg))
    arr = np.array(rows)
    for col in (1, 2, 3, 4, 5):
        assert np.all(np.diff(arr[:, col]) > 0)
    m0 = arr[:, 0]
    assert np.all(arr[m0 >= 2.0, 5] > arr[m0 >= 2.0, 1])


def test_figure2_asymptotic_log_slope():
    cfg = SweepConfig(m0_min=8.0, m0_max=10.0, steps=40, mu=(1.0,))
    _, rows = _parse_csv(cmd_figure2(cfg))
    arr = np.array(rows)
    logs = np.log(arr[:, 0])
    for col in (1, 2, 3):
        slope = np.polyfit(logs, arr[:, col], 1)[0]
        assert slope == pytest.approx(4.0, abs=0.05)


def test_figure2_svg_output(tmp_path):
    svg_path = tmp_path / "fig2.svg"
    cfg = SweepConfig(steps=20, mu=(1.0,), svg=str(svg_path))
    cmd_figure2(cfg)
    content = svg_path.read_text()
    assert content.count("<polyline") == 5
    assert "<svg" in content and "S_total" in content


# ----------------------------------------------------------------------
# figure 3
# ----------------------------------------------------------------------
def test_figure3_minima_interior_and_decreasing():
    cfg = SweepConfig(m0_min=0.2, m0_max=6.0, steps=300, mu=(0.5, 1.0, 2.0))
    header, rows = _parse_csv(cmd_figure3(cfg))
    assert header[0] == "m0"
    arr = np.array(rows)
    minima = []
    for col in (1, 2, 3):
        i = int(np.argmin(arr[:, col]))
        assert 0 < i < len(arr) - 1
        signs = np.sign(np.diff(arr[:, col]))
        assert int(np.sum(np.abs(np.diff(signs)) > 0)) == 1
        minima.append(arr[i, 0])
    assert minima[0] > minima[1] > minima[2]


def test_figure3_mass_log_term_inactive_at_unit_mass():
    cfg = SweepConfig(m0_min=0.5, m0_max=1.5, steps=3, mu=(1.0,),
                      convention="closed_form")
    _, rows = _parse_csv(cmd_figure3(cfg))
    from loopentropy import entropy as en

    vac_a, vac_b = en.vacuum_coefficients(1.0)
    expected = 1.0 - 0.25 * (vac_a + vac_b) / (1536 * math.pi ** 4)
    mid = rows[1]
    assert mid[0] == pytest.approx(1.0)
    assert mid[1] == pytest.approx(expected, rel=1e-12)


def test_figure3_convention_recorded_in_header_comment():
    cfg = SweepConfig(steps=5, mu=(1.0,), m0_min=0.2, m0_max=6.0)
    text = cmd_figure3(cfg)
    first = text.split("\n", 1)[0]
    assert first.startswith("#") and "figure convention" in first


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(steps=1)
    with pytest.raises(ValueError):
        SweepConfig(m0_min=5.0, m0_max=1.0)
    with pytest.raises(ValueError):
        SweepConfig(mu=())


def test_sweep_log_grid():
    cfg = SweepConfig(m0_min=0.5, m0_max=8.0, steps=5, log_grid=True, mu=(1.0,))
    grid = cfg.grid()
    ratios = grid[1:] / grid[:-1]
    assert np.allclose(ratios, ratios[0])
    assert grid[0] == pytest.approx(0.5) and grid[-1] == pytest.approx(8.0)


# ----------------------------------------------------------------------
# entropy / tau / trace-check commands
# ----------------------------------------------------------------------
def test_entropy_command_conditional(capsys):
    code = main(["entropy", "--q", "cond_ext_int"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["finite"] == pytest.approx(-0.102, abs=1e-3)


def test_entropy_command_mutual(capsys):
    code = main(["entropy", "--q", "mutual21", "--m0", "1", "--tv", "1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    from loopentropy.contour import tau

    assert data["finite"] == pytest.approx(1 - tau() + math.log(2.0), abs=1e-12)


def test_entropy_command_unknown_quantity(capsys):
    assert main(["entropy", "--q", "nonsense"]) == 2


def test_entropy_command_invalid_parameter(capsys):
    assert main(["entropy", "--q", "mutual21", "--m0", "-3"]) == 2


def test_tau_command(capsys):
    code = main(["tau"])
    assert code == 0
    out = capsys.readouterr().out.strip()
    assert float(out) == pytest.approx(3.2663, abs=1e-4)


def test_tau_command_with_regulated_ratio(capsys):
    code = main(["tau", "--delta-cut", "0.05"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["tau"] == pytest.approx(3.26636, abs=1e-4)
    assert data["regulated_ratio"]["im"] == pytest.approx(math.pi / 2, rel=1e-6)


def test_trace_check_command(capsys):
    code = main(["trace-check"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    terms = {(t["k"], t["l"]): complex(t["re"], t["im"])
             for t in data["tadpole_pair"]["normalized"]["terms"]}
    assert terms[(0, 0)] == pytest.approx(1.0, abs=1e-12)
    # anything beyond the unit constant is float residue
    assert all(abs(v) <= 1e-12 for key, v in terms.items() if key != (0, 0))


def test_usage_error_exit_code():
    assert main(["no-such-command"]) == 2
    assert main(["figure2", "--steps", "1"]) == 2


def test_config_file_defaults_and_flag_precedence(tmp_path, capsys):
    cfg_path = tmp_path / "conf.json"
    cfg_path.write_text(json.dumps({"m0": 2.0, "tv": 4.0}))
    code = main(["--config", str(cfg_path), "entropy", "--q", "int21",
                 "--tv", "1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["m0"] == 2.0   # from config
    assert data["tv"] == 1.0   # explicit flag wins


def test_check_command_passes(capsys):
    code = main(["check"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[FAIL]" not in out
    assert "[INFO]" in out  # informational findings present, not failures
    assert "chi_alternate_form_sign" in out


def test_check_fault_injection_names_oracle():
    # a sign flip in the closed form must be caught by the radial oracle
    def flipped(j, m2, d):
        from loopentropy.loops import delta_closed

        return -delta_closed(j, m2, d)

    results = checks_mod.run_all(delta_closed_impl=flipped)
    assert checks_mod.exit_code(results) == 1
    failed = [r.name for r in results if r.passed is False]
    assert failed == ["delta_vs_radial_oracle"]


def test_console_script_end_to_end(tmp_path):
    out = tmp_path / "fig2.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "loopentropy.cli", "figure2", "--steps", "10",
         "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    header, rows = _parse_csv(out.read_text())
    assert len(rows) == 10
    assert header[0] == "m0"


def test_fmt_is_lossless():
    for x in (1 / 3, math.pi, -2.0, 1e-17, 123456.789):
        assert float(fmt(x)) == x

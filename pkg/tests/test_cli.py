import json
import math

import pytest

from pntbounds import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_table1_single_row(capsys):
    rc, out, _ = run(capsys, "table1", "--rows", "6000")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2  # header + one row
    assert "6000" in lines[1] and "0.8335" in lines[1]


def test_table1_full_table_has_15_rows(capsys):
    rc, out, _ = run(capsys, "table1")
    assert rc == 0
    assert len(out.strip().splitlines()) == 16


def test_table1_json_carries_unrounded_internals(capsys):
    rc, out, _ = run(capsys, "table1", "--rows", "6000", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 1
    row = rows[0]
    assert row["A_unrounded"] <= row["A"]
    assert set(row["eps0"]) == {"mantissa", "decimal_exponent"}
    assert row["monotone_certified"] is True


def test_table1_csv_header_exact(capsys):
    rc, out, _ = run(capsys, "table1", "--format", "csv")
    assert rc == 0
    assert out.splitlines()[0] == "X,sigma,K,A,B,C,eps0_mantissa,eps0_exp10"
    assert len(out.strip().splitlines()) == 16


def test_table1_output_deterministic(capsys):
    _, out1, _ = run(capsys, "table1", "--format", "csv")
    _, out2, _ = run(capsys, "table1", "--format", "csv")
    assert out1 == out2


def test_table1_custom_anchor_with_overrides(capsys):
    rc, out, _ = run(capsys, "table1", "--log-x0", "6000", "--sigma", "0.99",
                     "--K", "4", "--format", "json")
    assert rc == 0
    row = json.loads(out)[0]
    assert row["sigma"] == 0.99 and row["K"] == 4


def test_table1_vk_regime(capsys):
    rc, out, _ = run(capsys, "table1", "--log-x0", "2.8e10", "--regime", "vk",
                     "--format", "json")
    assert rc == 0
    row = json.loads(out)[0]
    assert row["regime"] == "vk"
    assert abs(row["C"] - 0.1852) < 1e-9


def test_table1_override_out_of_hypothesis_fails(capsys):
    rc, _, err = run(capsys, "table1", "--log-x0", "6000", "--sigma", "0.5")
    assert rc == 1
    assert "error" in err


def test_table1_unknown_row_label(capsys):
    rc, _, err = run(capsys, "table1", "--rows", "nope")
    assert rc == 2
    assert "no rows match" in err


def test_brackets_row(capsys):
    rc, out, _ = run(capsys, "brackets", "--regime", "nu2", "--log-x0", "1e6")
    assert rc == 0
    assert "0.4923764" in out and "1.0346912" in out and "1.1502603" in out


def test_brackets_default_prints_six_rows(capsys):
    rc, out, _ = run(capsys, "brackets")
    assert rc == 0
    assert len(out.strip().splitlines()) == 7


def test_brackets_nu3(capsys):
    rc, out, _ = run(capsys, "brackets", "--regime", "nu3", "--format", "json")
    assert rc == 0
    row = json.loads(out)[0]
    assert abs(row["B2"] - 0.18525) < 5e-5


def test_crossovers(capsys):
    rc, out, _ = run(capsys, "crossovers")
    assert rc == 0
    assert "91.2854" in out
    assert "54563.08" in out


def test_eval_psi_matches_reference_epsilon(capsys):
    rc, out, _ = run(capsys, "eval", "--log-x", "6000", "--quantity", "psi")
    assert rc == 0
    assert "3.35e-22" in out


def test_eval_absolute_reported_in_double_range(capsys):
    rc, out, _ = run(capsys, "eval", "--log-x", "100", "--quantity", "psi")
    assert rc == 0
    assert "absolute bound" in out
    rc, out, _ = run(capsys, "eval", "--log-x", "6000", "--quantity", "psi")
    assert "absolute bound" not in out


def test_eval_below_verified_range(capsys):
    rc, _, err = run(capsys, "eval", "--log-x", "1", "--quantity", "psi")
    assert rc == 2
    assert "verify-small" in err


def test_eval_json(capsys):
    rc, out, _ = run(capsys, "eval", "--log-x", "58", "--quantity", "pi", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["quantity"] == "pi"
    assert payload["relative_bound"]["decimal_exponent"] == -1


def test_density_table_env_var(capsys, monkeypatch, tmp_path):
    from importlib import resources

    src = resources.files("pntbounds").joinpath("data/zero_density.csv").read_text()
    alt = tmp_path / "table.csv"
    alt.write_text(src)
    monkeypatch.setenv(cli.ENV_TABLE, str(alt))
    rc, out, _ = run(capsys, "table1", "--rows", "6000")
    assert rc == 0 and "0.8335" in out


def test_corrupt_density_table_fails_cleanly(capsys, monkeypatch, tmp_path):
    alt = tmp_path / "bad.csv"
    alt.write_text("sigma,C1\n0.98,16\n")
    monkeypatch.setenv(cli.ENV_TABLE, str(alt))
    rc, _, err = run(capsys, "table1", "--rows", "6000")
    assert rc == 1
    assert "header" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["table1", "--format", "yaml"])
    assert exc.value.code == 2


def test_verify_small_passes(capsys):
    rc, out, _ = run(capsys, "verify-small", "--limit", "100000")
    assert rc == 0
    assert out.count("pass") >= 3
    assert "MARGIN" in out and "ASSUMED" in out


def test_eps0_sci_format():
    from pntbounds.extnum import ExtReal

    assert cli.eps0_sci(ExtReal.exp_of(math.log(3.45) - 47335 * math.log(10.0))) == "3.45e-47335"
    assert cli.eps0_sci(ExtReal.from_real(23.1447)) == "2.32e+01"

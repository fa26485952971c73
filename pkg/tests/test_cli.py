import csv
import io
import json
import math

import pytest

from app.cli import main
from app.core.exceptions import EXIT_INPUT_ERROR, EXIT_OK
from app.models.run_config import LN2


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def read_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def quantities(text):
    return {row["quantity"]: row["value"] for row in read_rows(text)}


def test_entropy_of_a_fair_coin_in_bits(capsys):
    code, out, _ = run_cli(capsys, "entropy", "--inline", "a=0.5,b=0.5", "--base", "bits")
    assert code == EXIT_OK
    rows = {row["kind"]: float(row["entropy"]) for row in read_rows(out)}
    assert rows["natural"] == pytest.approx(1.0, abs=1e-15)
    assert rows["plus"] == pytest.approx(0.845111, abs=1e-6)
    assert rows["minus"] == pytest.approx(0.828427124746 / LN2, abs=1e-12)
    assert out.splitlines()[0] == "kind,entropy"


def test_bits_and_nats_differ_by_ln2(capsys):
    _, nats, _ = run_cli(capsys, "entropy", "--inline", "0.2,0.3,0.5")
    _, bits, _ = run_cli(capsys, "entropy", "--inline", "0.2,0.3,0.5", "--base", "bits")
    for n_row, b_row in zip(read_rows(nats), read_rows(bits)):
        assert float(n_row["entropy"]) / LN2 == pytest.approx(float(b_row["entropy"]), rel=1e-15)


def test_counts_match_probabilities(capsys):
    _, from_counts, _ = run_cli(capsys, "entropy", "--inline", "a=3,b=1", "--counts")
    _, from_probs, _ = run_cli(capsys, "entropy", "--inline", "a=0.75,b=0.25")
    assert from_counts == from_probs


def test_entropy_extra_columns(capsys):
    code, out, _ = run_cli(capsys, "entropy", "--inline", "a=0.5,b=0.5", "--series", "30", "--tail-bound")
    assert code == EXIT_OK
    rows = read_rows(out)
    assert list(rows[0]) == ["kind", "entropy", "entropy_series", "tail_bound"]
    for row in rows:
        assert float(row["entropy_series"]) == pytest.approx(float(row["entropy"]), abs=1e-10)


def test_pretty_output(capsys):
    _, out, _ = run_cli(capsys, "entropy", "--inline", "a=0.5,b=0.5", "--kinds", "natural", "--pretty")
    assert out == "kind,entropy\nnatural,0.693147\n"


def test_json_output(capsys):
    code, out, _ = run_cli(capsys, "entropy", "--inline", "a=0.5,b=0.5", "--kinds", "plus", "--format", "json")
    assert code == EXIT_OK
    records = json.loads(out)
    assert records[0]["kind"] == "plus"
    assert records[0]["entropy"] == pytest.approx(0.585786437627, abs=1e-12)


def test_file_input_and_output(tmp_path, capsys):
    source = tmp_path / "p.txt"
    source.write_text("# a comment\na 1/2\nb 0.25  # inline comment\n\nc 0.25\n", encoding="utf-8")
    target = tmp_path / "out" / "h.csv"
    code, out, _ = run_cli(capsys, "entropy", "--input", str(source), "--kinds", "natural", "-o", str(target))
    assert code == EXIT_OK
    assert out == ""
    row = read_rows(target.read_text(encoding="utf-8"))[0]
    assert float(row["entropy"]) == pytest.approx(1.5 * LN2, abs=1e-15)


def test_malformed_input_exits_one_without_output(tmp_path, capsys):
    source = tmp_path / "bad.txt"
    source.write_text("a 0.5\nb\n", encoding="utf-8")
    target = tmp_path / "h.csv"
    code, out, err = run_cli(capsys, "entropy", "--input", str(source), "-o", str(target))
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "error:" in err
    assert not target.exists()


@pytest.mark.parametrize("inline", ["a=0.5,b=0.6", "a=-0.5,b=1.5", "a=x", "a=0.5,a=0.5", "0.5,,0.5"])
def test_invalid_distributions_exit_one(inline, capsys):
    code, out, _ = run_cli(capsys, "entropy", "--inline", inline)
    assert code == EXIT_INPUT_ERROR
    assert out == ""


def test_renormalize(capsys):
    code, out, _ = run_cli(capsys, "entropy", "--inline", "a=0.5,b=0.6", "--renormalize", "--kinds", "natural")
    assert code == EXIT_OK
    h = -(5 / 11) * math.log(5 / 11) - (6 / 11) * math.log(6 / 11)
    assert float(read_rows(out)[0]["entropy"]) == pytest.approx(h, abs=1e-14)


@pytest.mark.parametrize("argv", [
    [],
    ["nope"],
    ["entropy"],
    ["entropy", "--inline", "0.5,0.5", "--kinds", "natural,bogus"],
    ["entropy", "--inline", "0.5,0.5", "--input", "p.txt"],
    ["figure1", "--n-max", "ten"],
])
def test_usage_errors_exit_one(argv, capsys):
    code, out, _ = run_cli(capsys, *argv)
    assert code == EXIT_INPUT_ERROR
    assert out == ""


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK


def test_relative_entropy_sign(capsys):
    args = ["relent", "--p-inline", "a=0.75,b=0.25", "--q-inline", "a=0.5,b=0.5", "--kinds", "natural"]
    _, plain, _ = run_cli(capsys, *args)
    _, negated, _ = run_cli(capsys, *args, "--negate")
    kl = 0.75 * math.log(1.5) + 0.25 * math.log(0.5)
    assert float(read_rows(plain)[0]["rel_entropy"]) == pytest.approx(-kl, abs=1e-15)
    assert float(read_rows(negated)[0]["rel_entropy"]) == pytest.approx(kl, abs=1e-15)


def test_relative_entropy_support_error(capsys):
    code, _, err = run_cli(capsys, "relent", "--p-inline", "a=0.5,b=0.5", "--q-inline", "a=1,b=0")
    assert code == EXIT_INPUT_ERROR
    assert "error:" in err


def test_figure1_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["figure1", "-o", str(first)]) == EXIT_OK
    assert main(["figure1", "-o", str(second)]) == EXIT_OK
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    rows = read_rows(first.read_text(encoding="utf-8"))
    assert len(rows) == 64
    assert list(rows[0]) == ["n", "k", "k_plus", "k_minus", "rel_dev_plus", "rel_dev_minus"]
    assert float(rows[0]["k_plus"]) == pytest.approx(0.845111, abs=1e-6)
    assert float(rows[7]["k_plus"]) == pytest.approx(7.913979, abs=1e-6)


@pytest.mark.parametrize("argv", [
    ["entropy", "--inline", "a=0.2,b=0.3,c=0.5", "--series", "30", "--tail-bound"],
    ["relent", "--p-inline", "a=0.9,b=0.1", "--q-inline", "a=0.5,b=0.5"],
    ["codecheck", "--fuzz", "120", "--threads", "2", "--seed", "11"],
    ["enumerate", "--max-len", "10", "--format", "json"],
    ["superstat", "--family", "plus", "--shape", "0.5", "--l", "2", "--y", "0.25", "--x", "0.5"],
    ["superstat", "--family", "minus", "--shape", "0.5", "--l", "1"],
])
def test_reruns_are_byte_identical(argv, tmp_path, capsys):
    first, second = tmp_path / "first.out", tmp_path / "second.out"
    assert main(argv + ["-o", str(first)]) == EXIT_OK
    assert main(argv + ["-o", str(second)]) == EXIT_OK
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    assert first.stat().st_size > 0


def test_figure1_in_nats(capsys):
    _, out, _ = run_cli(capsys, "figure1", "--n-min", "3", "--n-max", "3", "--base", "nats")
    row = read_rows(out)[0]
    assert float(row["k"]) == pytest.approx(3 * LN2, rel=1e-15)


def test_codecheck_single_distribution(capsys):
    code, out, _ = run_cli(capsys, "codecheck", "--inline", "a=0.5,b=0.25,c=0.25")
    assert code == EXIT_OK
    rows = read_rows(out)
    assert [row["kind"] for row in rows] == ["natural", "plus", "minus"]
    assert all(row["holds"] == "true" for row in rows)


def test_codecheck_fuzz(capsys):
    code, out, _ = run_cli(capsys, "codecheck", "--fuzz", "150", "--threads", "2", "--seed", "3")
    assert code == EXIT_OK
    rows = read_rows(out)
    assert len(rows) == 450
    assert {row["seed"] for row in rows} == {"3", "4"}


def test_codecheck_two_point_scan(capsys):
    code, out, _ = run_cli(capsys, "codecheck", "--two-point")
    assert code == EXIT_OK
    rows = read_rows(out)
    assert len(rows) == 3 * 99 * 3
    assert all(row["holds"] == "true" for row in rows)
    assert rows[0]["y"] == "1.0000000000000000e-02"


def test_codecheck_needs_a_source(capsys):
    code, _, _ = run_cli(capsys, "codecheck")
    assert code == EXIT_INPUT_ERROR


def test_enumerate_query(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-len", "7", "--query", "10")
    assert code == EXIT_OK
    row = read_rows(out)[0]
    assert row["y"] == "10"
    assert float(row["omega"]) == 2.0 ** -7
    assert row["shortest_bits"] == "7"
    assert float(row["k_nat"]) == pytest.approx(7 * LN2, abs=1e-12)


def test_enumerate_unseen_query(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-len", "7", "--query", "0101010101")
    assert code == EXIT_OK
    row = read_rows(out)[0]
    assert row["shortest_bits"] == "not found"
    assert row["k_nat"] == ""


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--max-len", "8", "--format", "json", "--series-literal")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["parameters"]["max_len"] == 8
    assert payload["z_beta"] == pytest.approx(payload["z_partial"], rel=1e-15)
    assert payload["rows"][0]["y"] == "0"
    assert "k_plus_series" in payload["rows"][0]
    assert list(payload) == sorted(payload)


def test_enumerate_budget_and_cap(capsys):
    assert run_cli(capsys, "enumerate", "--max-len", "12", "--step-budget", "10")[0] == EXIT_INPUT_ERROR
    assert run_cli(capsys, "enumerate", "--max-len", "64")[0] == EXIT_INPUT_ERROR


def test_superstat_standard_entropic_form(capsys):
    code, out, _ = run_cli(capsys, "superstat", "--family", "standard", "--x", "0.5")
    assert code == EXIT_OK
    values = quantities(out)
    assert float(values["entropic_form_h"]) == pytest.approx(0.5 * LN2, abs=1e-8)
    assert float(values["entropic_form_alpha"]) == pytest.approx(-1.0, abs=1e-8)


def test_superstat_plus_factor(capsys):
    code, out, _ = run_cli(capsys, "superstat", "--family", "plus", "--shape", "0.5", "--l", "2", "--y", "0.25")
    assert code == EXIT_OK
    values = quantities(out)
    assert float(values["boltzmann"]) == pytest.approx(0.25, rel=1e-14)
    assert abs(float(values["laplace_residual"])) <= 1e-6
    assert values["laplace_converged"] == "true"
    assert float(values["mixing_normalization"]) == pytest.approx(1.0, abs=1e-8)
    assert float(values["inverse_length"]) == pytest.approx(2.0, abs=1e-14)


def test_superstat_minus_laplace_is_reported(capsys):
    code, out, _ = run_cli(capsys, "superstat", "--family", "minus", "--shape", "0.5", "--l", "1")
    assert code == EXIT_OK
    values = quantities(out)
    assert float(values["boltzmann"]) == pytest.approx(0.25, rel=1e-14)
    assert values["laplace_converged"] == "false"
    assert "mixing_normalization" not in values


def test_superstat_singularity_exits_one(capsys):
    code, out, err = run_cli(capsys, "superstat", "--family", "plus", "--ystar", "3", "--x", "0.5")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "vanishes" in err


def test_superstat_needs_a_quantity(capsys):
    assert run_cli(capsys, "superstat")[0] == EXIT_INPUT_ERROR


def test_efflog_point(capsys):
    code, out, _ = run_cli(capsys, "efflog", "--x", "0.5", "--kinds", "plus,minus")
    assert code == EXIT_OK
    rows = {(row["quantity"], row["kind"]): float(row["value"]) for row in read_rows(out)}
    assert rows[("eff_log", "plus")] == pytest.approx(-0.585786437627, abs=1e-12)
    assert rows[("eff_log", "minus")] == pytest.approx(-0.828427124746, abs=1e-12)
    assert rows[("eff_log_series", "plus")] == pytest.approx(-0.585786437627, abs=1e-10)


def test_efflog_inverse_and_table(capsys):
    code, out, _ = run_cli(capsys, "efflog", "--t", "-1", "--table-report", "--kinds", "plus")
    assert code == EXIT_OK
    rows = {row["quantity"]: float(row["value"]) for row in read_rows(out)}
    assert rows["eff_exp_poly"] == pytest.approx(rows["eff_exp"], abs=5e-3)
    assert rows["table_max_deviation"] >= 0.0


def test_efflog_domain_error(capsys):
    code, _, err = run_cli(capsys, "efflog", "--x", "1.5")
    assert code == EXIT_INPUT_ERROR
    assert "(0, 1]" in err

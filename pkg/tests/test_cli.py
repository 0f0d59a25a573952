import json

import pytest

from frobound.cli import main
from frobound.experiments import CSV_HEADER


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exact_triple(capsys):
    code, out, _ = run_cli(capsys, "exact", "3", "5", "7")
    assert code == 0
    assert out == "g = 4\nf = 19\n"


def test_exact_pair(capsys):
    code, out, _ = run_cli(capsys, "exact", "2", "3")
    assert code == 0
    assert out == "g = 1\n"


def test_exact_rejects_common_factor(capsys):
    code, out, err = run_cli(capsys, "exact", "4", "6")
    assert code == 2
    assert "gcd" in err


def test_exact_many_args(capsys):
    code, out, _ = run_cli(capsys, "exact", "6", "9", "20")
    assert code == 0
    assert "g = 43" in out


def test_bound_single_method(capsys):
    code, out, _ = run_cli(capsys, "bound", "--method", "vitek", "3", "5", "7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "9"
    assert "24" in lines[1]


def test_bound_new_is_sound(capsys):
    code, out, _ = run_cli(capsys, "bound", "--method", "new", "--iterations", "2", "3", "5", "7")
    assert code == 0
    assert float(out.splitlines()[0]) >= 4


def test_bound_all_prints_six_lines(capsys):
    code, out, _ = run_cli(capsys, "bound", "--method", "all", "3", "5", "7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    methods = [line.split()[0] for line in lines]
    assert methods == ["new", "erdos-graham", "selmer", "vitek", "davison", "bdr"]


def test_bound_rejects_non_pairwise_coprime(capsys):
    code, _, err = run_cli(capsys, "bound", "--method", "all", "6", "9", "20")
    assert code == 2
    assert "coprime" in err


def test_sigma_naive(capsys):
    code, out, _ = run_cli(capsys, "sigma", "0", "1", "1", "1", "--mode", "naive")
    assert code == 0
    assert out == "1/4\n"


def test_sigma_zero_prints_plain_zero(capsys):
    code, out, _ = run_cli(capsys, "sigma", "1", "1", "1", "2", "--mode", "naive")
    assert code == 0
    assert out == "0\n"


def test_sigma_modes_agree(capsys):
    _, naive, _ = run_cli(capsys, "sigma", "4", "5", "7", "36", "--mode", "naive")
    _, rade, _ = run_cli(capsys, "sigma", "4", "5", "7", "36", "--mode", "rademacher")
    assert naive == rade
    assert "/" in naive


def test_sigma_lower_prints_decimal(capsys):
    code, out, _ = run_cli(capsys, "sigma", "0", "5", "7", "36", "--mode", "lower", "--iterations", "2")
    assert code == 0
    float(out.strip())  # decimal, not p/q


def test_sigma_invalid_input(capsys):
    code, _, err = run_cli(capsys, "sigma", "0", "2", "3", "4", "--mode", "naive")
    assert code == 2


@pytest.mark.parametrize(
    "args,expected",
    [(("partition", "6", "1", "2", "3"), "7"), (("partition", "4", "3", "5", "7"), "0"),
     (("partition", "0", "3", "5", "7"), "1")],
)
def test_partition_examples(capsys, args, expected):
    code, out, _ = run_cli(capsys, *args)
    assert code == 0
    assert out.strip() == expected


def test_experiment_writes_csv_and_summary(capsys, tmp_path):
    out_file = tmp_path / "r.csv"
    code, out, _ = run_cli(
        capsys, "experiment", "--count", "25", "--seed", "1", "--out", str(out_file)
    )
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 26
    assert "median_ratio_known_over_new" in out


def test_experiment_deterministic(capsys, tmp_path):
    f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli(capsys, "experiment", "--count", "20", "--seed", "5", "--out", str(f1))
    run_cli(capsys, "experiment", "--count", "20", "--seed", "5", "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_summarize_matches_experiment_output(capsys, tmp_path):
    out_file = tmp_path / "r.csv"
    _, exp_out, _ = run_cli(
        capsys, "experiment", "--count", "25", "--seed", "1", "--out", str(out_file)
    )
    code, sum_out, _ = run_cli(capsys, "summarize", str(out_file))
    assert code == 0
    assert sum_out == exp_out


def test_summarize_json_fractions_in_range(capsys, tmp_path):
    out_file = tmp_path / "r.csv"
    run_cli(capsys, "experiment", "--count", "10", "--seed", "3", "--out", str(out_file))
    code, out, _ = run_cli(capsys, "--json", "summarize", str(out_file))
    assert code == 0
    stats = json.loads(out)
    for key in ("frac_known_below_new", "frac_new_below_z54", "frac_N2_strictly_better_than_N1"):
        assert 0.0 <= stats[key] <= 1.0


def test_summarize_empty_file_fails(capsys, tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text(CSV_HEADER + "\n")
    code, _, err = run_cli(capsys, "summarize", str(empty))
    assert code == 2


def test_summarize_malformed_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text(CSV_HEADER + "\n1,2\n")
    code, _, err = run_cli(capsys, "summarize", str(bad))
    assert code == 2
    assert "line 2" in err


def test_summarize_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "summarize", str(tmp_path / "nope.csv"))
    assert code == 2


def test_json_exact(capsys):
    code, out, _ = run_cli(capsys, "--json", "exact", "3", "5", "7")
    assert code == 0
    assert json.loads(out) == {"g": 4, "f": 19}


def test_json_partition(capsys):
    code, out, _ = run_cli(capsys, "--json", "partition", "6", "1", "2", "3")
    assert json.loads(out) == {"count": 7}

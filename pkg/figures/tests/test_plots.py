import shutil
import subprocess
from pathlib import Path

import pytest

from frobound_figures.cli import main
from frobound_figures.plots import FIGURE_IDS, build_figure
from frobound_figures.reader import EXPECTED_HEADER, CsvFormatError, read_rows, usable

FIXTURE = Path(__file__).parent / "fixtures" / "experiment_50.csv"


def run_cli(*argv):
    return main(list(argv))


def test_fixture_matches_schema():
    rows = read_rows(FIXTURE)
    assert len(rows) == 50
    assert all(not r.error for r in rows)
    first = FIXTURE.read_text().splitlines()[0]
    assert first.split(",") == EXPECTED_HEADER


@pytest.mark.parametrize("figure_id", FIGURE_IDS)
def test_every_figure_renders_nonempty_image(figure_id, tmp_path):
    out = tmp_path / f"{figure_id}.png"
    code = run_cli(figure_id, "--in", str(FIXTURE), "--out", str(out))
    assert code == 0
    assert out.exists() and out.stat().st_size > 1000


@pytest.mark.parametrize("figure_id", FIGURE_IDS)
def test_titles_carry_point_count(figure_id):
    fig = build_figure(figure_id, read_rows(FIXTURE))
    try:
        assert "50 points" in fig.axes[0].get_title()
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_main_figure_has_two_series_spanning_z():
    rows = read_rows(FIXTURE)
    fig = build_figure("main", rows)
    try:
        ax = fig.axes[0]
        series = [line for line in ax.get_lines() if len(line.get_xdata()) == 50]
        assert len(series) == 2
        zs = [r.z for r in usable(rows)]
        for line in series:
            xs = list(line.get_xdata())
            assert min(xs) == min(zs) and max(xs) == max(zs)
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_conjecture_curves_derive_from_z_column():
    import math

    rows = read_rows(FIXTURE)
    fig = build_figure("conjecture", rows)
    try:
        ax = fig.axes[0]
        zs = sorted(r.z for r in usable(rows))
        curves = [list(line.get_ydata()) for line in ax.get_lines()[1:]]
        assert [math.sqrt(3) * z for z in zs] in curves
        assert [z ** 1.25 for z in zs] in curves
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_iteration_comparison_draws_diagonal():
    fig = build_figure("iteration-comparison", read_rows(FIXTURE))
    try:
        ax = fig.axes[0]
        labels = [line.get_label() for line in ax.get_lines()]
        assert "y = x" in labels
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_rerun_overwrites(tmp_path):
    out = tmp_path / "fig.png"
    assert run_cli("main", "--in", str(FIXTURE), "--out", str(out)) == 0
    first = out.read_bytes()
    assert run_cli("main", "--in", str(FIXTURE), "--out", str(out)) == 0
    assert out.read_bytes() == first  # deterministic rerun


def test_corrupted_csv_rejected_with_line_number(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    lines = FIXTURE.read_text().splitlines()
    lines[7] = lines[7].replace(",", ";", 3)  # break the field count on line 8
    bad.write_text("\n".join(lines) + "\n")
    code = run_cli("main", "--in", str(bad), "--out", str(tmp_path / "x.png"))
    assert code == 2
    assert "line 8" in capsys.readouterr().err


def test_bad_value_rejected_with_line_number(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    lines = FIXTURE.read_text().splitlines()
    parts = lines[3].split(",")
    parts[4] = "not-a-number"
    lines[3] = ",".join(parts)
    bad.write_text("\n".join(lines) + "\n")
    with pytest.raises(CsvFormatError, match="line 4"):
        read_rows(bad)
    code = run_cli("conjecture", "--in", str(bad), "--out", str(tmp_path / "x.png"))
    assert code == 2
    assert "line 4" in capsys.readouterr().err


def test_wrong_header_rejected(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,2\n")
    code = run_cli("main", "--in", str(bad), "--out", str(tmp_path / "x.png"))
    assert code == 2
    assert "line 1" in capsys.readouterr().err


def test_missing_input_file(tmp_path, capsys):
    code = run_cli("main", "--in", str(tmp_path / "none.csv"), "--out", str(tmp_path / "x.png"))
    assert code == 2


def test_unknown_figure_id_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run_cli("histogram", "--in", str(FIXTURE), "--out", str(tmp_path / "x.png"))
    assert exc.value.code == 2


@pytest.mark.skipif(
    shutil.which("frobound") is None, reason="primary CLI not installed"
)
def test_fixture_regenerates_from_primary_cli(tmp_path):
    # schema-sync check: the installed frobound CLI still emits what we parse
    out = tmp_path / "fresh.csv"
    subprocess.run(
        ["frobound", "experiment", "--count", "10", "--seed", "9", "--out", str(out)],
        check=True,
        stdout=subprocess.DEVNULL,
    )
    rows = read_rows(out)
    assert len(rows) == 10

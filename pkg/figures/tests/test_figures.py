import math
import subprocess
import sys

import pytest

from thomae_figures import (
    FigureDataError,
    FigureSpec,
    build_fig1,
    build_fig2,
    read_xy_csv,
    render_fig1,
    render_fig2,
)
from thomae_figures.cli import main


def thomae_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "thomae.cli", *argv], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


@pytest.fixture(scope="session")
def fig1_csvs(tmp_path_factory):
    d = tmp_path_factory.mktemp("fig1")
    paths = []
    for theta in (0.5, 1, 2):
        p = d / f"t{theta}.csv"
        p.write_text(thomae_cli(
            "figure-data", "--figure", "1", "--theta", str(theta), "--qmax", "200"
        ))
        paths.append(str(p))
    return paths


@pytest.fixture(scope="session")
def fig2_csv(tmp_path_factory):
    p = tmp_path_factory.mktemp("fig2") / "gen.csv"
    p.write_text(thomae_cli(
        "figure-data", "--figure", "2", "--theta", "1", "--gamma", "1", "--qmax", "200"
    ))
    return str(p)


def test_read_xy_csv(fig2_csv, tmp_path):
    pts = read_xy_csv(fig2_csv)
    assert all(0 < x < 1 for x, _ in pts)
    with pytest.raises(FigureDataError):
        read_xy_csv(str(tmp_path / "missing.csv"))
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n")
    with pytest.raises(FigureDataError):
        read_xy_csv(str(bad))
    malformed = tmp_path / "malformed.csv"
    malformed.write_text("x,f\n0.5,notanumber\n")
    with pytest.raises(FigureDataError):
        read_xy_csv(str(malformed))


def test_fig2_row_count_matches_farey_interior(fig2_csv):
    def totient(n):
        return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

    # interior Farey points of order 200 in (0, 1): sum of phi(q), q = 2..200
    interior = sum(totient(q) for q in range(2, 201))
    assert len(read_xy_csv(fig2_csv)) == interior


def test_render_fig1_panel_maxima(fig1_csvs, tmp_path):
    out = str(tmp_path / "fig1.png")
    spec = FigureSpec(input_csv=fig1_csvs, thetas=[0.5, 1, 2], output=out)
    fig = build_fig1(spec)
    assert len(fig.axes) == 3
    for ax, theta in zip(fig.axes, (0.5, 1, 2)):
        pts = ax.collections[0].get_offsets()
        ymax_idx = pts[:, 1].argmax()
        x_at_max, ymax = pts[ymax_idx]
        assert ymax == pytest.approx(2.0**-theta, rel=1e-12)
        assert x_at_max == pytest.approx(0.5, abs=1e-12)
    assert render_fig1(spec) == out
    import os

    assert os.path.getsize(out) > 0


def test_fig1_theta1_contains_half_half(fig1_csvs):
    pts = read_xy_csv(fig1_csvs[1])
    assert (0.5, 0.5) in pts


def test_render_fig2_contains_log_point(fig2_csv, tmp_path):
    out = str(tmp_path / "fig2.png")
    spec = FigureSpec(input_csv=[fig2_csv], thetas=[1], output=out)
    fig = build_fig2(spec)
    pts = fig.axes[0].collections[0].get_offsets()
    target = 0.5 * (math.log(2) + 1)
    hit = [(x, y) for x, y in pts if abs(x - 0.5) < 1e-12]
    assert len(hit) == 1
    assert hit[0][1] == pytest.approx(target, rel=1e-9)
    render_fig2(spec)


def test_render_deterministic_payload(fig1_csvs):
    spec = FigureSpec(input_csv=fig1_csvs, thetas=[0.5, 1, 2], output="unused.png")
    a = build_fig1(spec)
    b = build_fig1(spec)
    for ax_a, ax_b in zip(a.axes, b.axes):
        assert (ax_a.collections[0].get_offsets() == ax_b.collections[0].get_offsets()).all()


def test_spec_validation():
    with pytest.raises(ValueError):
        FigureSpec(input_csv=["a.csv"], thetas=[1, 2], output="o.png")
    with pytest.raises(ValueError):
        FigureSpec(input_csv=["a.csv", "b.csv"], thetas=[2, 1], output="o.png")
    with pytest.raises(ValueError):
        FigureSpec(input_csv=[], thetas=[], output="o.png")


def test_cli_end_to_end(fig1_csvs, fig2_csv, tmp_path):
    out1 = str(tmp_path / "f1.png")
    assert main(["fig1", "--input", *fig1_csvs, "--theta", "0.5", "1", "2",
                 "-o", out1]) == 0
    out2 = str(tmp_path / "f2.png")
    assert main(["fig2", "--input", fig2_csv, "--theta", "1", "-o", out2]) == 0
    assert main(["fig1", "--input", str(tmp_path / "nope.csv"), "--theta", "1",
                 "-o", str(tmp_path / "x.png")]) == 1
    assert main(["fig2", "--input", fig1_csvs[0], fig1_csvs[1], "--theta", "1", "2",
                 "-o", str(tmp_path / "x.png")]) == 2

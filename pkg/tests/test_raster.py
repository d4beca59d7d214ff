import numpy as np
import pytest

from trinom.raster import (
    CSV_HEADER,
    PALETTE,
    TAGS,
    cell_centers,
    oracle_raster,
    rasterize,
    read_ppm,
    write_csv,
    write_ppm,
)


def test_cell_centers_orientation():
    u, v = cell_centers((0, 2, -1, 1), 4, 2)
    assert u == pytest.approx([0.25, 0.75, 1.25, 1.75])
    assert v == pytest.approx([0.5, -0.5])  # row 0 is the top


def test_single_cell():
    ras = rasterize(4, 3, (0.2, 0.3, 0.2, 0.3), 1, 1)
    assert ras.tags.shape == (1, 1)
    assert ras.tags[0, 0] == "Gamma"


def test_every_cell_tagged_once():
    ras = rasterize(3, 2, width=40, height=30)
    assert set(np.unique(ras.tags)) <= set(TAGS)
    assert sum(ras.counts().values()) == 40 * 30
    assert sum(ras.fractions().values()) == pytest.approx(1.0)


def test_delta_quadrant_follows_parity():
    even = rasterize(4, 3, width=60, height=60)
    odd = rasterize(3, 2, width=60, height=60)
    _, v = cell_centers(even.bounds, 60, 60)
    assert (v[np.nonzero((even.tags == "Delta").any(axis=1))] > 0).all()
    assert (v[np.nonzero((odd.tags == "Delta").any(axis=1))] < 0).all()


def test_parallel_rows_match_serial():
    serial = rasterize(5, 2, width=30, height=24)
    parallel = rasterize(5, 2, width=30, height=24, jobs=3)
    assert (serial.tags == parallel.tags).all()
    np.testing.assert_array_equal(serial.t_bounds, parallel.t_bounds)


def test_against_oracle_small():
    ras = rasterize(4, 3, width=80, height=80)
    orc = oracle_raster(4, 3, width=80, height=80)
    settled = ras.tags != "Marginal"
    for tag in ("Gamma", "Delta"):
        mismatch = np.count_nonzero(((ras.tags == tag) != (orc == tag)) & settled)
        assert mismatch <= 0.005 * ras.tags.size


def test_bad_inputs():
    with pytest.raises(ValueError):
        rasterize(3, 1, width=0, height=3)
    with pytest.raises(ValueError):
        rasterize(3, 1, bounds=(1, 0, -1, 1), width=3, height=3)


def test_ppm_golden_header_and_round_trip(tmp_path):
    ras = rasterize(4, 3, (0.2, 0.3, 0.2, 0.3), 2, 1)
    path = tmp_path / "r.ppm"
    write_ppm(ras, path)
    text = path.read_text()
    assert text.startswith("P3\n2 1\n255\n")
    w, h, pix = read_ppm(path)
    assert (w, h) == (2, 1)
    assert tuple(pix[0, 0]) == PALETTE["Gamma"]


def test_csv_golden_header(tmp_path):
    ras = rasterize(4, 3, (0.0, 2.0, -1.0, 1.0), 3, 2)
    path = tmp_path / "r.csv"
    write_csv(ras, path)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER) == "u,v,tag,two_omega,t_bound"
    assert len(lines) == 1 + 6
    for line in lines[1:]:
        u, v, tag, two_w, tb = line.split(",")
        float(u), float(v)
        assert tag in TAGS
        if tag in ("Gamma", "Delta"):
            assert float(tb) > 0

"""Series types, grids and CSV ingestion."""

import numpy as np
import pytest

from xcausal.core import (
    CrossCorrelogram,
    FrequencyGrid,
    IrregularSeries,
    LagGrid,
    RegularSeries,
    dedup_and_sort,
    demean,
    read_series_csv,
    require_same_lag_grid,
    write_series_csv,
)
from xcausal.errors import (
    CsvFormatError,
    EmptySeriesError,
    GridMismatchError,
    NonFiniteError,
)


def test_irregular_series_basics():
    s = IrregularSeries([0.0, 1.0, 3.0], [1.0, 2.0, 3.0], label="a")
    assert s.n_obs == 3
    assert s.span == 3.0
    assert s.mean_gap == 1.5
    assert not s.timestamps.flags.writeable
    assert not s.values.flags.writeable


def test_irregular_series_rejects_bad_input():
    with pytest.raises(ValueError):
        IrregularSeries([0.0, 1.0], [1.0, 2.0, 3.0])
    with pytest.raises(EmptySeriesError):
        IrregularSeries([0.0], [1.0])
    with pytest.raises(ValueError):
        IrregularSeries([0.0, 0.0], [1.0, 2.0])  # duplicate timestamp
    with pytest.raises(ValueError):
        IrregularSeries([1.0, 0.0], [1.0, 2.0])  # not increasing
    with pytest.raises(NonFiniteError):
        IrregularSeries([0.0, 1.0], [1.0, np.nan])
    with pytest.raises(NonFiniteError):
        IrregularSeries([0.0, np.inf], [1.0, 2.0])


def test_regular_series_grid_and_conversion():
    s = RegularSeries(2.0, 0.5, [1.0, 2.0, 3.0], label="r")
    assert len(s) == 3
    assert np.array_equal(s.timestamps(), [2.0, 2.5, 3.0])
    irr = s.to_irregular()
    assert irr.label == "r"
    assert np.array_equal(irr.timestamps, s.timestamps())
    assert np.array_equal(irr.values, s.values)
    with pytest.raises(ValueError):
        RegularSeries(0.0, 0.0, [1.0, 2.0])
    with pytest.raises(EmptySeriesError):
        RegularSeries(0.0, 1.0, [1.0])


def test_frequency_grid():
    g = FrequencyGrid(0.5, 4)
    assert np.array_equal(g.frequencies(), [0.5, 1.0, 1.5, 2.0])
    s = FrequencyGrid.for_span(2.0 * np.pi, 3)
    assert s.delta_f == pytest.approx(1.0)
    with pytest.raises(ValueError):
        FrequencyGrid(0.0, 4)
    with pytest.raises(ValueError):
        FrequencyGrid(0.5, 1)  # count >= 2
    with pytest.raises(ValueError):
        FrequencyGrid.for_span(0.0, 4)


def test_lag_grid():
    g = LagGrid(0.25, 2)
    assert len(g) == 5
    assert np.array_equal(g.lags(), [-0.5, -0.25, 0.0, 0.25, 0.5])
    with pytest.raises(ValueError):
        LagGrid(0.0, 2)
    with pytest.raises(ValueError):
        LagGrid(0.25, 0)


def test_correlogram_invariants():
    g = LagGrid(1.0, 1)
    c = CrossCorrelogram(g, [0.1, 1.0, -0.2], imag_residual=1e-12)
    assert not c.rho.flags.writeable
    assert np.array_equal(c.lags(), [-1.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        CrossCorrelogram(g, [0.1, 1.1, 0.0])  # |rho| > 1 + tolerance
    with pytest.raises(ValueError):
        CrossCorrelogram(g, [0.1, 1.0])  # wrong length
    with pytest.raises(ValueError):
        CrossCorrelogram(g, [0.1, 1.0, 0.0], imag_residual=-1.0)
    # an ulp past 1 is estimator round-off, not breakage
    CrossCorrelogram(g, [0.0, 1.0 + 1e-9, 0.0])


def test_require_same_lag_grid():
    require_same_lag_grid(LagGrid(1.0, 2), LagGrid(1.0, 2), "t")
    with pytest.raises(GridMismatchError):
        require_same_lag_grid(LagGrid(1.0, 2), LagGrid(1.0, 3), "t")


def test_dedup_and_sort_last_record_wins():
    s = dedup_and_sort([(2.0, 20.0), (1.0, 10.0), (2.0, 21.0), (0.0, 0.0)])
    assert np.array_equal(s.timestamps, [0.0, 1.0, 2.0])
    assert np.array_equal(s.values, [0.0, 10.0, 21.0])
    with pytest.raises(EmptySeriesError):
        dedup_and_sort([])
    with pytest.raises(EmptySeriesError):
        dedup_and_sort([(1.0, 1.0), (1.0, 2.0)])  # one distinct timestamp
    with pytest.raises(NonFiniteError):
        dedup_and_sort([(0.0, np.nan), (1.0, 1.0)])


def test_demean_centers_values():
    s = IrregularSeries([0.0, 1.0, 2.0], [1.0, 2.0, 6.0], label="a")
    d = demean(s)
    assert float(np.mean(d.values)) == pytest.approx(0.0, abs=1e-15)
    assert np.array_equal(d.timestamps, s.timestamps)
    assert d.label == "a"


def test_csv_round_trip(tmp_path):
    path = tmp_path / "s.csv"
    s = IrregularSeries([0.1, 1.7, 2.9], [1.25, -0.5, 3.75], label="s")
    write_series_csv(path, s)
    back = read_series_csv(path, label="s")
    assert np.array_equal(back.timestamps, s.timestamps)
    assert np.array_equal(back.values, s.values)
    assert back.label == "s"


def test_csv_reader_tolerates_header_and_unsorted_rows(tmp_path):
    path = tmp_path / "s.csv"
    path.write_text("time,value\n2.0,20.0\n1.0,10.0\n\n")
    s = read_series_csv(path)
    assert np.array_equal(s.timestamps, [1.0, 2.0])
    assert np.array_equal(s.values, [10.0, 20.0])


def test_csv_reader_reports_bad_rows(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("time,value\n1.0,10.0\nnope,x\n2.0,20.0\n")
    with pytest.raises(CsvFormatError, match="line 3"):
        read_series_csv(path)
    with pytest.warns(UserWarning):
        s = read_series_csv(path, drop_bad_rows=True)
    assert s.n_obs == 2


def test_csv_reader_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("time,value\n")
    with pytest.raises(EmptySeriesError):
        read_series_csv(path)

"""Projection, spectra, inversion and the signature format."""

import numpy as np
import pytest

from xcausal.core import FrequencyGrid, IrregularSeries, LagGrid, demean
from xcausal.errors import (
    DegenerateVarianceError,
    GridMismatchError,
    NotCenteredError,
    SignatureFormatError,
    WindowTooWideError,
)
from xcausal.spectral import (
    CrossSpectrum,
    auto_spectrum,
    cross_spectrum,
    invert_to_correlogram,
    merge,
    parse_signature,
    project,
    read_signature,
    serialize_signature,
    signature_n_bytes,
    smooth,
    write_signature,
    zero_projection,
)

GRID = FrequencyGrid(0.8, 20)


def _series(seed, n=50, span=5.0, label="s"):
    rng = np.random.default_rng(seed)
    t = np.sort(rng.uniform(0.0, span, n))
    v = rng.standard_normal(n)
    return IrregularSeries(t, v - v.mean(), label=label)


def test_project_requires_centered_values():
    rng = np.random.default_rng(0)
    t = np.sort(rng.uniform(0.0, 5.0, 30))
    s = IrregularSeries(t, rng.standard_normal(30) + 5.0, label="off")
    with pytest.raises(NotCenteredError, match="off"):
        project(s, GRID)
    project(s, GRID, require_centered=False)  # shard path is explicit
    project(demean(s), GRID)


def test_projection_is_linear():
    a = _series(1)
    b = IrregularSeries(a.timestamps, _series(2).values, label="s")
    pa = project(a, GRID)
    pb = project(b, GRID)
    combo = IrregularSeries(a.timestamps, 2.0 * a.values - 3.0 * b.values,
                            label="s")
    pc = project(combo, GRID, require_centered=False)
    np.testing.assert_allclose(pc.coeffs, 2.0 * pa.coeffs - 3.0 * pb.coeffs,
                               atol=1e-10)


def test_projection_time_shift_rotates_phases():
    s = _series(3)
    shift = 0.37
    moved = IrregularSeries(s.timestamps + shift, s.values, label="s")
    p0 = project(s, GRID)
    p1 = project(moved, GRID)
    rotation = np.exp(-1j * GRID.frequencies() * shift)
    np.testing.assert_allclose(p1.coeffs, p0.coeffs * rotation, atol=1e-10)


def test_merge_partials_equals_full_projection():
    s = _series(4)
    full = project(s, GRID)
    half = s.n_obs // 2
    sa = IrregularSeries(s.timestamps[:half], s.values[:half], label="s")
    sb = IrregularSeries(s.timestamps[half:], s.values[half:], label="s")
    merged = merge(project(sa, GRID, require_centered=False),
                   project(sb, GRID, require_centered=False))
    np.testing.assert_allclose(merged.coeffs, full.coeffs, atol=1e-10)
    assert merged.n_obs == full.n_obs


def test_merge_guards():
    p = project(_series(5), GRID)
    other_grid = project(_series(5), FrequencyGrid(0.8, 21))
    with pytest.raises(GridMismatchError):
        merge(p, other_grid)
    renamed = project(_series(5, label="t"), GRID)
    with pytest.raises(GridMismatchError, match="label"):
        merge(p, renamed)
    z = zero_projection(GRID, label="s")
    np.testing.assert_array_equal(merge(p, z).coeffs, p.coeffs)
    assert merge(p, z).n_obs == p.n_obs


def test_auto_spectrum_is_real_nonnegative():
    p = project(_series(6), GRID)
    auto = auto_spectrum(p)
    np.testing.assert_allclose(auto.values.imag, 0.0, atol=1e-12)
    assert np.all(auto.values.real >= 0.0)
    np.testing.assert_allclose(auto.values.real, np.abs(p.coeffs) ** 2,
                               atol=1e-10)


def test_cross_spectrum_conjugate_symmetry():
    px = project(_series(7, label="x"), GRID)
    py = project(_series(8, label="y"), GRID)
    xy = cross_spectrum(px, py)
    yx = cross_spectrum(py, px)
    np.testing.assert_allclose(xy.values, np.conj(yx.values), atol=1e-12)


def test_smooth_window_oracle():
    values = np.arange(10, dtype=np.float64) + 1j * np.arange(10)[::-1]
    spec = CrossSpectrum(FrequencyGrid(1.0, 10), values)
    out = smooth(spec, 1)
    want = np.empty(10, dtype=np.complex128)
    for i in range(10):
        lo, hi = max(i - 1, 0), min(i + 2, 10)
        want[i] = values[lo:hi].mean()
    np.testing.assert_allclose(out.values, want, atol=1e-12)
    assert smooth(spec, 0) is spec
    with pytest.raises(WindowTooWideError):
        smooth(spec, 5)  # needs half_width < count/2
    with pytest.raises(WindowTooWideError):
        smooth(spec, -1)


def test_inversion_normalizes_self_correlation_to_one():
    s = _series(9)
    p = project(s, GRID)
    auto = auto_spectrum(p)
    lag_grid = LagGrid(0.1, 5)
    corr = invert_to_correlogram(auto, auto, auto, lag_grid)
    assert corr.rho[lag_grid.half_count] == pytest.approx(1.0)
    assert corr.imag_residual >= 0.0


def test_inversion_rejects_degenerate_normalization():
    zeros = CrossSpectrum(GRID, np.zeros(GRID.count, dtype=np.complex128))
    with pytest.raises(DegenerateVarianceError):
        invert_to_correlogram(zeros, zeros, zeros, LagGrid(0.1, 2))


def test_inversion_grid_mismatch():
    p = project(_series(10), GRID)
    auto = auto_spectrum(p)
    other = CrossSpectrum(FrequencyGrid(0.8, 21),
                          np.ones(21, dtype=np.complex128))
    with pytest.raises(GridMismatchError):
        invert_to_correlogram(other, auto, auto, LagGrid(0.1, 2))


def test_signature_round_trip():
    p = project(_series(11, label="asset_é"), GRID)
    blob = serialize_signature(p)
    assert len(blob) == signature_n_bytes(p.label, GRID.count)
    back = parse_signature(blob)
    assert back.label == p.label
    assert back.n_obs == p.n_obs
    assert back.grid.delta_f == p.grid.delta_f
    assert back.grid.count == p.grid.count
    np.testing.assert_array_equal(back.coeffs, p.coeffs)


def test_signature_file_round_trip(tmp_path):
    p = project(_series(12, label="x"), GRID)
    path = tmp_path / "x.sig"
    write_signature(path, p)
    assert path.stat().st_size == signature_n_bytes("x", GRID.count)
    back = read_signature(path)
    np.testing.assert_array_equal(back.coeffs, p.coeffs)


def test_signature_rejects_malformed_records():
    p = project(_series(13, label="x"), GRID)
    blob = serialize_signature(p)
    with pytest.raises(SignatureFormatError, match="magic"):
        parse_signature(b"NOPE" + blob[4:])
    with pytest.raises(SignatureFormatError, match="version"):
        parse_signature(blob[:4] + b"\x63\x00" + blob[6:])
    with pytest.raises(SignatureFormatError, match="truncated"):
        parse_signature(blob[:10])
    with pytest.raises(SignatureFormatError, match="length"):
        parse_signature(blob + b"\x00" * 8)

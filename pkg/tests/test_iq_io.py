import logging
import pickle

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from iqspec.iq_io import (
    IqSegment,
    RecordingError,
    open_recording,
    power_normalize,
    segment_count,
    slice_segments,
    z_normalize,
)
from iqspec.spectro import StftParams

from oracles import accumulate_mean_var, accumulate_power


def test_open_counts_samples(make_capture):
    path = make_capture(np.arange(10) + 1j * np.arange(10))
    assert path.stat().st_size == 80
    rec = open_recording(path, 20e6)
    assert rec.sample_count == 10
    assert rec.byte_order == "little"
    assert rec.sample_rate_hz == 20e6


def test_interleaving_is_i_then_q(tmp_path):
    path = tmp_path / "raw.dat"
    np.array([1.0, 2.0, 3.0, 4.0], dtype="<f4").tofile(path)
    rec = open_recording(path)
    np.testing.assert_array_equal(rec.read(0, 2), [1 + 2j, 3 + 4j])


def test_empty_and_truncated_files(tmp_path):
    empty = tmp_path / "empty.dat"
    empty.write_bytes(b"")
    with pytest.raises(RecordingError, match="empty recording"):
        open_recording(empty)
    bad = tmp_path / "bad.dat"
    bad.write_bytes(b"\0" * 12)
    with pytest.raises(RecordingError, match="multiple of 8"):
        open_recording(bad)
    with pytest.raises(FileNotFoundError, match="file not found"):
        open_recording(tmp_path / "nope.dat")


def test_default_segment_duration(tmp_path):
    params = StftParams()
    # window for 1500 frames of a 1024-point FFT with 128 overlap
    assert params.samples_per_segment == (1500 - 1) * 896 + 1024 == 1_344_128
    path = tmp_path / "big.dat"
    with open(path, "wb") as fh:
        fh.truncate(1_344_128 * 8)
    rec = open_recording(path, 20e6)
    assert rec.duration_s == pytest.approx(0.0672064, abs=1e-9)
    seg = slice_segments(rec, params.samples_per_segment)[0]
    assert seg.end_time_s - seg.start_time_s == pytest.approx(rec.duration_s)


def test_nonfinite_warning(make_capture, caplog):
    x = np.ones(100, dtype=complex)
    x[:5] = np.nan
    with caplog.at_level(logging.WARNING):
        open_recording(make_capture(x))
    assert "NaN/Inf" in caplog.text


def test_slice_examples(make_capture):
    rec = open_recording(make_capture(np.arange(10, dtype=complex)))
    segs = slice_segments(rec, 4, 4)
    assert [(s.start_sample, len(s)) for s in segs] == [(0, 4), (4, 4)]
    np.testing.assert_array_equal(segs[1].samples, [4, 5, 6, 7])
    whole = slice_segments(rec, 10, 10)
    assert len(whole) == 1 and len(whole[0]) == 10
    with pytest.raises(RecordingError, match="too short"):
        slice_segments(rec, 11)


def test_segment_time_bounds(make_capture):
    rec = open_recording(make_capture(np.zeros(100, dtype=complex)), sample_rate_hz=10.0)
    seg = slice_segments(rec, 20, 30)[2]
    assert seg.start_time_s == 6.0
    assert seg.end_time_s == 8.0
    assert seg.end_time_s - seg.start_time_s == pytest.approx(len(seg) / seg.sample_rate_hz)


@settings(max_examples=40, deadline=None)
@given(count=st.integers(1, 60), window=st.integers(1, 60), stride=st.integers(1, 20))
def test_slice_count_and_offsets(tmp_path_factory, count, window, stride):
    path = tmp_path_factory.mktemp("cap") / "x.dat"
    samples = np.arange(count) + 1j * np.arange(count)[::-1]
    samples.astype("<c8").tofile(path)
    rec = open_recording(path)
    if window > count:
        with pytest.raises(RecordingError):
            slice_segments(rec, window, stride)
        return
    segs = slice_segments(rec, window, stride)
    assert len(segs) == (count - window) // stride + 1 == segment_count(count, window, stride)
    raw = path.read_bytes()
    for i, seg in enumerate(segs):
        assert seg.start_sample == i * stride
        offset = 8 * seg.start_sample
        expected = np.frombuffer(raw[offset : offset + 8 * window], dtype="<c8")
        np.testing.assert_array_equal(seg.samples, expected)


def test_reads_are_stable(make_capture, rng):
    rec = open_recording(make_capture(rng.standard_normal(64) + 1j * rng.standard_normal(64)))
    a = rec.read(10, 5)
    b = rec.read(10, 5)
    assert a.tobytes() == b.tobytes()


def test_recording_pickles_without_mapping(make_capture):
    rec = open_recording(make_capture(np.arange(8, dtype=complex)))
    rec.read(0, 1)
    clone = pickle.loads(pickle.dumps(rec))
    np.testing.assert_array_equal(clone.read(0, 8), rec.read(0, 8))


def _seg(x, fs=1.0):
    return IqSegment(np.asarray(x, dtype=complex), fs)


def test_power_normalize_examples(rng):
    out = power_normalize(_seg(np.full(16, 2 + 0j)))
    np.testing.assert_allclose(out.samples, 1 + 0j, atol=1e-12)
    zeros = power_normalize(_seg(np.zeros(8)))
    assert not zeros.samples.any()
    x = rng.standard_normal(100_000) * 3 + 1j * rng.standard_normal(100_000)
    assert abs(accumulate_power(power_normalize(_seg(x)).samples) - 1) <= 1e-6


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False), min_size=1, max_size=50))
def test_power_normalize_idempotent(values):
    x = np.array(values)
    if np.mean(np.abs(x) ** 2) < 1e-3:
        return
    once = power_normalize(_seg(x))
    twice = power_normalize(once)
    np.testing.assert_allclose(twice.samples, once.samples, rtol=1e-6, atol=1e-9)


def test_z_normalize_examples(rng):
    out = z_normalize(_seg([1 + 0j, 3 + 0j]))
    np.testing.assert_allclose(out.samples.real, [-1, 1])
    np.testing.assert_array_equal(out.samples.imag, [0, 0])

    x = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
    std = z_normalize(_seg(x))
    again = z_normalize(std)
    np.testing.assert_allclose(again.samples, std.samples, atol=1e-9)

    with pytest.raises(ValueError):
        z_normalize(_seg([1 + 1j]))


def test_z_normalize_against_accumulation_oracle(rng):
    x = (5 + 2 * rng.standard_normal(5000)) + 1j * (-3 + 0.01 * rng.standard_normal(5000))
    out = z_normalize(_seg(x)).samples
    for part in (out.real, out.imag):
        mean, var = accumulate_mean_var(part.tolist())
        assert abs(mean) < 1e-9
        assert 1 - 1e-6 <= var <= 1 + 1e-6

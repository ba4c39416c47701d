import math

import numpy as np
import pytest
from PIL import Image

from iqspec.iq_io import IqSegment
from iqspec.spectro import (
    COLORMAPS,
    RenderPolicy,
    StftParams,
    colorize,
    colormap_table,
    normalize_spectrogram,
    render_png,
    render_variant,
    spectrogram_to_png,
    stft,
    to_db,
    to_image,
    window,
    zscore_spectrogram,
)

from oracles import literal_stft_power, symmetric_hann

# published viridis endpoints, #440154 and #fde725
VIRIDIS_FIRST = (68, 1, 84)
VIRIDIS_LAST = (253, 231, 37)


def _seg(x, fs=8.0):
    return IqSegment(np.asarray(x, dtype=complex), fs)


def test_defaults():
    p = StftParams()
    assert (p.fft_size, p.overlap, p.window_kind, p.num_frames_target) == (1024, 128, "hann", 1500)
    assert p.hop == 896


@pytest.mark.parametrize("kwargs", [{"overlap": 8, "fft_size": 8}, {"overlap": -1}, {"window_kind": "kaiser"}])
def test_params_rejected(kwargs):
    with pytest.raises(ValueError):
        StftParams(**kwargs)


def test_zero_segment_gives_zero_power():
    spec = stft(_seg(np.zeros(32)), StftParams(fft_size=8, overlap=4))
    assert spec.power.shape == (7, 8)
    assert not spec.power.any()


@pytest.mark.parametrize("k0", [-4, -3, -1, 0, 1, 2, 3])
def test_tone_lands_in_centered_bin(k0):
    n = 8
    x = np.exp(2j * np.pi * k0 * np.arange(n) / n)
    oracle = literal_stft_power(x, n, n, [1.0] * n)
    spec = stft(_seg(x), StftParams(fft_size=n, overlap=0, window_kind="rectangular", num_frames_target=1))
    assert spec.power.shape == (1, n)
    np.testing.assert_allclose(spec.power, oracle, atol=1e-9)
    assert spec.power[0, n // 2 + k0] == pytest.approx(n**2)
    mask = np.ones(n, bool)
    mask[n // 2 + k0] = False
    assert np.all(spec.power[0, mask] < 1e-20)


@pytest.mark.parametrize("length,n,overlap", [(8, 8, 0), (9, 8, 4), (100, 16, 5), (1000, 64, 63), (33, 32, 0)])
def test_frame_count(length, n, overlap):
    p = StftParams(fft_size=n, overlap=overlap)
    spec = stft(_seg(np.ones(length)), p)
    assert spec.frames == (length - n) // (n - overlap) + 1 == p.frame_count(length)


def test_short_segment_rejected():
    with pytest.raises(ValueError, match="shorter"):
        stft(_seg(np.ones(7)), StftParams(fft_size=8, overlap=0))


def test_frequency_axis():
    spec = stft(_seg(np.ones(16), fs=16.0), StftParams(fft_size=8, overlap=0))
    np.testing.assert_allclose(spec.freq_axis_hz, [-8, -6, -4, -2, 0, 2, 4, 6])
    assert np.all(np.diff(spec.freq_axis_hz) > 0)


def test_hann_matches_symmetric_definition():
    np.testing.assert_allclose(window("hann", 9), symmetric_hann(9), atol=1e-15)
    assert window("hann", 9)[0] == 0 and window("hann", 9)[-1] == pytest.approx(0)


@pytest.mark.parametrize("kind", ["rectangular", "hann"])
def test_matches_literal_dft(rng, kind):
    x = rng.standard_normal(40) + 1j * rng.standard_normal(40)
    w = [1.0] * 8 if kind == "rectangular" else symmetric_hann(8)
    spec = stft(_seg(x), StftParams(fft_size=8, overlap=4, window_kind=kind))
    np.testing.assert_allclose(spec.power, literal_stft_power(x, 8, 4, w), atol=1e-9, rtol=0)


def test_parseval_rectangular(rng):
    n, hop = 32, 20
    x = rng.standard_normal(400) + 1j * rng.standard_normal(400)
    spec = stft(_seg(x), StftParams(fft_size=n, overlap=n - hop, window_kind="rectangular"))
    for m in range(spec.frames):
        frame = x[m * hop : m * hop + n]
        assert spec.power[m].sum() == pytest.approx(n * np.sum(np.abs(frame) ** 2), rel=1e-6)


def test_to_db_examples(rng):
    assert to_db(np.array([1.0]), 1e-12)[0] == pytest.approx(0, abs=1e-9)
    assert to_db(np.array([100.0]), 1e-12)[0] == pytest.approx(20, abs=1e-9)
    assert to_db(np.array([0.0]), 1e-6)[0] == pytest.approx(-60)
    m = rng.random((5, 7)) * 1e3
    got = to_db(m, 1e-12)
    for (i, j), v in np.ndenumerate(m):
        assert got[i, j] == pytest.approx(10 * math.log10(v + 1e-12), abs=1e-9)
    with pytest.raises(ValueError):
        to_db(m, 0.0)


def test_to_db_monotone(rng):
    p = np.sort(rng.random(100)) * 10
    assert np.all(np.diff(to_db(p)) >= 0)


def test_normalize_examples(rng):
    np.testing.assert_array_equal(normalize_spectrogram(np.array([[0.0, 10.0]])), [[0.0, 1.0]])
    np.testing.assert_array_equal(normalize_spectrogram(np.full((3, 4), 7.0)), np.full((3, 4), 0.5))
    db = rng.normal(size=(50, 16)) * np.arange(1, 17) + np.arange(16) * 3
    z = zscore_spectrogram(db, "per_freq_zscore")
    np.testing.assert_allclose(z.mean(axis=0), 0, atol=1e-12)
    np.testing.assert_allclose(z.std(axis=0), 1, atol=1e-12)
    zt = zscore_spectrogram(db, "per_time_zscore")
    np.testing.assert_allclose(zt.mean(axis=1), 0, atol=1e-12)
    for norm in ("per_freq_zscore", "per_time_zscore", "global_minmax"):
        out = normalize_spectrogram(db, RenderPolicy(spec_norm=norm))
        assert out.min() == 0.0 and out.max() == 1.0


def test_colorize_endpoints_and_gray():
    rgb = colorize(np.array([0.0, 1.0]), "viridis")
    assert tuple(rgb[0]) == VIRIDIS_FIRST
    assert tuple(rgb[1]) == VIRIDIS_LAST
    gray = colorize(np.linspace(0, 1, 256), "gray")
    np.testing.assert_array_equal(gray[:, 0], np.arange(256))
    for name in COLORMAPS:
        assert colormap_table(name).shape == (256, 3)


def test_colorize_interpolates():
    lut = colormap_table("viridis")
    mid = colorize(np.array([0.5 / 255]), "viridis")[0]
    np.testing.assert_array_equal(mid, np.rint((lut[0] + lut[1]) / 2 * 255))


def test_render_gray_2x2(tmp_path):
    # input is frames x N; the image is N rows (row 0 = highest frequency) x frames columns
    out = render_png(np.array([[0.0, 1.0], [1.0, 0.0]]), RenderPolicy(colormap="gray"), tmp_path / "g.png")
    px = np.asarray(Image.open(out))
    assert px.shape == (2, 2, 3)
    np.testing.assert_array_equal(px[..., 0], [[255, 0], [0, 255]])
    probe = render_png(np.array([[0.0, 1.0], [0.0, 0.0]]), RenderPolicy(colormap="gray"), tmp_path / "p.png")
    # frame 0, top frequency bin -> row 0, column 0
    np.testing.assert_array_equal(np.asarray(Image.open(probe))[..., 0], [[255, 0], [0, 0]])


def test_render_dimensions_and_determinism(tmp_path, rng):
    norm = rng.random((30, 16))
    a = render_png(norm, RenderPolicy(), tmp_path / "a.png")
    b = render_png(norm, RenderPolicy(), tmp_path / "b.png")
    assert a.read_bytes() == b.read_bytes()
    with Image.open(a) as im:
        assert im.size == (30, 16) and im.mode == "RGB"


def test_render_rejects_out_of_range(tmp_path):
    with pytest.raises(ValueError):
        render_png(np.array([[1.5]]), RenderPolicy(), tmp_path / "x.png")


def test_positive_tone_renders_above_center(tmp_path):
    n, fs = 16, 16.0
    x = np.exp(2j * np.pi * 3 / n * np.arange(4 * n))
    spec = stft(_seg(x, fs), StftParams(fft_size=n, overlap=0, window_kind="rectangular"))
    image = to_image(spec.power)
    peak_row = int(np.argmax(image[:, 0]))
    center_row = n - 1 - n // 2  # DC bin
    assert peak_row == center_row - 3
    neg = stft(_seg(np.conj(x), fs), StftParams(fft_size=n, overlap=0, window_kind="rectangular"))
    assert int(np.argmax(to_image(neg.power)[:, 0])) == center_row + 3
    out = spectrogram_to_png(spec, RenderPolicy(colormap="gray"), tmp_path / "t.png")
    px = np.asarray(Image.open(out))[..., 0]
    assert int(np.argmax(px[:, 0])) == peak_row


def test_render_variant_reproducible():
    base = RenderPolicy(seed=3, randomize=True)
    picks = {render_variant(base, f"s{i}") for i in range(40)}
    assert all(not p.randomize for p in picks)
    assert len({p.colormap for p in picks}) > 3
    assert render_variant(base, "s1") == render_variant(base, "s1")
    assert render_variant(RenderPolicy(), "s1") == RenderPolicy()

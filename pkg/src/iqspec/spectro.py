"""STFT power spectrograms and their deterministic PNG rendering.

Orientation used everywhere in this package: the power matrix is
``frames x N`` with frequency columns ascending from -Fs/2 (DC at column N/2);
the rendered image is ``N`` rows by ``frames`` columns with row 0 at the
highest frequency.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
from PIL import Image

from ._colormap_data import TABLES
from .iq_io import IqSegment

WINDOW_KINDS = ("hann", "rectangular")
COLORMAPS = ("viridis", "plasma", "inferno", "magma", "cividis", "gray", "hot")
SPEC_NORMS = ("global_minmax", "per_freq_zscore", "per_time_zscore")
# zlib level pinned so identical inputs give identical PNG bytes
PNG_COMPRESS_LEVEL = 6
ZSCORE_EPS = 1e-12


@dataclass(frozen=True)
class StftParams:
    fft_size: int = 1024
    overlap: int = 128
    window_kind: str = "hann"
    num_frames_target: int = 1500
    two_sided_dc_centered: bool = True

    def __post_init__(self):
        if self.fft_size <= 0:
            raise ValueError(f"fft_size must be positive, got {self.fft_size}")
        if not 0 <= self.overlap < self.fft_size:
            raise ValueError(f"overlap must be in [0, {self.fft_size}), got {self.overlap}")
        if self.window_kind not in WINDOW_KINDS:
            raise ValueError(f"unknown window {self.window_kind!r}")
        if self.num_frames_target <= 0:
            raise ValueError("num_frames_target must be positive")
        if not self.two_sided_dc_centered:
            raise ValueError("only two-sided, DC-centered spectra are supported")

    @property
    def hop(self) -> int:
        return self.fft_size - self.overlap

    @property
    def samples_per_segment(self) -> int:
        """Samples needed for exactly ``num_frames_target`` frames."""
        return (self.num_frames_target - 1) * self.hop + self.fft_size

    def frame_count(self, length: int) -> int:
        if length < self.fft_size:
            return 0
        return (length - self.fft_size) // self.hop + 1


@dataclass(frozen=True, eq=False)
class Spectrogram:
    power: np.ndarray
    freq_axis_hz: np.ndarray
    time_axis_s: np.ndarray
    params: StftParams
    source: str = ""

    @property
    def frames(self) -> int:
        return self.power.shape[0]

    @property
    def fft_size(self) -> int:
        return self.power.shape[1]


@dataclass(frozen=True)
class RenderPolicy:
    colormap: str = "viridis"
    spec_norm: str = "global_minmax"
    epsilon_db: float = 1e-12
    seed: int = 0
    randomize: bool = False

    def __post_init__(self):
        if self.colormap not in COLORMAPS:
            raise ValueError(f"unknown colormap {self.colormap!r}; choose from {COLORMAPS}")
        if self.spec_norm not in SPEC_NORMS:
            raise ValueError(f"unknown spectrogram normalization {self.spec_norm!r}")
        if not self.epsilon_db > 0:
            raise ValueError("epsilon_db must be positive")


def window(kind: str, n: int) -> np.ndarray:
    if kind == "rectangular":
        return np.ones(n)
    if kind == "hann":
        if n == 1:
            return np.ones(1)
        # symmetric Hann
        return 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(n) / (n - 1)))
    raise ValueError(f"unknown window {kind!r}")


def frequency_axis(fft_size: int, sample_rate_hz: float) -> np.ndarray:
    return np.fft.fftshift(np.fft.fftfreq(fft_size, d=1.0 / sample_rate_hz))


def stft(seg: IqSegment, params: StftParams = StftParams()) -> Spectrogram:
    """Unscaled two-sided STFT power, DC-centered.

    ``power[m, k]`` is ``|sum_n x[n + m*hop] w[n] exp(-2j*pi*k*n/N)|^2`` with
    ``k`` reordered by fftshift. A trailing partial frame is dropped.
    """
    x = seg.samples
    n = params.fft_size
    if len(x) < n:
        raise ValueError(f"segment of {len(x)} samples is shorter than fft_size={n}")
    frames = np.lib.stride_tricks.sliding_window_view(x, n)[:: params.hop]
    spectra = np.fft.fft(frames * window(params.window_kind, n), axis=1)
    spectra = np.fft.fftshift(spectra, axes=1)
    power = spectra.real**2 + spectra.imag**2
    fs = seg.sample_rate_hz
    times = seg.start_time_s + (np.arange(power.shape[0]) * params.hop + n / 2) / fs
    return Spectrogram(
        power=power,
        freq_axis_hz=frequency_axis(n, fs),
        time_axis_s=times,
        params=params,
        source=seg.source_path,
    )


def to_db(spec: Spectrogram | np.ndarray, epsilon: float = 1e-12) -> np.ndarray:
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    power = spec.power if isinstance(spec, Spectrogram) else np.asarray(spec, dtype=float)
    return 10.0 * np.log10(power + epsilon)


def _minmax(a: np.ndarray) -> np.ndarray:
    lo, hi = a.min(), a.max()
    if hi == lo:
        return np.full(a.shape, 0.5)
    return (a - lo) / (hi - lo)


def _zscore(a: np.ndarray, axis: int) -> np.ndarray:
    mean = a.mean(axis=axis, keepdims=True)
    std = a.std(axis=axis, keepdims=True)
    out = np.zeros_like(a)
    np.divide(a - mean, std, out=out, where=std > ZSCORE_EPS)
    return out


def zscore_spectrogram(db: np.ndarray, spec_norm: str) -> np.ndarray:
    """The z-scored matrix before rescaling; identity for ``global_minmax``."""
    db = np.asarray(db, dtype=float)
    if spec_norm == "per_freq_zscore":
        return _zscore(db, axis=0)
    if spec_norm == "per_time_zscore":
        return _zscore(db, axis=1)
    if spec_norm == "global_minmax":
        return db
    raise ValueError(f"unknown spectrogram normalization {spec_norm!r}")


def normalize_spectrogram(db: np.ndarray, policy: RenderPolicy = RenderPolicy()) -> np.ndarray:
    """Map a dB matrix (``frames x N``) into [0, 1].

    z-score variants standardize per frequency column or per time frame and
    are then min-max rescaled. A constant matrix maps to 0.5.
    """
    db = np.asarray(db, dtype=float)
    if db.size == 0:
        raise ValueError("cannot normalize an empty spectrogram")
    return _minmax(zscore_spectrogram(db, policy.spec_norm))


def colormap_table(name: str) -> np.ndarray:
    try:
        return np.asarray(TABLES[name], dtype=np.float64)
    except KeyError:
        raise ValueError(f"unknown colormap {name!r}") from None


def colorize(values: np.ndarray, colormap: str) -> np.ndarray:
    """Linear interpolation into a 256-entry table; returns uint8 RGB, shape ``values.shape + (3,)``."""
    lut = colormap_table(colormap)
    v = np.clip(np.asarray(values, dtype=np.float64), 0.0, 1.0)
    pos = v * (len(lut) - 1)
    lo = np.minimum(np.floor(pos).astype(np.intp), len(lut) - 2)
    frac = (pos - lo)[..., None]
    rgb = lut[lo] * (1.0 - frac) + lut[lo + 1] * frac
    return np.rint(rgb * 255.0).astype(np.uint8)


def to_image(matrix: np.ndarray) -> np.ndarray:
    """``frames x N`` -> ``N x frames`` with row 0 the highest frequency."""
    return np.asarray(matrix).T[::-1]


def render_png(norm: np.ndarray, policy: RenderPolicy, out) -> Path:
    """Write a ``frames x N`` matrix in [0, 1] as an 8-bit RGB PNG (width=frames, height=N)."""
    norm = np.asarray(norm, dtype=float)
    if norm.ndim != 2:
        raise ValueError("render_png expects a 2-D matrix")
    if np.isnan(norm).any() or norm.min() < 0.0 or norm.max() > 1.0:
        raise ValueError("render_png expects values in [0, 1]")
    rgb = colorize(to_image(norm), policy.colormap)
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(np.ascontiguousarray(rgb), mode="RGB").save(
        out, format="PNG", compress_level=PNG_COMPRESS_LEVEL, optimize=False
    )
    return out


def render_variant(policy: RenderPolicy, key: str) -> RenderPolicy:
    """Resolve a randomized policy into a concrete (colormap, normalization) pair.

    The draw depends only on ``policy.seed`` and ``key``; non-randomized
    policies are returned unchanged.
    """
    if not policy.randomize:
        return policy
    digest = hashlib.sha256(f"render:{policy.seed}:{key}".encode()).digest()
    rng = np.random.Generator(np.random.Philox(key=np.frombuffer(digest[:16], dtype=np.uint64)))
    return replace(
        policy,
        colormap=COLORMAPS[int(rng.integers(len(COLORMAPS)))],
        spec_norm=SPEC_NORMS[int(rng.integers(len(SPEC_NORMS)))],
        randomize=False,
    )


def spectrogram_to_png(spec: Spectrogram, policy: RenderPolicy, out) -> Path:
    norm = normalize_spectrogram(to_db(spec, policy.epsilon_db), policy)
    return render_png(norm, policy, out)

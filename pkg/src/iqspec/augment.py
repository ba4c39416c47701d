"""Signal-level augmentation on complex baseband, applied before any STFT.

Every random draw comes from a Philox (counter-based) stream keyed by
``(seed, stream)``, so results depend only on the inputs and the seed, never
on how work is scheduled across processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from typing import Sequence

import numpy as np

from .annotate import YoloBox
from .iq_io import IqSegment, power_normalize, z_normalize
from .spectro import Spectrogram, to_image

NOISE_MODELS = ("awgn", "rayleigh", "rician")
SIGNAL_NORMS = ("none", "power", "zscore")
DEFAULT_RICIAN_K = 10.0

# independent sub-streams of one seed
STREAM_FADING = 1
STREAM_AWGN = 2

_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class AugmentPlan:
    target_snr_db: float | None = None
    noise_model: str = "awgn"
    rician_k: float = DEFAULT_RICIAN_K
    freq_shift_hz: float = 0.0
    mix_with: str = ""
    mix_ratio_alpha: float | None = None
    mix_shift_hz: float = 0.0
    rng_seed: int = 0
    signal_norm: str = "none"

    def __post_init__(self):
        if self.noise_model not in NOISE_MODELS:
            raise ValueError(f"unknown noise model {self.noise_model!r}; choose from {NOISE_MODELS}")
        if not self.rician_k > 0:
            raise ValueError("rician_k must be positive")
        if self.signal_norm not in SIGNAL_NORMS:
            raise ValueError(f"unknown signal normalization {self.signal_norm!r}")
        if self.mix_ratio_alpha is not None:
            if not 0.0 <= self.mix_ratio_alpha <= 1.0:
                raise ValueError(f"mix ratio must be in [0, 1], got {self.mix_ratio_alpha}")
            if not self.mix_with:
                raise ValueError("a mix ratio needs an interferer (mix_with)")
        elif self.mix_with:
            raise ValueError("an interferer needs a mix ratio")
        if self.target_snr_db is not None and not math.isfinite(self.target_snr_db):
            raise ValueError("target SNR must be finite")

    def validate_for(self, sample_rate_hz: float) -> None:
        for name in ("freq_shift_hz", "mix_shift_hz"):
            value = getattr(self, name)
            if not abs(value) < sample_rate_hz / 2:
                raise ValueError(f"{name}={value} must satisfy |shift| < Fs/2 = {sample_rate_hz / 2}")

    def as_dict(self) -> dict:
        return asdict(self)


def generator(seed: int, stream: int = 0) -> np.random.Generator:
    key = np.array([seed & _U64, stream & _U64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def complex_normal(rng: np.random.Generator, size, variance: float = 1.0) -> np.ndarray:
    """Circularly-symmetric complex Gaussian; ``variance / 2`` per real component."""
    parts = rng.standard_normal((2,) + tuple(np.atleast_1d(size)))
    return np.sqrt(variance / 2.0) * (parts[0] + 1j * parts[1])


def mean_power(x: np.ndarray) -> float:
    return float(np.mean(x.real**2 + x.imag**2))


def add_awgn(seg: IqSegment, target_snr_db: float, seed: int) -> tuple[IqSegment, IqSegment]:
    """Add complex AWGN with variance ``P_s / 10**(snr/10)``; also return the noise itself."""
    p_s = mean_power(seg.samples)
    if p_s == 0:
        raise ValueError("cannot set an SNR on an all-zero signal")
    sigma2 = noise_variance(p_s, target_snr_db)
    noise = complex_normal(generator(seed, STREAM_AWGN), len(seg), sigma2)
    return seg.with_samples(seg.samples + noise), seg.with_samples(noise)


def noise_variance(signal_power: float, snr_db: float) -> float:
    return signal_power / 10 ** (snr_db / 10)


def fading_gains(model: str, rician_k: float, seed: int, size: int = 1) -> np.ndarray:
    """Unit-mean-power complex channel gains for ``rayleigh`` or ``rician`` fading."""
    rng = generator(seed, STREAM_FADING)
    g = complex_normal(rng, size)
    if model == "rayleigh":
        return g
    if model == "rician":
        if not rician_k > 0:
            raise ValueError("rician_k must be positive")
        return math.sqrt(rician_k / (rician_k + 1)) + math.sqrt(1 / (rician_k + 1)) * g
    raise ValueError(f"fading model must be 'rayleigh' or 'rician', got {model!r}")


def apply_fading(seg: IqSegment, model: str, rician_k: float = DEFAULT_RICIAN_K, seed: int = 0) -> IqSegment:
    """Block-flat fading: one complex gain scales the whole segment."""
    h = fading_gains(model, rician_k, seed)[0]
    return seg.with_samples(seg.samples * h)


def freq_shift(seg: IqSegment, delta_f_hz: float) -> IqSegment:
    fs = seg.sample_rate_hz
    if not abs(delta_f_hz) < fs / 2:
        raise ValueError(f"|shift| = {abs(delta_f_hz)} Hz must be below Fs/2 = {fs / 2} Hz")
    if delta_f_hz == 0:
        return seg.with_samples(seg.samples.copy())
    # fractional cycles keep the phase argument small for long segments
    cycles = (delta_f_hz / fs) * np.arange(len(seg))
    cycles -= np.floor(cycles)
    return seg.with_samples(seg.samples * np.exp(2j * np.pi * cycles))


def fit_length(x: np.ndarray, n: int) -> np.ndarray:
    """Tile cyclically or truncate ``x`` to length ``n``."""
    if len(x) >= n:
        return x[:n]
    return np.resize(x, n)


def mix(
    x1: IqSegment,
    x2: IqSegment,
    alpha: float,
    shift1_hz: float = 0.0,
    shift2_hz: float = 0.0,
) -> IqSegment:
    """``norm(norm(x1) + alpha * norm(x2))``, each source optionally shifted first."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    if x1.sample_rate_hz != x2.sample_rate_hz:
        raise ValueError(
            f"sample-rate mismatch: {x1.sample_rate_hz} Hz vs {x2.sample_rate_hz} Hz"
        )
    x2 = x2.with_samples(fit_length(x2.samples, len(x1)))
    a = power_normalize(x1)
    b = power_normalize(x2)
    if shift1_hz:
        a = freq_shift(a, shift1_hz)
    if shift2_hz:
        b = freq_shift(b, shift2_hz)
    return power_normalize(a.with_samples(a.samples + alpha * b.samples))


def apply_plan(
    seg: IqSegment, plan: AugmentPlan, interferer: IqSegment | None = None
) -> tuple[IqSegment, IqSegment | None]:
    """Run the plan in the fixed order fading -> shift -> mix -> AWGN.

    Returns the augmented segment and the noise-only stream (``None`` when no
    SNR target is set).
    """
    plan.validate_for(seg.sample_rate_hz)
    out = seg
    if plan.signal_norm == "power":
        out = power_normalize(out)
    elif plan.signal_norm == "zscore":
        out = z_normalize(out)
    if plan.noise_model != "awgn":
        out = apply_fading(out, plan.noise_model, plan.rician_k, plan.rng_seed)
    if plan.freq_shift_hz:
        out = freq_shift(out, plan.freq_shift_hz)
    if plan.mix_with:
        if interferer is None:
            raise ValueError(f"plan mixes with {plan.mix_with!r} but no interferer was supplied")
        out = mix(out, interferer, plan.mix_ratio_alpha, 0.0, plan.mix_shift_hz)
    noise = None
    if plan.target_snr_db is not None:
        out, noise = add_awgn(out, plan.target_snr_db, plan.rng_seed)
    return out, noise


def estimate_snr(spec: Spectrogram, signal_boxes: Sequence[YoloBox]) -> float:
    """SNR in dB: mean in-box power over the median power of all other cells."""
    image = to_image(spec.power)
    if image.size == 0:
        raise ValueError("empty spectrogram")
    if not signal_boxes:
        raise ValueError("SNR estimate needs at least one signal box")
    height, width = image.shape
    inside = np.zeros(image.shape, dtype=bool)
    for box in signal_boxes:
        r0, r1, c0, c1 = box.pixel_bounds(width, height)
        inside[r0:r1, c0:c1] = True
    if not inside.any():
        raise ValueError("signal boxes cover no spectrogram cells")
    if inside.all():
        raise ValueError("signal boxes cover the whole spectrogram; no noise cells left")
    signal = float(image[inside].mean())
    noise = float(np.median(image[~inside]))
    return 10.0 * math.log10(signal / noise)

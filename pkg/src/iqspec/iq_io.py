"""Raw interleaved-float32 I/Q captures: open, slice, normalize.

Captures are little-endian float32 pairs (I then Q), so one complex sample is
8 bytes. Files are memory mapped read-only and never copied whole.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Any

import numpy as np

from .naming import NamingError, parse_naming

LOGGER = logging.getLogger(__name__)

BYTES_PER_SAMPLE = 8
IQ_DTYPE = np.dtype("<c8")
DEFAULT_SAMPLE_RATE_HZ = 20e6
POWER_EPS = 1e-12
VARIANCE_EPS = 1e-12
NONFINITE_WARN_FRACTION = 0.01
# samples inspected for NaN/Inf when a file is opened; full scans go through nonfinite_fraction
_OPEN_SCAN_SAMPLES = 1 << 20


class RecordingError(ValueError):
    """A capture that cannot be interpreted as interleaved float32 I/Q."""


@dataclass(frozen=True)
class RawRecording:
    path: Path
    sample_count: int
    sample_rate_hz: float = DEFAULT_SAMPLE_RATE_HZ
    center_freq_hz: float = 0.0
    byte_order: str = "little"
    source_meta: Any = None

    @property
    def duration_s(self) -> float:
        return self.sample_count / self.sample_rate_hz

    @cached_property
    def data(self) -> np.memmap:
        return np.memmap(self.path, dtype=IQ_DTYPE, mode="r", shape=(self.sample_count,))

    def read(self, start: int, count: int) -> np.ndarray:
        """Copy ``count`` samples starting at ``start`` out of the mapping as complex128."""
        if start < 0 or count < 0 or start + count > self.sample_count:
            raise IndexError(
                f"samples [{start}, {start + count}) outside recording of {self.sample_count}"
            )
        return np.array(self.data[start : start + count], dtype=np.complex128)

    def __getstate__(self):
        # the mapping is reopened lazily in the receiving process
        state = dict(self.__dict__)
        state.pop("data", None)
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)


@dataclass(frozen=True, eq=False)
class IqSegment:
    samples: np.ndarray
    sample_rate_hz: float
    start_time_s: float = 0.0
    end_time_s: float | None = None
    source_path: str = ""
    start_sample: int = 0

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError("segment needs a non-empty 1-D sample array")
        if not np.iscomplexobj(samples):
            samples = samples.astype(np.complex128)
        object.__setattr__(self, "samples", samples)
        if self.sample_rate_hz <= 0:
            raise ValueError(f"sample rate must be positive, got {self.sample_rate_hz}")
        if self.end_time_s is None:
            object.__setattr__(
                self, "end_time_s", self.start_time_s + samples.size / self.sample_rate_hz
            )

    def __len__(self) -> int:
        return int(self.samples.size)

    def with_samples(self, samples: np.ndarray) -> "IqSegment":
        return replace(self, samples=samples)


def open_recording(
    path,
    sample_rate_hz: float | None = None,
    center_freq_hz: float | None = None,
    source_meta: Any = None,
) -> RawRecording:
    """Map a ``.dat`` capture.

    Without ``source_meta`` the file or directory name is parsed for it.
    ``sample_rate_hz`` falls back to the rate carried by ``source_meta`` (when the
    filename encodes one) and then to 20 MHz.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"file not found: {path}")
    nbytes = os.path.getsize(path)
    if nbytes == 0:
        raise RecordingError(f"empty recording: {path}")
    if nbytes % BYTES_PER_SAMPLE:
        raise RecordingError(
            f"{path}: {nbytes} bytes is not a multiple of {BYTES_PER_SAMPLE} "
            "(truncated or corrupt capture)"
        )
    if source_meta is None:
        try:
            source_meta = parse_naming(path)
        except NamingError:
            pass
    if sample_rate_hz is None:
        sample_rate_hz = getattr(source_meta, "sample_rate_hz", None) or DEFAULT_SAMPLE_RATE_HZ
    if not sample_rate_hz > 0:
        raise ValueError(f"sample rate must be positive, got {sample_rate_hz}")
    if center_freq_hz is None:
        center_freq_hz = getattr(source_meta, "center_freq_hz", None) or 0.0

    rec = RawRecording(
        path=path,
        sample_count=nbytes // BYTES_PER_SAMPLE,
        sample_rate_hz=float(sample_rate_hz),
        center_freq_hz=float(center_freq_hz),
        source_meta=source_meta,
    )
    bad = nonfinite_fraction(rec, max_samples=_OPEN_SCAN_SAMPLES)
    if bad > NONFINITE_WARN_FRACTION:
        LOGGER.warning(
            "%s: %.1f%% of samples are NaN/Inf; byte order or format may be wrong",
            path,
            100 * bad,
        )
    return rec


def nonfinite_fraction(rec: RawRecording, max_samples: int | None = None, chunk: int = 1 << 22) -> float:
    """Fraction of complex samples with a NaN or Inf component."""
    total = rec.sample_count if max_samples is None else min(rec.sample_count, max_samples)
    bad = 0
    for start in range(0, total, chunk):
        block = rec.data[start : min(start + chunk, total)]
        bad += int(np.count_nonzero(~np.isfinite(block)))
    return bad / total if total else 0.0


def segment_count(sample_count: int, samples_per_segment: int, stride: int) -> int:
    if samples_per_segment > sample_count:
        return 0
    return (sample_count - samples_per_segment) // stride + 1


def read_segment(rec: RawRecording, start_sample: int, count: int) -> IqSegment:
    fs = rec.sample_rate_hz
    return IqSegment(
        samples=rec.read(start_sample, count),
        sample_rate_hz=fs,
        start_time_s=start_sample / fs,
        end_time_s=(start_sample + count) / fs,
        source_path=str(rec.path),
        start_sample=start_sample,
    )


def slice_segments(rec: RawRecording, samples_per_segment: int, stride: int | None = None) -> list[IqSegment]:
    """Cut the recording into fixed windows; segment ``i`` starts at ``i * stride``.

    The trailing partial window is dropped. ``stride`` defaults to the window
    length (non-overlapping).
    """
    if stride is None:
        stride = samples_per_segment
    if samples_per_segment <= 0 or stride <= 0:
        raise ValueError("window and stride must be positive")
    if samples_per_segment > rec.sample_count:
        raise RecordingError(
            f"recording too short: {rec.sample_count} samples < window of {samples_per_segment}"
        )
    n = segment_count(rec.sample_count, samples_per_segment, stride)
    return [read_segment(rec, i * stride, samples_per_segment) for i in range(n)]


def power_normalize(seg: IqSegment, eps: float = POWER_EPS) -> IqSegment:
    x = seg.samples
    power = np.mean(x.real**2 + x.imag**2)
    return seg.with_samples(x / np.sqrt(power + eps))


def z_normalize(seg: IqSegment, eps: float = VARIANCE_EPS) -> IqSegment:
    """Standardize I and Q independently; a constant component becomes zero."""
    x = seg.samples
    if x.size < 2:
        raise ValueError("z-normalization needs at least 2 samples")

    def standardize(part: np.ndarray) -> np.ndarray:
        centered = part - part.mean()
        var = np.mean(centered**2)
        if var <= eps:
            return np.zeros_like(centered)
        return centered / np.sqrt(var)

    return seg.with_samples(standardize(x.real) + 1j * standardize(x.imag))


def write_iq(path, samples: np.ndarray) -> Path:
    """Write complex samples as interleaved little-endian float32."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.asarray(samples).astype(IQ_DTYPE).tofile(path)
    return path

"""Per-sample reproducibility records and their CSV form."""

from __future__ import annotations

import csv
import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path

from .augment import AugmentPlan
from .spectro import RenderPolicy, StftParams


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class SampleManifest:
    sample_id: str
    source_path: str
    class_label: str
    sampling_rate_hz: float
    fft_size: int
    overlap: int
    window_kind: str
    num_frames: int
    start_sample: int
    num_samples: int
    start_time_s: float
    end_time_s: float
    center_freq_hz: float
    target_snr_db: float | None
    noise_model: str
    rician_k: float
    freq_shift_hz: float
    mix_with: str
    mix_ratio_alpha: float | None
    mix_shift_hz: float
    rng_seed: int
    signal_norm: str
    colormap: str
    spec_norm: str
    epsilon_db: float
    output_image_path: str
    output_label_path: str = ""
    noise_image_path: str = ""
    source_label_path: str = ""
    label_set_tag: str = ""
    min_height: float = 0.01

    @property
    def plan(self) -> AugmentPlan:
        return AugmentPlan(
            target_snr_db=self.target_snr_db,
            noise_model=self.noise_model,
            rician_k=self.rician_k,
            freq_shift_hz=self.freq_shift_hz,
            mix_with=self.mix_with,
            mix_ratio_alpha=self.mix_ratio_alpha,
            mix_shift_hz=self.mix_shift_hz,
            rng_seed=self.rng_seed,
            signal_norm=self.signal_norm,
        )

    @property
    def policy(self) -> RenderPolicy:
        return RenderPolicy(colormap=self.colormap, spec_norm=self.spec_norm, epsilon_db=self.epsilon_db)

    @property
    def stft_params(self) -> StftParams:
        return StftParams(
            fft_size=self.fft_size,
            overlap=self.overlap,
            window_kind=self.window_kind,
            num_frames_target=self.num_frames,
        )

    def replace(self, **changes) -> "SampleManifest":
        return dataclasses.replace(self, **changes)


COLUMNS = tuple(f.name for f in fields(SampleManifest))
_TYPES = {f.name: f.type for f in fields(SampleManifest)}


def _encode(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _decode(name: str, text: str):
    kind = _TYPES[name]
    if kind == "str":
        return text
    if kind.endswith("| None"):
        if text == "":
            return None
        kind = kind.split("|")[0].strip()
    if kind == "int":
        return int(text)
    if kind == "float":
        return float(text)
    raise TypeError(f"no decoder for {name}: {kind}")


def write_manifest(rows, path) -> Path:
    """Write rows (sorted by ``sample_id``) as quoted CSV with a fixed column order."""
    rows = sorted(rows, key=lambda r: r.sample_id)
    if not rows:
        raise ManifestError("refusing to write an empty manifest")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_ALL, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_encode(getattr(row, c)) for c in COLUMNS])
    return path


def read_manifest(path) -> list[SampleManifest]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise ManifestError(f"{path}: empty manifest")
        if tuple(header) != COLUMNS:
            raise ManifestError(f"{path}: unexpected header {header}")
        rows = []
        for row_no, values in enumerate(reader, start=1):
            if len(values) != len(COLUMNS):
                raise ManifestError(
                    f"{path}: row {row_no} has {len(values)} fields, expected {len(COLUMNS)}"
                )
            try:
                rows.append(SampleManifest(**{c: _decode(c, v) for c, v in zip(COLUMNS, values)}))
            except (TypeError, ValueError) as exc:
                raise ManifestError(f"{path}: row {row_no}: {exc}") from None
    return rows


def merge_manifest(rows, path) -> list[SampleManifest]:
    """Union ``rows`` into the manifest at ``path`` (keyed by sample_id) and rewrite it."""
    path = Path(path)
    merged = {r.sample_id: r for r in read_manifest(path)} if path.exists() else {}
    merged.update((r.sample_id, r) for r in rows)
    out = sorted(merged.values(), key=lambda r: r.sample_id)
    write_manifest(out, path)
    return out

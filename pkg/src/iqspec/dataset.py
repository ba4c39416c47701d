"""Dataset builds: SNR sweeps, background extraction, and exact regeneration.

Every emitted sample is described by one :class:`SampleManifest` row; the row
alone (plus the source capture) is enough to rebuild the sample's files
byte for byte. Output paths in the manifest are relative to the build root.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Iterable, Sequence

from .annotate import DEFAULT_MIN_HEIGHT, LabelFile, read_labels, shift_labels, write_labels
from .augment import AugmentPlan, apply_plan
from .iq_io import RawRecording, open_recording, read_segment, segment_count
from .manifest import SampleManifest, merge_manifest
from .naming import NamingError, parse_naming
from .spectro import RenderPolicy, StftParams, render_variant, spectrogram_to_png, stft

LOGGER = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.csv"
BACKGROUND_CLASS = "background"
NO_DRONE_TAGS = {"background", "no_drone", "no-drone", "nodrone", "noise"}


@dataclass(frozen=True)
class Source:
    """A recording plus its class tag and optional per-segment label directory.

    Labels for segment ``i`` are looked up as ``{label_dir}/{stem}_sample_{i}.txt``.
    """

    recording: RawRecording
    class_label: str | None = None
    label_dir: Path | None = None

    @property
    def label(self) -> str:
        if self.class_label:
            return self.class_label
        meta = self.recording.source_meta
        if meta is None:
            try:
                meta = parse_naming(self.recording.path)
            except NamingError:
                return self.recording.path.stem
        return meta.class_label

    def label_path(self, index: int) -> Path | None:
        if self.label_dir is None:
            return None
        path = Path(self.label_dir) / f"{self.recording.path.stem}_sample_{index}.txt"
        return path if path.is_file() else None


def as_source(item) -> Source:
    if isinstance(item, Source):
        return item
    if isinstance(item, RawRecording):
        return Source(item)
    raise TypeError(f"expected RawRecording or Source, got {type(item).__name__}")


def snr_dirname(snr_db: float) -> str:
    value = float(snr_db)
    if value == 0:
        value = 0.0  # no "-0"
    text = repr(value)
    if text.endswith(".0"):
        text = text[:-2]
    return f"snr_{text}dB"


def parse_snr_dirname(name: str) -> float:
    if not (name.startswith("snr_") and name.endswith("dB")):
        raise ValueError(f"not an SNR directory name: {name!r}")
    return float(name[4:-2])


def safe_name(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name) or "unknown"


def sample_identity(
    source_path: str,
    start_sample: int,
    num_samples: int,
    plan: AugmentPlan,
    policy: RenderPolicy,
    params: StftParams,
    tag: str = "",
) -> str:
    """16-hex-digit content hash of everything that defines a sample except its seed."""
    payload = {
        "source": Path(source_path).as_posix(),
        "start": start_sample,
        "count": num_samples,
        "plan": {k: v for k, v in asdict(plan).items() if k != "rng_seed"},
        "policy": asdict(policy),
        "stft": asdict(params),
        "tag": tag,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def derive_seed(master_seed: int, sample_id: str) -> int:
    digest = hashlib.sha256(f"{master_seed}:{sample_id}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


def make_row(
    source: Source,
    index: int,
    start_sample: int,
    params: StftParams,
    plan: AugmentPlan,
    policy: RenderPolicy,
    master_seed: int,
    image_rel: Path,
    label_rel: Path | None = None,
    noise_rel: Path | None = None,
    source_label: Path | None = None,
    class_label: str | None = None,
    label_set_tag: str = "",
    min_height: float = DEFAULT_MIN_HEIGHT,
    tag: str = "",
) -> SampleManifest:
    rec = source.recording
    count = params.samples_per_segment
    sid = sample_identity(str(rec.path), start_sample, count, plan, policy, params, tag)
    plan = replace(plan, rng_seed=derive_seed(master_seed, sid))
    resolved = render_variant(policy, sid)
    fs = rec.sample_rate_hz
    return SampleManifest(
        sample_id=sid,
        source_path=str(rec.path),
        class_label=class_label or source.label,
        sampling_rate_hz=fs,
        fft_size=params.fft_size,
        overlap=params.overlap,
        window_kind=params.window_kind,
        num_frames=params.num_frames_target,
        start_sample=start_sample,
        num_samples=count,
        start_time_s=start_sample / fs,
        end_time_s=(start_sample + count) / fs,
        center_freq_hz=rec.center_freq_hz,
        target_snr_db=plan.target_snr_db,
        noise_model=plan.noise_model,
        rician_k=plan.rician_k,
        freq_shift_hz=plan.freq_shift_hz,
        mix_with=plan.mix_with,
        mix_ratio_alpha=plan.mix_ratio_alpha,
        mix_shift_hz=plan.mix_shift_hz,
        rng_seed=plan.rng_seed,
        signal_norm=plan.signal_norm,
        colormap=resolved.colormap,
        spec_norm=resolved.spec_norm,
        epsilon_db=resolved.epsilon_db,
        output_image_path=image_rel.as_posix(),
        output_label_path=label_rel.as_posix() if label_rel else "",
        noise_image_path=noise_rel.as_posix() if noise_rel else "",
        source_label_path=str(source_label) if source_label else "",
        label_set_tag=label_set_tag,
        min_height=min_height,
    )


def render_sample(row: SampleManifest, out_root) -> list[Path]:
    """Execute one manifest row: slice, augment, STFT, render, labels."""
    out_root = Path(out_root)
    source = Path(row.source_path)
    if not source.is_file():
        raise FileNotFoundError(f"file not found: {source}")
    rec = open_recording(source, row.sampling_rate_hz, row.center_freq_hz)
    seg = read_segment(rec, row.start_sample, row.num_samples)
    plan = row.plan
    interferer = None
    if plan.mix_with:
        other = open_recording(plan.mix_with, row.sampling_rate_hz)
        interferer = read_segment(other, 0, min(row.num_samples, other.sample_count))
    augmented, noise = apply_plan(seg, plan, interferer)
    params = row.stft_params
    policy = row.policy
    written = [spectrogram_to_png(stft(augmented, params), policy, out_root / row.output_image_path)]
    if row.noise_image_path and noise is not None:
        written.append(spectrogram_to_png(stft(noise, params), policy, out_root / row.noise_image_path))
    if row.output_label_path:
        if row.source_label_path:
            labels = read_labels(row.source_label_path)
            if plan.freq_shift_hz:
                labels = shift_labels(labels, plan.freq_shift_hz, row.sampling_rate_hz, row.min_height)
        else:
            labels = LabelFile()
        written.append(write_labels(labels, out_root / row.output_label_path))
    return written


def _render_job(args) -> list[Path]:
    row, out_root = args
    return render_sample(row, out_root)


def render_rows(rows: Sequence[SampleManifest], out_root, jobs: int = 1) -> None:
    if jobs <= 1 or len(rows) <= 1:
        for i, row in enumerate(rows, 1):
            render_sample(row, out_root)
            LOGGER.debug("rendered %d/%d %s", i, len(rows), row.output_image_path)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for _ in pool.map(_render_job, [(r, out_root) for r in rows], chunksize=4):
            pass


def segment_starts(rec: RawRecording, params: StftParams, stride: int | None = None) -> list[int]:
    window = params.samples_per_segment
    stride = stride or window
    n = segment_count(rec.sample_count, window, stride)
    return [i * stride for i in range(n)]


def build_snr_sweep(
    sources: Iterable,
    snr_list: Sequence[float],
    params: StftParams,
    policy: RenderPolicy,
    seed: int,
    out_root,
    stride: int | None = None,
    export_noise: bool = False,
    base_plan: AugmentPlan = AugmentPlan(),
    jobs: int = 1,
    manifest_name: str = MANIFEST_NAME,
) -> list[SampleManifest]:
    """One sample per (segment, SNR) under ``out_root/snr_{value}dB/{class}/``.

    Noise-only spectrograms go to ``out_root/noise_only/snr_{value}dB/{class}/``
    when ``export_noise`` is set. Rows are merged into ``out_root/manifest.csv``.
    """
    sources = [as_source(s) for s in sources]
    if not sources:
        raise ValueError("no sources to build from")
    if not snr_list:
        raise ValueError("snr_list must not be empty")
    out_root = Path(out_root)
    rows = []
    for source in sources:
        rec = source.recording
        starts = segment_starts(rec, params, stride)
        if not starts:
            LOGGER.warning("%s is shorter than one segment; skipped", rec.path)
        cls = safe_name(source.label)
        for index, start in enumerate(starts):
            src_label = source.label_path(index)
            for snr in snr_list:
                stratum = Path(snr_dirname(snr)) / cls
                name = f"{rec.path.stem}_sample_{index}"
                rows.append(
                    make_row(
                        source,
                        index,
                        start,
                        params,
                        replace(base_plan, target_snr_db=float(snr)),
                        policy,
                        seed,
                        image_rel=stratum / f"{name}.png",
                        label_rel=stratum / f"{name}.txt" if src_label else None,
                        noise_rel=Path("noise_only") / stratum / f"{name}.png" if export_noise else None,
                        source_label=src_label,
                    )
                )
    if not rows:
        raise ValueError("sources produced no segments")
    render_rows(rows, out_root, jobs)
    merge_manifest(rows, out_root / manifest_name)
    return sorted(rows, key=lambda r: r.sample_id)


def extract_backgrounds(
    sources: Iterable,
    params: StftParams,
    policy: RenderPolicy,
    out_root,
    seed: int = 0,
    stride: int | None = None,
    base_plan: AugmentPlan = AugmentPlan(),
    jobs: int = 1,
    manifest_name: str = MANIFEST_NAME,
) -> list[SampleManifest]:
    """Spectrograms with empty label files from no-drone recordings.

    Rows carry class ``background`` and are merged into the same unified
    manifest as drone builds.
    """
    sources = [as_source(s) for s in sources]
    if not sources:
        raise ValueError("no background sources")
    for s in sources:
        if s.class_label and s.class_label.lower() not in NO_DRONE_TAGS:
            raise ValueError(f"{s.recording.path} is tagged {s.class_label!r}, not as a no-drone capture")
    out_root = Path(out_root)
    rows = []
    for source in sources:
        rec = source.recording
        for index, start in enumerate(segment_starts(rec, params, stride)):
            stem = Path(BACKGROUND_CLASS) / f"{rec.path.stem}_sample_{index}"
            rows.append(
                make_row(
                    source,
                    index,
                    start,
                    params,
                    base_plan,
                    policy,
                    seed,
                    image_rel=stem.with_suffix(".png"),
                    label_rel=stem.with_suffix(".txt"),
                    class_label=BACKGROUND_CLASS,
                    tag=BACKGROUND_CLASS,
                )
            )
    if not rows:
        raise ValueError("background sources produced no segments")
    render_rows(rows, out_root, jobs)
    merge_manifest(rows, out_root / manifest_name)
    return sorted(rows, key=lambda r: r.sample_id)


def regenerate(row: SampleManifest, out_root=".") -> list[Path]:
    """Rebuild a sample's files from its manifest row alone."""
    if not math.isfinite(row.sampling_rate_hz) or row.sampling_rate_hz <= 0:
        raise ValueError(f"sample {row.sample_id}: invalid sampling rate {row.sampling_rate_hz}")
    return render_sample(row, out_root)


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def tree_hash(root, exclude: Iterable[str] = ()) -> str:
    """Hash of every file's relative path and contents under ``root``."""
    root = Path(root)
    skip = set(exclude)
    h = hashlib.sha256()
    for path in sorted(p for p in root.rglob("*") if p.is_file()):
        rel = path.relative_to(root).as_posix()
        if rel in skip:
            continue
        h.update(rel.encode() + b"\0")
        h.update(path.read_bytes())
        h.update(b"\0")
    return h.hexdigest()

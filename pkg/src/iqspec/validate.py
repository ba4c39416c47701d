"""Dataset and capture health checks behind ``iqspec validate``."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .annotate import LabelFormatError, parse_label_text, read_labels, validate_policy
from .augment import apply_plan
from .iq_io import (
    BYTES_PER_SAMPLE,
    NONFINITE_WARN_FRACTION,
    RecordingError,
    open_recording,
    nonfinite_fraction,
    read_segment,
)
from .manifest import ManifestError, read_manifest
from .dataset import MANIFEST_NAME
from .spectro import stft

IMAGE_SUFFIXES = {".png", ".jpg", ".jpeg", ".bmp"}
NON_LABEL_TXT = {"run_config.txt", "classes.txt", "readme.txt"}


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)

    def count(self, kind: str) -> None:
        self.checked[kind] = self.checked.get(kind, 0) + 1

    @property
    def ok(self) -> bool:
        return not self.errors


def check_recording(path: Path, report: ValidationReport) -> None:
    report.count("recordings")
    size = os.path.getsize(path)
    if size == 0:
        report.errors.append(f"{path}: empty recording")
        return
    if size % BYTES_PER_SAMPLE:
        report.errors.append(
            f"{path}: {size} bytes is not a multiple of {BYTES_PER_SAMPLE} (truncated capture)"
        )
        return
    bad = nonfinite_fraction(open_recording(path))
    if bad > NONFINITE_WARN_FRACTION:
        report.errors.append(f"{path}: {100 * bad:.2f}% NaN/Inf samples (wrong format or byte order?)")


def _is_label_file(path: Path) -> bool:
    if path.suffix.lower() != ".txt" or path.name.lower() in NON_LABEL_TXT:
        return False
    if "labels" in (p.lower() for p in path.parts[:-1]):
        return True
    return any(path.with_suffix(s).exists() for s in IMAGE_SUFFIXES)


def check_labels(path: Path, report: ValidationReport) -> None:
    report.count("labels")
    try:
        parse_label_text(path.read_text(encoding="utf-8"), path)
    except LabelFormatError as exc:
        report.errors.append(str(exc))


def check_manifest(path: Path, report: ValidationReport, policy_checks: bool = True) -> None:
    root = path.parent
    try:
        rows = read_manifest(path)
    except ManifestError as exc:
        report.errors.append(str(exc))
        return
    for row in rows:
        report.count("manifest_rows")
        for rel in (row.output_image_path, row.output_label_path, row.noise_image_path):
            if rel and not (root / rel).is_file():
                report.errors.append(f"{path}: sample {row.sample_id} output missing: {rel}")
        if not Path(row.source_path).is_file():
            report.findings.append(f"{path}: sample {row.sample_id} source not available: {row.source_path}")
            continue
        if not (policy_checks and row.output_label_path and (root / row.output_label_path).is_file()):
            continue
        try:
            labels = read_labels(root / row.output_label_path, image_path=root / row.output_image_path)
        except LabelFormatError:
            continue  # already reported by the label scan
        if not labels.boxes:
            continue
        rec = open_recording(row.source_path, row.sampling_rate_hz)
        seg = read_segment(rec, row.start_sample, row.num_samples)
        interferer = None
        if row.mix_with:
            other = open_recording(row.mix_with, row.sampling_rate_hz)
            interferer = read_segment(other, 0, min(row.num_samples, other.sample_count))
        augmented, _ = apply_plan(seg, row.plan, interferer)
        try:
            found = validate_policy(labels, stft(augmented, row.stft_params))
        except ValueError as exc:
            report.errors.append(f"{root / row.output_label_path}: {exc}")
            continue
        for f in found:
            report.findings.append(f"{root / row.output_label_path}: box {f.box_index}: {f.message}")


def validate_path(path, policy_checks: bool = True) -> ValidationReport:
    path = Path(path)
    report = ValidationReport()
    if not path.exists():
        raise FileNotFoundError(f"file not found: {path}")
    if path.is_file():
        if path.suffix.lower() == ".dat":
            check_recording(path, report)
        elif path.name == MANIFEST_NAME:
            check_manifest(path, report, policy_checks)
        elif path.suffix.lower() == ".txt":
            check_labels(path, report)
        else:
            raise ValueError(f"don't know how to validate {path}")
        return report
    for p in sorted(path.rglob("*")):
        if not p.is_file():
            continue
        if p.suffix.lower() == ".dat":
            try:
                check_recording(p, report)
            except RecordingError as exc:
                report.errors.append(str(exc))
        elif _is_label_file(p):
            check_labels(p, report)
    for manifest in sorted(path.rglob(MANIFEST_NAME)):
        check_manifest(manifest, report, policy_checks)
    return report

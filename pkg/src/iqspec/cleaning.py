"""Normalize third-party YOLO releases into one split/role/class hierarchy.

Output layout::

    out_root/{train,val,test}/images/{class}/<image>
    out_root/{train,val,test}/labels/{class}/<stem>.txt
    out_root/classes.tsv            id<TAB>name
    out_root/migration_report.tsv   status<TAB>source<TAB>destination-or-reason

Recognized inputs: split-first (``train/images/x.jpg`` + ``train/labels/x.txt``,
Roboflow style), class-first (``droneA/train/images/...``), and either of those
with images and labels side by side in one folder.
"""

from __future__ import annotations

import csv
import shutil
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .annotate import LabelFormatError, parse_label_text, read_class_map, write_class_map

SPLITS = ("train", "val", "test")
SPLIT_ALIASES = {
    "train": "train",
    "training": "train",
    "val": "val",
    "valid": "val",
    "validation": "val",
    "test": "test",
    "testing": "test",
}
IMAGE_DIRS = {"images", "image", "imgs"}
LABEL_DIRS = {"labels", "label", "annotations"}
IMAGE_SUFFIXES = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff"}
YAML_MAPS = {"data.yaml", "data.yml", "dataset.yaml", "dataset.yml"}
LIST_MAPS = {"classes.txt", "obj.names", "classes.names"}
TSV_MAPS = {"classes.tsv", "class_map.tsv"}
DOC_FILES = {"readme.txt", "readme.roboflow.txt", "readme.dataset.txt", "notes.txt"}
LAYOUTS = ("auto", "roboflow_like")


class ClassMapConflict(ValueError):
    pass


@dataclass
class MigrationReport:
    total_images: int = 0
    migrated: list[tuple[Path, Path]] = field(default_factory=list)
    skipped: list[tuple[Path, str]] = field(default_factory=list)
    orphan_labels: list[Path] = field(default_factory=list)
    class_map: dict[int, str] = field(default_factory=dict)

    @property
    def balanced(self) -> bool:
        return len(self.migrated) + len(self.skipped) == self.total_images


def _read_yaml_names(path: Path) -> dict[int, str]:
    data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    names = data.get("names", {})
    if isinstance(names, list):
        return {i: str(n) for i, n in enumerate(names)}
    if isinstance(names, dict):
        return {int(k): str(v) for k, v in names.items()}
    raise ValueError(f"{path}: 'names' must be a list or mapping")


def _read_list_names(path: Path) -> dict[int, str]:
    lines = [ln.strip() for ln in path.read_text(encoding="utf-8").splitlines()]
    return {i: name for i, name in enumerate(ln for ln in lines if ln)}


def _load_map(path: Path) -> dict[int, str] | None:
    name = path.name.lower()
    if name in YAML_MAPS:
        return _read_yaml_names(path)
    if name in LIST_MAPS:
        return _read_list_names(path)
    if name in TSV_MAPS:
        return read_class_map(path)
    return None


def _split_of(parts: tuple[str, ...]) -> str | None:
    for p in parts:
        if p.lower() in SPLIT_ALIASES:
            return SPLIT_ALIASES[p.lower()]
    return None


def _class_dirs(parts: tuple[str, ...]) -> list[str]:
    return [
        p
        for p in parts
        if p.lower() not in SPLIT_ALIASES and p.lower() not in IMAGE_DIRS and p.lower() not in LABEL_DIRS
    ]


def _label_candidates(rel: Path) -> list[Path]:
    parts = rel.parent.parts
    stem_txt = rel.with_suffix(".txt").name
    out = []
    for i, p in enumerate(parts):
        if p.lower() in IMAGE_DIRS:
            for label_dir in ("labels", "label", "annotations"):
                swapped = parts[:i] + (label_dir,) + parts[i + 1 :]
                out.append(Path(*swapped, stem_txt))
    out.append(Path(*parts, stem_txt) if parts else Path(stem_txt))
    return out


def _merge_maps(maps: list[tuple[Path, dict[int, str]]]) -> dict[int, str]:
    merged: dict[int, str] = {}
    origin: dict[int, Path] = {}
    for path, mapping in maps:
        for k, v in mapping.items():
            if k in merged and merged[k] != v:
                raise ClassMapConflict(
                    f"class {k} is {merged[k]!r} in {origin[k]} but {v!r} in {path}"
                )
            merged[k] = v
            origin.setdefault(k, path)
    return merged


def _common_prefix(dirs: list[tuple[str, ...]]) -> int:
    if not dirs:
        return 0
    n = min(len(d) for d in dirs)
    k = 0
    while k < n and len({d[k] for d in dirs}) == 1 and dirs[0][k].lower() not in SPLIT_ALIASES:
        k += 1
    return k


def clean_third_party(src_root, layout_hint: str = "auto", out_root=None) -> MigrationReport:
    if layout_hint not in LAYOUTS:
        raise ValueError(f"unknown layout {layout_hint!r}; choose from {LAYOUTS}")
    src_root = Path(src_root)
    out_root = Path(out_root)
    if not src_root.is_dir():
        raise FileNotFoundError(f"source root not found: {src_root}")

    files = sorted(p.relative_to(src_root) for p in src_root.rglob("*") if p.is_file())
    images = [f for f in files if f.suffix.lower() in IMAGE_SUFFIXES]
    maps = []
    label_files = set()
    for f in files:
        low = f.name.lower()
        mapping = _load_map(src_root / f)
        if mapping is not None:
            maps.append((f, mapping))
        elif f.suffix.lower() == ".txt" and low not in DOC_FILES:
            label_files.add(f)
    # a conflict anywhere (typically between per-split maps) is fatal
    class_map = _merge_maps(maps)

    def strip(rel: Path) -> tuple[str, ...]:
        return rel.parent.parts[prefix:]

    prefix = _common_prefix([f.parent.parts for f in images + sorted(label_files)])
    report = MigrationReport(total_images=len(images))
    plans = []
    claimed = set()
    inferred: dict[int, set[str]] = {}
    for rel in images:
        parts = strip(rel)
        split = _split_of(parts)
        if split is None:
            report.skipped.append((src_root / rel, "no train/val/test directory"))
            continue
        if layout_hint == "roboflow_like" and not any(p.lower() in IMAGE_DIRS for p in parts):
            report.skipped.append((src_root / rel, "not in an images/ directory (roboflow_like)"))
            continue
        label = next((c for c in _label_candidates(rel) if c in label_files), None)
        if label is None:
            report.skipped.append((src_root / rel, "missing label file"))
            continue
        claimed.add(label)
        try:
            boxes = parse_label_text((src_root / label).read_text(encoding="utf-8"), src_root / label)
        except LabelFormatError as exc:
            report.skipped.append((src_root / rel, f"malformed label: {exc}"))
            continue
        folders = [] if layout_hint == "roboflow_like" else _class_dirs(parts)
        if len(folders) > 1:
            report.skipped.append((src_root / rel, f"ambiguous class folders {folders}"))
            continue
        ids = Counter(b.class_id for b in boxes)
        if folders:
            for cid in ids:
                inferred.setdefault(cid, set()).add(folders[0])
        plans.append((rel, label, split, folders[0] if folders else None, ids))

    if not class_map:
        class_map = {cid: sorted(names)[0] if len(names) == 1 else f"class_{cid}" for cid, names in inferred.items()}
    report.class_map = dict(sorted(class_map.items()))

    for split in SPLITS:
        for role in ("images", "labels"):
            (out_root / split / role).mkdir(parents=True, exist_ok=True)
    taken = set()
    for rel, label, split, folder, ids in plans:
        unknown = sorted(set(ids) - set(class_map)) if class_map else []
        if unknown:
            report.skipped.append((src_root / rel, f"class ids {unknown} missing from class map"))
            continue
        if folder is not None:
            cls = folder
        elif ids:
            # most frequent id, ties to the lowest
            cid = min(ids, key=lambda c: (-ids[c], c))
            cls = class_map.get(cid, f"class_{cid}")
        else:
            cls = "background"
        img_dst = out_root / split / "images" / cls / rel.name
        lbl_dst = out_root / split / "labels" / cls / label.name
        if img_dst in taken:
            report.skipped.append((src_root / rel, f"duplicate destination {img_dst}"))
            continue
        taken.add(img_dst)
        img_dst.parent.mkdir(parents=True, exist_ok=True)
        lbl_dst.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(src_root / rel, img_dst)
        shutil.copyfile(src_root / label, lbl_dst)
        report.migrated.append((src_root / rel, img_dst))

    report.orphan_labels = [src_root / f for f in sorted(label_files - claimed)]
    write_class_map(report.class_map, out_root / "classes.tsv")
    _write_report(report, out_root / "migration_report.tsv")
    return report


def _write_report(report: MigrationReport, path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["status", "source", "detail"])
        for src, dst in report.migrated:
            w.writerow(["migrated", src.as_posix(), dst.as_posix()])
        for src, reason in report.skipped:
            w.writerow(["skipped", src.as_posix(), reason])
        for src in report.orphan_labels:
            w.writerow(["orphan_label", src.as_posix(), "label without image"])

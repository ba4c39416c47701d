"""YOLO labels on spectrogram images and their exact transformation.

Boxes are ``class cx cy w h`` in normalized image coordinates: x runs along
time (columns), y runs down the frequency axis with row 0 at +Fs/2. A
baseband frequency shift of ``df`` therefore moves content by
``d = -df / Fs`` in y, wrapping circularly at the band edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .spectro import Spectrogram, to_image

DEFAULT_MIN_HEIGHT = 0.01
# coordinates are written with 6 decimals, so reads tolerate one rounding quantum at the edges
READ_EDGE_TOL = 1e-6
_SPLIT_TOL = 1e-12


class LabelFormatError(ValueError):
    def __init__(self, path, line_no: int, message: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


@dataclass(frozen=True)
class YoloBox:
    class_id: int
    cx: float
    cy: float
    w: float
    h: float

    def __post_init__(self):
        if self.class_id < 0:
            raise ValueError(f"class id must be nonnegative, got {self.class_id}")
        if not (self.w > 0 and self.h > 0):
            raise ValueError(f"box width and height must be positive, got w={self.w} h={self.h}")

    @property
    def top(self) -> float:
        return self.cy - self.h / 2

    @property
    def bottom(self) -> float:
        return self.cy + self.h / 2

    @property
    def left(self) -> float:
        return self.cx - self.w / 2

    @property
    def right(self) -> float:
        return self.cx + self.w / 2

    def in_bounds(self, tol: float = 1e-9) -> bool:
        return (
            all(0.0 <= v <= 1.0 for v in (self.cx, self.cy, self.w, self.h))
            and self.left >= -tol
            and self.right <= 1 + tol
            and self.top >= -tol
            and self.bottom <= 1 + tol
        )

    @classmethod
    def from_rows(cls, class_id: int, cx: float, w: float, top: float, bottom: float) -> "YoloBox":
        return cls(class_id, cx, (top + bottom) / 2, w, bottom - top)

    def pixel_bounds(self, width: int, height: int) -> tuple[int, int, int, int]:
        """Half-open ``(row0, row1, col0, col1)`` pixel extents, clipped to the image."""
        r0 = min(max(round(self.top * height), 0), height)
        r1 = min(max(round(self.bottom * height), 0), height)
        c0 = min(max(round(self.left * width), 0), width)
        c1 = min(max(round(self.right * width), 0), width)
        return r0, r1, c0, c1


@dataclass
class LabelFile:
    image_path: Path | None = None
    boxes: list[YoloBox] = field(default_factory=list)
    class_map: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.class_map:
            missing = sorted({b.class_id for b in self.boxes} - set(self.class_map))
            if missing:
                raise ValueError(f"class ids {missing} not present in class map")

    @property
    def is_background(self) -> bool:
        return not self.boxes


def _shift_box(box: YoloBox, d: float) -> list[YoloBox]:
    top = box.top + d
    top -= math.floor(top)
    bottom = top + box.h
    if bottom <= 1.0 + _SPLIT_TOL:
        return [YoloBox.from_rows(box.class_id, box.cx, box.w, top, min(bottom, 1.0))]
    pieces = []
    if 1.0 - top > 0:
        pieces.append(YoloBox.from_rows(box.class_id, box.cx, box.w, top, 1.0))
    pieces.append(YoloBox.from_rows(box.class_id, box.cx, box.w, 0.0, bottom - 1.0))
    return pieces


def shift_labels(
    labels: LabelFile,
    delta_f_hz: float,
    sample_rate_hz: float,
    min_height: float = DEFAULT_MIN_HEIGHT,
) -> LabelFile:
    """Move boxes to follow a baseband frequency shift of ``delta_f_hz``.

    A box pushed across the top or bottom edge is split into two boxes whose
    heights sum to the original. Pieces shorter than ``min_height`` are dropped.
    """
    if not abs(delta_f_hz) < sample_rate_hz / 2:
        raise ValueError(
            f"|shift| = {abs(delta_f_hz)} Hz must be below Fs/2 = {sample_rate_hz / 2} Hz"
        )
    if not 0.0 <= min_height < 1.0:
        raise ValueError("min_height must be in [0, 1)")
    if delta_f_hz == 0:
        kept = [b for b in labels.boxes if b.h >= min_height]
        return replace(labels, boxes=kept)
    d = -delta_f_hz / sample_rate_hz
    out = []
    for box in labels.boxes:
        out.extend(p for p in _shift_box(box, d) if p.h >= min_height)
    return replace(labels, boxes=out)


@dataclass(frozen=True)
class PolicyFinding:
    kind: str
    box_index: int | None
    message: str


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Half-open intervals of consecutive True values."""
    padded = np.concatenate(([False], mask, [False])).astype(np.int8)
    edges = np.flatnonzero(np.diff(padded))
    return list(zip(edges[::2].tolist(), edges[1::2].tolist()))


def _image_size(path) -> tuple[int, int] | None:
    from PIL import Image

    if path is None or not Path(path).is_file():
        return None
    with Image.open(path) as im:
        return im.size


def validate_policy(
    labels: LabelFile,
    spec: Spectrogram,
    on_fraction_threshold: float = 0.10,
    on_threshold_db: float = 6.0,
    edge_tolerance: int = 1,
) -> list[PolicyFinding]:
    """Report boxes that disagree with the whole-signal annotation policy.

    Columns inside a box count as ON when their mean in-box power exceeds the
    spectrogram's median power by ``on_threshold_db``. Nothing is modified.
    """
    size = _image_size(labels.image_path)
    if size is not None and size != (spec.frames, spec.fft_size):
        raise ValueError(
            f"image {labels.image_path} is {size[0]}x{size[1]}, "
            f"spectrogram is {spec.frames}x{spec.fft_size}"
        )
    image = to_image(spec.power)
    height, width = image.shape
    floor = float(np.median(image))
    on_level = floor * 10 ** (on_threshold_db / 10)
    findings = []
    for i, box in enumerate(labels.boxes):
        if box.w < on_fraction_threshold:
            findings.append(
                PolicyFinding(
                    "short_duration",
                    i,
                    f"time extent below {on_fraction_threshold:.0%} of the spectrogram (w={box.w:.4f})",
                )
            )
        r0, r1, c0, c1 = box.pixel_bounds(width, height)
        if r1 <= r0 or c1 <= c0:
            continue
        profile = image[r0:r1, c0:c1].mean(axis=0)
        on = profile > on_level
        bursts = _runs(on)
        if len(bursts) == 1:
            findings.append(
                PolicyFinding("single_on_state", i, "box covers a single ON burst")
            )
        if not bursts:
            continue
        lead = bursts[0][0]
        trail = (c1 - c0) - bursts[-1][1]
        if lead > edge_tolerance or trail > edge_tolerance:
            findings.append(
                PolicyFinding(
                    "edge_off_state",
                    i,
                    f"box edges extend over OFF columns (leading {lead}, trailing {trail})",
                )
            )
    return findings


def format_box(box: YoloBox) -> str:
    return f"{box.class_id} {box.cx:.6f} {box.cy:.6f} {box.w:.6f} {box.h:.6f}"


def parse_label_text(text: str, path="<labels>", edge_tol: float = READ_EDGE_TOL) -> list[YoloBox]:
    boxes = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 5:
            raise LabelFormatError(path, line_no, f"expected 5 fields, got {len(parts)}")
        try:
            class_id = int(parts[0])
            cx, cy, w, h = (float(p) for p in parts[1:])
        except ValueError:
            raise LabelFormatError(path, line_no, f"non-numeric field in {line.strip()!r}") from None
        values = (cx, cy, w, h)
        if class_id < 0:
            raise LabelFormatError(path, line_no, f"negative class id {class_id}")
        if not all(math.isfinite(v) and 0.0 <= v <= 1.0 for v in values):
            raise LabelFormatError(path, line_no, f"coordinate out of [0, 1] in {line.strip()!r}")
        if w <= 0 or h <= 0:
            raise LabelFormatError(path, line_no, "zero-size box")
        box = YoloBox(class_id, cx, cy, w, h)
        if not box.in_bounds(edge_tol):
            raise LabelFormatError(path, line_no, "box extends outside the image")
        boxes.append(box)
    return boxes


def read_labels(path, class_map: dict[int, str] | None = None, image_path=None) -> LabelFile:
    path = Path(path)
    boxes = parse_label_text(path.read_text(encoding="utf-8"), path)
    return LabelFile(image_path=image_path, boxes=boxes, class_map=dict(class_map or {}))


def write_labels(labels: LabelFile, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(format_box(b) + "\n" for b in labels.boxes), encoding="utf-8")
    return path


def read_class_map(path) -> dict[int, str]:
    mapping = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        key, sep, name = line.partition("\t")
        if not sep or not key.strip().isdigit():
            raise LabelFormatError(path, line_no, "expected 'id<TAB>name'")
        mapping[int(key)] = name
    return mapping


def write_class_map(class_map: dict[int, str], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        "".join(f"{k}\t{class_map[k]}\n" for k in sorted(class_map)), encoding="utf-8"
    )
    return path

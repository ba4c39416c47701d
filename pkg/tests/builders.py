"""Constructed on-disk fixtures shared by several test modules."""

from __future__ import annotations

from pathlib import Path

from PIL import Image

CLASSES = {0: "droneA", 1: "droneB"}


def _image(path: Path, shade: int) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.new("RGB", (8, 4), (shade, shade, shade)).save(path)


def _label(path: Path, class_id: int) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(f"{class_id} 0.500000 0.500000 0.200000 0.100000\n")


def roboflow_tree(root: Path, valid_name: str = "valid") -> Path:
    """Split-first tree: 3 splits x 2 classes, one image per pair, names in data.yaml."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    (root / "data.yaml").write_text("names:\n  0: droneA\n  1: droneB\nnc: 2\n")
    for s, split in enumerate(("train", valid_name, "test")):
        for cid in CLASSES:
            stem = f"{split}_{cid}"
            _image(root / split / "images" / f"{stem}.jpg", 10 * s + cid)
            _label(root / split / "labels" / f"{stem}.txt", cid)
    return root


def mixed_tree(root: Path) -> Path:
    """2 classes x 3 splits in mixed layouts, plus one label without an image.

    droneA is class-first with images/ and labels/ folders; droneB is
    split-first with images and labels side by side.
    """
    root = Path(root)
    (root / "classes.txt").parent.mkdir(parents=True, exist_ok=True)
    (root / "classes.txt").write_text("droneA\ndroneB\n")
    for s, split in enumerate(("train", "val", "test")):
        _image(root / "droneA" / split / "images" / f"a_{split}.png", s)
        _label(root / "droneA" / split / "labels" / f"a_{split}.txt", 0)
        _image(root / split / "droneB" / f"b_{split}.png", 100 + s)
        _label(root / split / "droneB" / f"b_{split}.txt", 1)
    _label(root / "train" / "droneB" / "orphan.txt", 1)
    return root

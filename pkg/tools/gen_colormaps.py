"""Regenerate src/iqspec/_colormap_data.py from matplotlib's colormaps.

Dev-time only; the package itself never imports matplotlib.
"""
from pathlib import Path

import numpy as np
from matplotlib import colormaps

NAMES = ["viridis", "plasma", "inferno", "magma", "cividis", "gray", "hot"]
OUT = Path(__file__).resolve().parents[1] / "src" / "iqspec" / "_colormap_data.py"


def main():
    lines = [
        '"""256-entry RGB lookup tables (floats in [0, 1]).',
        "",
        "Generated by tools/gen_colormaps.py; do not edit by hand.",
        '"""',
        "",
        "TABLES = {",
    ]
    for name in NAMES:
        rgb = colormaps[name](np.linspace(0.0, 1.0, 256))[:, :3]
        lines.append(f"    {name!r}: (")
        for r, g, b in rgb:
            lines.append(f"        ({r:.8f}, {g:.8f}, {b:.8f}),")
        lines.append("    ),")
    lines.append("}")
    OUT.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

"""``iqspec`` command line.

Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error. Summary
counts go to stdout as ``key=value`` lines; progress and errors go to stderr.
"""

from __future__ import annotations

import argparse
import glob
import logging
import os
import re
import sys
from dataclasses import asdict
from pathlib import Path

from .annotate import DEFAULT_MIN_HEIGHT
from .augment import DEFAULT_RICIAN_K, AugmentPlan
from .cleaning import LAYOUTS, clean_third_party
from .dataset import (
    MANIFEST_NAME,
    Source,
    build_snr_sweep,
    extract_backgrounds,
    make_row,
    render_rows,
    segment_starts,
    safe_name,
)
from .iq_io import DEFAULT_SAMPLE_RATE_HZ, open_recording
from .manifest import merge_manifest
from .spectro import COLORMAPS, SPEC_NORMS, WINDOW_KINDS, RenderPolicy, StftParams
from .validate import validate_path

LOGGER = logging.getLogger("iqspec")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3
ENV_OUT_DIR = "IQSPEC_OUT_DIR"
ENV_JOBS = "IQSPEC_JOBS"
CONFIG_NAME = "run_config.txt"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_stft_flags(p):
    g = p.add_argument_group("spectrogram")
    g.add_argument("--fft", type=int, default=1024, help="FFT size N (default 1024)")
    g.add_argument("--overlap", type=int, default=128, help="overlap in samples (default 128)")
    g.add_argument("--frames", type=int, default=1500, help="STFT frames per image (default 1500)")
    g.add_argument("--window", choices=WINDOW_KINDS, default="hann")
    g.add_argument("--stride", type=int, default=None, help="segment stride in samples (default: segment length)")
    g.add_argument("--sample-rate", type=float, default=None,
                   help=f"sample rate in Hz (default: from the file name, else {DEFAULT_SAMPLE_RATE_HZ:g})")
    g.add_argument("--colormap", choices=COLORMAPS, default="viridis")
    g.add_argument("--norm", choices=SPEC_NORMS, default="global_minmax")
    g.add_argument("--epsilon", type=float, default=1e-12, help="dB floor epsilon (default 1e-12)")
    g.add_argument("--randomize-render", action="store_true",
                   help="draw colormap and normalization per sample from --seed")


def _add_run_flags(p):
    p.add_argument("--out", default=None, help=f"output directory (env {ENV_OUT_DIR})")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (env {ENV_JOBS}, default 1)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="iqspec", description="I/Q capture to spectrogram dataset toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrogram", help="render spectrograms from .dat captures")
    p.add_argument("inputs", nargs="+")
    _add_stft_flags(p)
    _add_run_flags(p)

    p = sub.add_parser("augment", help="augment captures at the I/Q level, then render")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--snr", type=float, default=None, help="target SNR in dB (AWGN added last)")
    p.add_argument("--shift-hz", type=float, default=0.0)
    p.add_argument("--mix-with", default=None, help="interferer capture (.dat)")
    p.add_argument("--alpha", type=float, default=None, help="interferer mixing ratio in [0, 1]")
    p.add_argument("--mix-shift-hz", type=float, default=0.0)
    p.add_argument("--fading", choices=("none", "rayleigh", "rician"), default="none")
    p.add_argument("--rician-k", type=float, default=DEFAULT_RICIAN_K)
    p.add_argument("--labels", default=None,
                   help="label file applied to every segment, or a directory of {stem}_sample_{i}.txt")
    p.add_argument("--min-height", type=float, default=DEFAULT_MIN_HEIGHT)
    p.add_argument("--export-noise", action="store_true")
    _add_stft_flags(p)
    _add_run_flags(p)

    p = sub.add_parser("build", help="SNR-stratified dataset plus no-drone backgrounds")
    p.add_argument("sources", nargs="*", help="globs, or a text file listing one capture per line")
    p.add_argument("--background", action="append", default=[], help="glob of no-drone captures")
    # let "-10,0" through as a value rather than an unknown option
    p._negative_number_matcher = re.compile(r"^-\d[\d.,eE+-]*$")
    p.add_argument("--snr-list", nargs="+", required=True, help="SNR values in dB (space or comma separated)")
    p.add_argument("--export-noise", action="store_true")
    p.add_argument("--labels", default=None, help="directory of {stem}_sample_{i}.txt labels")
    _add_stft_flags(p)
    _add_run_flags(p)

    p = sub.add_parser("clean", help="normalize a third-party YOLO release")
    p.add_argument("src_root")
    p.add_argument("--layout", choices=LAYOUTS, default="auto")
    p.add_argument("--out", default=None)

    p = sub.add_parser("validate", help="check captures, labels and manifests")
    p.add_argument("path")
    p.add_argument("--no-policy", action="store_true", help="skip annotation-policy findings")
    return parser


def _out_dir(args) -> Path:
    out = args.out or os.environ.get(ENV_OUT_DIR)
    if not out:
        raise UsageError(f"--out is required (or set {ENV_OUT_DIR})")
    return Path(out)


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get(ENV_JOBS)
    try:
        return int(env) if env else 1
    except ValueError:
        raise UsageError(f"{ENV_JOBS} must be an integer, got {env!r}") from None


def write_config(out: Path, config: dict) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    path = out / CONFIG_NAME
    path.write_text("".join(f"{k}={config[k]}\n" for k in sorted(config)), encoding="utf-8")
    return path


def _params(args) -> StftParams:
    try:
        return StftParams(fft_size=args.fft, overlap=args.overlap, window_kind=args.window,
                          num_frames_target=args.frames)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _policy(args) -> RenderPolicy:
    return RenderPolicy(colormap=args.colormap, spec_norm=args.norm, epsilon_db=args.epsilon,
                        seed=args.seed, randomize=args.randomize_render)


def _expand(patterns) -> list[Path]:
    out = []
    for pat in patterns:
        p = Path(pat)
        if p.is_file() and p.suffix.lower() in (".txt", ".lst"):
            base = p.parent
            for line in p.read_text(encoding="utf-8").splitlines():
                line = line.strip()
                if line and not line.startswith("#"):
                    q = Path(line)
                    out.append(q if q.is_absolute() else base / q)
            continue
        matches = sorted(glob.glob(pat))
        if matches:
            out.extend(Path(m) for m in matches)
        else:
            out.append(p)
    return out


def _float_list(values) -> list[float]:
    out = []
    for v in values:
        for part in str(v).split(","):
            if part.strip():
                try:
                    out.append(float(part))
                except ValueError:
                    raise UsageError(f"not an SNR value: {part!r}") from None
    return out


def _segment_label(labels_arg, stem: str, index: int, default_dir: Path) -> Path | None:
    if labels_arg:
        p = Path(labels_arg)
        if p.is_file():
            return p
        candidate = p / f"{stem}_sample_{index}.txt"
        return candidate if candidate.is_file() else None
    candidate = default_dir / f"{stem}_sample_{index}.txt"
    return candidate if candidate.is_file() else None


def _render_inputs(args, plan: AugmentPlan, export_noise: bool) -> int:
    out = _out_dir(args)
    params, policy = _params(args), _policy(args)
    config = {"command": args.command, "inputs": ",".join(args.inputs), "out": out, "jobs": _jobs(args)}
    config.update({f"stft.{k}": v for k, v in asdict(params).items()})
    config.update({f"render.{k}": v for k, v in asdict(policy).items()})
    config.update({f"augment.{k}": v for k, v in asdict(plan).items()})
    config["export_noise"] = export_noise
    config["labels"] = getattr(args, "labels", None) or ""
    config["min_height"] = getattr(args, "min_height", DEFAULT_MIN_HEIGHT)
    write_config(out, config)

    rows = []
    for path in _expand(args.inputs):
        rec = open_recording(path, args.sample_rate)
        source = Source(rec)
        cls = safe_name(source.label)
        starts = segment_starts(rec, params, args.stride)
        if not starts:
            raise ValueError(
                f"{path}: recording too short ({rec.sample_count} samples) for one "
                f"{params.num_frames_target}-frame spectrogram ({params.samples_per_segment} samples)"
            )
        for i, start in enumerate(starts):
            name = f"{rec.path.stem}_sample_{i}"
            label = _segment_label(getattr(args, "labels", None), rec.path.stem, i, rec.path.parent)
            rows.append(make_row(
                source, i, start, params, plan, policy, args.seed,
                image_rel=Path(cls) / f"{name}.png",
                label_rel=Path(cls) / f"{name}.txt" if label else None,
                noise_rel=Path("noise_only") / cls / f"{name}.png" if export_noise else None,
                source_label=label,
                min_height=getattr(args, "min_height", DEFAULT_MIN_HEIGHT),
            ))
    render_rows(rows, out, _jobs(args))
    merge_manifest(rows, out / MANIFEST_NAME)
    print(f"images={len(rows)}")
    print(f"labels={sum(1 for r in rows if r.output_label_path)}")
    print(f"manifest={out / MANIFEST_NAME}")
    return EXIT_OK


def cmd_spectrogram(args) -> int:
    return _render_inputs(args, AugmentPlan(), export_noise=False)


def cmd_augment(args) -> int:
    if args.alpha is not None and not args.mix_with:
        raise UsageError("--alpha requires --mix-with")
    if args.mix_with and args.alpha is None:
        raise UsageError("--mix-with requires --alpha")
    if args.export_noise and args.snr is None:
        raise UsageError("--export-noise requires --snr")
    try:
        plan = AugmentPlan(
            target_snr_db=args.snr,
            noise_model="awgn" if args.fading == "none" else args.fading,
            rician_k=args.rician_k,
            freq_shift_hz=args.shift_hz,
            mix_with=str(args.mix_with or ""),
            mix_ratio_alpha=args.alpha,
            mix_shift_hz=args.mix_shift_hz,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _render_inputs(args, plan, export_noise=args.export_noise)


def cmd_build(args) -> int:
    out = _out_dir(args)
    params, policy = _params(args), _policy(args)
    snrs = _float_list(args.snr_list)
    drone_paths = _expand(args.sources)
    bg_paths = _expand(args.background)
    if not drone_paths and not bg_paths:
        raise ValueError("no sources matched")
    config = {"command": "build", "sources": ",".join(args.sources), "background": ",".join(args.background),
              "snr_list": ",".join(repr(s) for s in snrs), "out": out, "seed": args.seed, "jobs": _jobs(args),
              "export_noise": args.export_noise, "labels": args.labels or ""}
    config.update({f"stft.{k}": v for k, v in asdict(params).items()})
    config.update({f"render.{k}": v for k, v in asdict(policy).items()})
    write_config(out, config)

    label_dir = Path(args.labels) if args.labels else None
    drone = []
    if drone_paths:
        sources = [Source(open_recording(p, args.sample_rate), label_dir=label_dir) for p in drone_paths]
        drone = build_snr_sweep(sources, snrs, params, policy, args.seed, out,
                                stride=args.stride, export_noise=args.export_noise, jobs=_jobs(args))
    background = []
    if bg_paths:
        sources = [Source(open_recording(p, args.sample_rate), class_label="background") for p in bg_paths]
        background = extract_backgrounds(sources, params, policy, out, seed=args.seed,
                                         stride=args.stride, jobs=_jobs(args))
    print(f"sources={len(drone_paths)}")
    print(f"background_sources={len(bg_paths)}")
    print(f"strata={len(snrs) if drone else 0}")
    print(f"drone_samples={len(drone)}")
    print(f"background_samples={len(background)}")
    print(f"manifest={out / MANIFEST_NAME}")
    return EXIT_OK


def cmd_clean(args) -> int:
    out = _out_dir(args)
    report = clean_third_party(args.src_root, args.layout, out)
    for src, reason in report.skipped:
        LOGGER.warning("skipped %s: %s", src, reason)
    for src in report.orphan_labels:
        LOGGER.warning("orphan label %s", src)
    print(f"total_images={report.total_images}")
    print(f"migrated={len(report.migrated)}")
    print(f"skipped={len(report.skipped)}")
    print(f"orphan_labels={len(report.orphan_labels)}")
    print(f"classes={len(report.class_map)}")
    return EXIT_OK


def cmd_validate(args) -> int:
    report = validate_path(args.path, policy_checks=not args.no_policy)
    for e in report.errors:
        print(f"error: {e}", file=sys.stderr)
    for f in report.findings:
        print(f"finding: {f}", file=sys.stderr)
    for k in sorted(report.checked):
        print(f"checked_{k}={report.checked[k]}")
    print(f"hard_errors={len(report.errors)}")
    print(f"findings={len(report.findings)}")
    return EXIT_OK if report.ok else EXIT_DATA


COMMANDS = {
    "spectrogram": cmd_spectrogram,
    "augment": cmd_augment,
    "build": cmd_build,
    "clean": cmd_clean,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

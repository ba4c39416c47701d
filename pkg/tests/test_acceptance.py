"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line.

Every test records its outcome in the ``acceptance criteria`` section of the
pytest terminal summary before failing, so the whole gate is visible in one
run. Runtime budgets cover only the code under test, not the oracles.
"""

from __future__ import annotations

import math
import shutil
import time
from contextlib import contextmanager

import numpy as np
import pytest

from iqspec.annotate import LabelFile, YoloBox, shift_labels
from iqspec.augment import add_awgn, freq_shift, mix
from iqspec.cleaning import clean_third_party
from iqspec.dataset import MANIFEST_NAME, build_snr_sweep, regenerate, tree_hash
from iqspec.iq_io import IqSegment, open_recording, power_normalize, write_iq
from iqspec.manifest import read_manifest
from iqspec.naming import IndoorName, NamingError, parse_name
from iqspec.spectro import RenderPolicy, StftParams, stft, to_image

from builders import CLASSES, mixed_tree
from oracles import (
    accumulate_power,
    boxes_row_mask,
    literal_stft_power,
    mismatch_near_edges,
    rasterize_rows,
    rolled_edges,
    symmetric_hann,
)

FS = 20e6


class _Criterion:
    def __init__(self):
        self.failures: list[str] = []
        self.elapsed = 0.0
        self.detail = ""

    def check(self, cond, message: str) -> None:
        if not cond:
            self.failures.append(message)

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.elapsed += time.perf_counter() - t0


@pytest.fixture
def criterion(acceptance_log):
    @contextmanager
    def run(tag: str, title: str, budget_s: float | None = None):
        c = _Criterion()
        try:
            yield c
        except Exception as exc:  # report, then fail below
            c.failures.append(f"{type(exc).__name__}: {exc}")
        if budget_s is not None and c.elapsed > budget_s:
            c.failures.append(f"runtime {c.elapsed:.2f}s over budget {budget_s:g}s")
        status = "FAIL" if c.failures else "PASS"
        timing = f"{c.elapsed:.2f}s" + (f" of {budget_s:g}s" if budget_s is not None else "")
        line = f"[{status}] {tag} {title} ({timing}){': ' + c.detail if c.detail else ''}"
        acceptance_log.append(line)
        print(line)
        if c.failures:
            pytest.fail(f"{tag}: " + "; ".join(c.failures[:5]), pytrace=False)

    return run


def _seg(x, fs=FS):
    return IqSegment(np.asarray(x, dtype=complex), fs)


def test_ac1_snr_exactness(criterion):
    with criterion("AC1", "AWGN SNR within 0.05 dB over -20..30 dB", budget_s=5.0) as c:
        rng = np.random.default_rng(1)
        n = 1_000_000
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        with c.timed():
            seg = power_normalize(_seg(x))
        ps = accumulate_power(seg.samples)
        worst = 0.0
        for i, target in enumerate((-20, -10, 0, 10, 20, 30)):
            with c.timed():
                _, noise = add_awgn(seg, target, seed=100 + i)
            measured = 10 * math.log10(ps / accumulate_power(noise.samples))
            worst = max(worst, abs(measured - target))
            c.check(abs(measured - target) <= 0.05, f"target {target} dB measured {measured:.4f} dB")
        c.detail = f"max error {worst:.4f} dB"


def test_ac2_stft_oracle(criterion):
    with criterion("AC2", "STFT equals literal DFT at N=8 hop 4", budget_s=1.0) as c:
        rng = np.random.default_rng(2)
        worst = 0.0
        for kind, w in (("rectangular", [1.0] * 8), ("hann", symmetric_hann(8))):
            params = StftParams(fft_size=8, overlap=4, window_kind=kind)
            for _ in range(100):
                length = int(rng.integers(8, 80))
                x = rng.standard_normal(length) + 1j * rng.standard_normal(length)
                with c.timed():
                    got = stft(_seg(x), params).power
                err = float(np.max(np.abs(got - literal_stft_power(x, 8, 4, w))))
                worst = max(worst, err)
                c.check(err <= 1e-9, f"{kind} length {length}: error {err:.3g}")
        c.detail = f"max abs error {worst:.2e} over 200 segments"


def _peak_row(x, params) -> set[int]:
    image = to_image(stft(_seg(x), params).power)
    return {int(r) for r in np.argmax(image, axis=0)}


def test_ac3_tone_shift_geometry(criterion):
    with criterion("AC3", "tone peak moves round(N*df/Fs) rows with wrap", budget_s=2.0) as c:
        n = 256
        t = np.arange(n * 32)
        cases = 0
        for kind in ("rectangular", "hann"):
            params = StftParams(fft_size=n, overlap=n // 4, window_kind=kind)
            for k0 in (-120, -100, -40, 0, 25, 90, 127):
                tone = np.exp(2j * np.pi * k0 * t / n)
                for df in (FS / 8, -FS / 8, FS / 4, -FS / 4):
                    with c.timed():
                        before = _peak_row(tone, params)
                        after = _peak_row(freq_shift(_seg(tone), df).samples, params)
                    # row 0 is +Fs/2: a positive shift moves the peak toward row 0, wrapping mod N
                    move = round(n * df / FS)
                    expected = {(r - move) % n for r in before}
                    c.check(before == {n - 1 - (n // 2 + k0)}, f"k0={k0}: tone row {before}")
                    c.check(after == expected, f"k0={k0} df={df:g}: peak rows {after}, expected {expected}")
                    cases += 1
        c.detail = f"{cases} tone/shift cases, wraps included"


def test_ac4_label_wrap_conservation(criterion):
    with criterion("AC4", "label split conserves height and matches roll oracle", budget_s=10.0) as c:
        rng = np.random.default_rng(4)
        rows = 1024
        splits = 0
        for i in range(10_000):
            h = float(rng.uniform(1e-3, 1.0))
            cy = float(rng.uniform(h / 2, 1 - h / 2))
            w = float(rng.uniform(0.01, 1.0))
            box = YoloBox(int(rng.integers(0, 10)), float(rng.uniform(w / 2, 1 - w / 2)), cy, w, h)
            d = float(rng.uniform(-0.5, 0.5))
            with c.timed():
                out = shift_labels(LabelFile(boxes=[box]), -d * FS, FS, min_height=0.0).boxes
            splits += len(out) == 2
            c.check(abs(sum(b.h for b in out) - h) <= 1e-9, f"pair {i}: heights {[b.h for b in out]} vs {h}")
            c.check(
                all(0.0 <= v <= 1.0 for b in out for v in (b.cx, b.cy, b.w, b.h, b.top, b.bottom)),
                f"pair {i}: coordinate outside [0, 1]",
            )
            roll = round(d * rows)
            expected = np.roll(rasterize_rows(box.top, box.bottom, rows), roll)
            edges = rolled_edges(box.top, box.bottom, rows, roll)
            c.check(mismatch_near_edges(expected, boxes_row_mask(out, rows), edges=edges),
                    f"pair {i}: mask mismatch d={d}")
        c.detail = f"10000 pairs, {splits} split"


def _burst_signal(rng, n, frames):
    """Multi-tone bursts on exact bins, frame aligned; returns samples and ground-truth boxes."""
    x = np.zeros(n * frames, dtype=complex)
    t = np.arange(n * frames)
    boxes = []
    lo = int(rng.integers(-n // 2, 0))
    bands = [(lo, lo + int(rng.integers(2, 10)))]
    if rng.random() < 0.5:
        start = bands[0][1] + int(rng.integers(2, 6))
        bands.append((start, start + int(rng.integers(2, 10))))
    for k_lo, k_hi in bands:
        m0 = int(rng.integers(0, frames // 2))
        m1 = int(rng.integers(m0 + 4, frames + 1))
        seg = slice(m0 * n, m1 * n)
        for k in range(k_lo, k_hi):
            x[seg] += np.exp(2j * np.pi * (k * t[seg] / n + rng.random()))
        # bins k_lo..k_hi-1 sit at shifted columns k+n/2, image rows n-1-(k+n/2)
        r_top, r_bottom = n - (k_hi + n // 2), n - (k_lo + n // 2)
        boxes.append(YoloBox.from_rows(0, (m0 + m1) / 2 / frames, (m1 - m0) / frames, r_top / n, r_bottom / n))
    return x, boxes


def _label_mask(boxes, n, frames):
    mask = np.zeros((n, frames), dtype=bool)
    for b in boxes:
        rows = rasterize_rows(b.top, b.bottom, n, circular=False)
        cols = rasterize_rows(b.left, b.right, frames, circular=False)
        mask |= rows[:, None] & cols[None, :]
    return mask


def test_ac5_label_signal_consistency(criterion):
    with criterion("AC5", "shifted labels match re-detected energy masks") as c:
        rng = np.random.default_rng(5)
        n, frames = 64, 48
        params = StftParams(fft_size=n, overlap=0, window_kind="rectangular")
        exact = 0
        for i in range(20):
            x, boxes = _burst_signal(rng, n, frames)
            bins = int(rng.integers(-n // 2 + 1, n // 2))
            df = bins * FS / n
            shifted = freq_shift(_seg(x), df)
            image = to_image(stft(shifted, params).power)
            detected = image > 1e-6 * image.max()
            labels = shift_labels(LabelFile(boxes=boxes), df, FS, min_height=0.0).boxes
            expected = _label_mask(labels, n, frames)
            for axis, name in ((1, "row"), (0, "column")):
                ok = mismatch_near_edges(expected.any(axis=axis), detected.any(axis=axis))
                c.check(ok, f"signal {i}: {name} profile differs beyond one {name} per edge (df={df:g})")
            for b in labels:
                r0, r1 = round(b.top * n), round(b.bottom * n)
                c0, c1 = round(b.left * frames), round(b.right * frames)
                inside = detected[r0:r1, c0:c1]
                c.check(inside.size and inside.mean() > 0.99, f"signal {i}: box not covered by energy")
            exact += bool(np.array_equal(expected, detected))
        c.detail = f"20 signals, {exact} with identical masks"


def test_ac6_mixing_power(criterion):
    with criterion("AC6", "mix output unit power and alpha=0 identity") as c:
        rng = np.random.default_rng(6)
        worst = 0.0
        for i in range(1000):
            n1, n2 = int(rng.integers(16, 600)), int(rng.integers(8, 600))
            x1 = _seg((rng.standard_normal(n1) + 1j * rng.standard_normal(n1)) * rng.uniform(0.01, 100))
            x2 = _seg((rng.standard_normal(n2) + 1j * rng.standard_normal(n2)) * rng.uniform(0.01, 100))
            alpha = float(rng.uniform(0, 1))
            s1, s2 = rng.uniform(-0.49, 0.49, 2) * FS
            out = mix(x1, x2, alpha, float(s1), float(s2))
            err = abs(accumulate_power(out.samples) - 1)
            worst = max(worst, err)
            c.check(err <= 1e-6, f"triple {i}: power error {err:.2e}")
            zero = mix(x1, x2, 0.0).samples
            # mix normalizes each input, then the sum; with alpha=0 that is two normalizations of x1
            ref = power_normalize(power_normalize(x1)).samples
            c.check(zero.tobytes() == ref.tobytes(), f"triple {i}: alpha=0 not bitwise identical")
        c.detail = f"1000 triples, max power error {worst:.2e}"


def test_ac7_determinism_and_regeneration(criterion, tmp_path):
    with criterion("AC7", "rebuild and row-wise regeneration are byte identical", budget_s=60.0) as c:
        params = StftParams(fft_size=64, overlap=16, num_frames_target=32)
        segs = 17
        rng = np.random.default_rng(7)
        n = params.samples_per_segment * segs
        src = write_iq(
            tmp_path / "src" / "DJI_Mavic2Pro_10_2442_not_engaging.dat",
            np.exp(2j * np.pi * 0.1 * np.arange(n)) + 0.3 * (rng.standard_normal(n) + 1j * rng.standard_normal(n)),
        )
        rec = open_recording(src)
        policy = RenderPolicy(randomize=True, seed=11)
        snrs = [-10.0, 0.0, 10.0]
        with c.timed():
            rows = build_snr_sweep([rec], snrs, params, policy, 42, tmp_path / "a", export_noise=True)
            build_snr_sweep([rec], snrs, params, policy, 42, tmp_path / "b", export_noise=True, jobs=2)
            regen = tmp_path / "regen"
            for row in read_manifest(tmp_path / "a" / MANIFEST_NAME):
                regenerate(row, regen)
            shutil.copyfile(tmp_path / "a" / MANIFEST_NAME, regen / MANIFEST_NAME)
            ha, hb, hr = tree_hash(tmp_path / "a"), tree_hash(tmp_path / "b"), tree_hash(regen)
        c.check(len(rows) >= 50, f"only {len(rows)} samples")
        c.check(len({r.target_snr_db for r in rows}) == 3, "expected 3 strata")
        c.check(ha == hb, "re-run tree hash differs")
        c.check(ha == hr, "regenerated tree hash differs")
        c.detail = f"{len(rows)} samples, tree {ha[:12]}"


def test_ac8_naming(criterion):
    with criterion("AC8", "indoor and outdoor names parse; 13 fields rejected") as c:
        indoor = {
            "DJI_Mavic2Pro_10_2442_not_engaging_sample_9.png": IndoorName("DJI", "Mavic2Pro", 10, 2442, "not_engaging"),
            "DJI_Mavic2Pro_10_2442_not_engaging.dat": IndoorName("DJI", "Mavic2Pro", 10, 2442, "not_engaging"),
            "Autel_EXOII_10_2457_vis_sample_282.png": IndoorName("Autel", "EXOII", 10, 2457, "vis"),
        }
        for name, expected in indoor.items():
            c.check(parse_name(name).indoor == expected, f"{name} parsed to {parse_name(name).indoor}")
        fields = ["Mavic3", "flying", "rural", "76", "0", "300", "250.5", "80", "2440", "2442", "20", "-3", "20", "east"]
        o = parse_name("_".join(fields) + ".dat").outdoor
        got = (o.device, o.status, o.env, o.sdr_gain_db, o.splitter, o.duration_s, o.distance_m, o.altitude_m,
               o.center_freq_mhz, o.drone_c_freq_mhz, o.bw_mhz, o.snr_db, o.sampling_rate_mhz, o.record_dir)
        c.check(got == ("Mavic3", "flying", "rural", 76, False, 300, 250.5, 80, 2440, 2442, 20, -3, 20, "east"),
                f"outdoor fields {got}")
        try:
            parse_name("_".join(fields[:13]) + ".dat")
            c.check(False, "13-field name accepted")
        except NamingError as exc:
            c.check("field count" in str(exc), f"13-field error message: {exc}")
        c.detail = f"{len(indoor)} indoor names, 14-field outdoor name"


def test_ac9_cleaning(criterion, tmp_path):
    with criterion("AC9", "mixed-layout tree migrates with balanced report") as c:
        src = mixed_tree(tmp_path / "src")
        report = clean_third_party(src, "auto", tmp_path / "out")
        c.check(report.total_images == 6, f"total {report.total_images}")
        c.check(len(report.migrated) + len(report.skipped) == report.total_images, "report not balanced")
        c.check(len(report.orphan_labels) == 1, f"orphans {report.orphan_labels}")
        c.check(report.class_map == CLASSES, f"class map {report.class_map}")
        c.check((tmp_path / "out" / "classes.tsv").read_text() == "0\tdroneA\n1\tdroneB\n", "classes.tsv differs")
        c.detail = f"migrated {len(report.migrated)}, skipped {len(report.skipped)}, orphans {len(report.orphan_labels)}"


def test_ac10_parseval(criterion):
    with criterion("AC10", "per-frame Parseval identity, rectangular window") as c:
        rng = np.random.default_rng(10)
        worst = 0.0
        for i in range(100):
            n = int(rng.choice([8, 16, 64, 100, 256, 1024]))
            x = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) * rng.uniform(1e-3, 1e3)
            power = stft(_seg(x), StftParams(fft_size=n, overlap=0, window_kind="rectangular")).power[0]
            time_energy = math.fsum(abs(v) ** 2 for v in x)
            rel = abs(math.fsum(power) - n * time_energy) / (n * time_energy)
            worst = max(worst, rel)
            c.check(rel <= 1e-6, f"frame {i} (N={n}): relative error {rel:.2e}")
        c.detail = f"100 frames, max relative error {worst:.2e}"

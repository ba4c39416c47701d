import numpy as np
import pytest
from PIL import Image

from iqspec.annotate import LabelFile, YoloBox, read_labels, write_labels
from iqspec.cli import main
from iqspec.iq_io import write_iq
from iqspec.manifest import read_manifest

from builders import roboflow_tree

SMALL = ["--fft", "64", "--overlap", "16", "--frames", "20"]
SEG = 19 * 48 + 64
STEM = "DJI_Mavic2Pro_10_2442_not_engaging"


def _capture(path, n, seed=0):
    rng = np.random.default_rng(seed)
    x = np.exp(2j * np.pi * 0.05 * np.arange(n)) + 0.1 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return write_iq(path, x)


@pytest.fixture
def cap(tmp_path):
    return _capture(tmp_path / "in" / f"{STEM}.dat", 2 * SEG)


def _config(out):
    lines = (out / "run_config.txt").read_text().splitlines()
    return dict(line.split("=", 1) for line in lines)


def test_spectrogram_defaults(tmp_path, capsys):
    path = _capture(tmp_path / f"{STEM}.dat", 1_344_128)
    out = tmp_path / "out"
    assert main(["spectrogram", str(path), "--out", str(out)]) == 0
    png = out / "DJI_Mavic2Pro" / f"{STEM}_sample_0.png"
    with Image.open(png) as im:
        assert im.size == (1500, 1024)
    assert "images=1" in capsys.readouterr().out
    cfg = _config(out)
    assert cfg["stft.fft_size"] == "1024" and cfg["stft.overlap"] == "128"
    assert cfg["stft.num_frames_target"] == "1500" and cfg["stft.window_kind"] == "hann"
    assert cfg["render.colormap"] == "viridis" and cfg["render.epsilon_db"] == "1e-12"
    assert cfg["augment.noise_model"] == "awgn" and float(cfg["augment.rician_k"]) == 10
    assert cfg["augment.target_snr_db"] == "None" and cfg["jobs"] == "1"


def test_explicit_frames(tmp_path, cap):
    out = tmp_path / "out"
    assert main(["spectrogram", str(cap), "--out", str(out), *SMALL, "--colormap", "gray"]) == 0
    pngs = sorted(out.rglob("*.png"))
    assert len(pngs) == 2
    with Image.open(pngs[0]) as im:
        assert im.size == (20, 64)
    assert len(read_manifest(out / "manifest.csv")) == 2


def test_missing_input_is_io_error(tmp_path, capsys):
    code = main(["spectrogram", str(tmp_path / "nope.dat"), "--out", str(tmp_path / "o")])
    assert code == 3
    assert "file not found" in capsys.readouterr().err


def test_usage_errors(tmp_path, cap, capsys):
    assert main(["spectrogram"]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["augment", str(cap), "--alpha", "0.5", "--out", str(tmp_path / "o")]) == 1
    assert "--alpha requires --mix-with" in capsys.readouterr().err
    assert main(["augment", str(cap), "--mix-with", str(cap), "--out", str(tmp_path / "o")]) == 1
    assert main(["augment", str(cap), "--export-noise", "--out", str(tmp_path / "o")]) == 1
    assert main(["spectrogram", str(cap), *SMALL[:2], "--overlap", "64", "--out", str(tmp_path / "o")]) == 1


def test_out_from_environment(tmp_path, cap, monkeypatch):
    monkeypatch.setenv("IQSPEC_OUT_DIR", str(tmp_path / "env_out"))
    monkeypatch.setenv("IQSPEC_JOBS", "2")
    assert main(["spectrogram", str(cap), *SMALL]) == 0
    assert len(list((tmp_path / "env_out").rglob("*.png"))) == 2
    assert _config(tmp_path / "env_out")["jobs"] == "2"
    monkeypatch.delenv("IQSPEC_OUT_DIR")
    assert main(["spectrogram", str(cap), *SMALL]) == 1


def test_too_short_is_data_error(tmp_path, capsys):
    short = _capture(tmp_path / "short.dat", 100)
    assert main(["spectrogram", str(short), "--out", str(tmp_path / "o")]) == 2
    assert "too short" in capsys.readouterr().err


def test_augment_deterministic(tmp_path, cap):
    args = ["augment", str(cap), *SMALL, "--snr", "0", "--fading", "rician", "--seed", "5", "--export-noise"]
    assert main([*args, "--out", str(tmp_path / "a")]) == 0
    assert main([*args, "--out", str(tmp_path / "b")]) == 0
    a = sorted(p.relative_to(tmp_path / "a") for p in (tmp_path / "a").rglob("*.png"))
    assert len(a) == 4
    for rel in a:
        assert (tmp_path / "a" / rel).read_bytes() == (tmp_path / "b" / rel).read_bytes()


def test_augment_shift_moves_labels(tmp_path, cap):
    write_labels(LabelFile(boxes=[YoloBox(0, 0.5, 0.5, 0.9, 0.1)]), cap.parent / f"{STEM}_sample_0.txt")
    out = tmp_path / "out"
    assert main(["augment", str(cap), *SMALL, "--shift-hz", "5e6", "--out", str(out)]) == 0
    box = read_labels(out / "DJI_Mavic2Pro" / f"{STEM}_sample_0.txt").boxes[0]
    assert box.cy == pytest.approx(0.25) and box.h == pytest.approx(0.1)
    assert not (out / "DJI_Mavic2Pro" / f"{STEM}_sample_1.txt").exists()

    write_labels(LabelFile(boxes=[YoloBox(0, 0.5, 0.2, 0.9, 0.2)]), tmp_path / "one.txt")
    out2 = tmp_path / "out2"
    assert main(["augment", str(cap), *SMALL, "--shift-hz", "5e6", "--labels", str(tmp_path / "one.txt"),
                 "--out", str(out2)]) == 0
    boxes = read_labels(out2 / "DJI_Mavic2Pro" / f"{STEM}_sample_1.txt").boxes
    assert sorted(round(b.h, 6) for b in boxes) == [0.05, 0.15]


def test_augment_mix(tmp_path, cap):
    other = _capture(tmp_path / "in" / "interferer.dat", SEG, seed=1)
    out = tmp_path / "out"
    assert main(["augment", str(cap), *SMALL, "--mix-with", str(other), "--alpha", "0.5",
                 "--mix-shift-hz", "1e6", "--out", str(out)]) == 0
    rows = read_manifest(out / "manifest.csv")
    assert {r.mix_ratio_alpha for r in rows} == {0.5}


def test_build_and_validate(tmp_path, cap, capsys):
    bg = _capture(tmp_path / "bg" / "no_drone_lab.dat", 3 * SEG, seed=2)
    out = tmp_path / "ds"
    code = main(["build", str(cap), "--background", str(bg), "--snr-list", "-10,0", "10", *SMALL,
                 "--out", str(out)])
    assert code == 0
    stdout = capsys.readouterr().out
    assert "strata=3" in stdout and "drone_samples=6" in stdout and "background_samples=3" in stdout
    assert sorted(p.name for p in out.iterdir() if p.name.startswith("snr_")) == ["snr_-10dB", "snr_0dB", "snr_10dB"]
    assert len(read_manifest(out / "manifest.csv")) == 9
    assert _config(out)["snr_list"] == "-10.0,0.0,10.0"
    assert main(["validate", str(out)]) == 0
    assert "hard_errors=0" in capsys.readouterr().out


def test_validate_truncated_capture(tmp_path, capsys):
    bad = tmp_path / "bad.dat"
    bad.write_bytes(b"\0" * 20)
    assert main(["validate", str(bad)]) == 2
    assert "not a multiple of 8" in capsys.readouterr().err
    assert main(["validate", str(tmp_path)]) == 2


def test_validate_label_cites_line(tmp_path, capsys):
    label = tmp_path / "labels" / "x.txt"
    label.parent.mkdir()
    label.write_text("0 0.5 0.5 0.1 0.1\n0 0.5 1.2 0.1 0.1\n")
    assert main(["validate", str(tmp_path)]) == 2
    assert f"{label}:2:" in capsys.readouterr().err


def test_validate_missing_output(tmp_path, cap, capsys):
    out = tmp_path / "out"
    main(["spectrogram", str(cap), *SMALL, "--out", str(out)])
    next(out.rglob("*.png")).unlink()
    assert main(["validate", str(out)]) == 2
    assert "output missing" in capsys.readouterr().err


def test_clean(tmp_path, capsys):
    src = roboflow_tree(tmp_path / "src")
    out = tmp_path / "clean"
    assert main(["clean", str(src), "--layout", "roboflow_like", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "migrated=6" in stdout and "skipped=0" in stdout
    assert (out / "classes.tsv").read_text() == "0\tdroneA\n1\tdroneB\n"

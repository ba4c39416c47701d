"""Drone-RF I/Q capture to spectrogram dataset toolkit."""

from .annotate import LabelFile, YoloBox, read_labels, shift_labels, validate_policy, write_labels
from .augment import AugmentPlan, add_awgn, apply_fading, apply_plan, estimate_snr, freq_shift, mix
from .iq_io import IqSegment, RawRecording, open_recording, power_normalize, slice_segments, z_normalize
from .manifest import SampleManifest, read_manifest, write_manifest
from .naming import NamingMeta, parse_naming
from .spectro import RenderPolicy, Spectrogram, StftParams, normalize_spectrogram, render_png, stft, to_db

__version__ = "0.1.0"

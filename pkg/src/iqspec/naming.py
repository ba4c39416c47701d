"""Recording-name conventions.

Indoor captures are files named
``{manufacturer}_{model}_{bandwidth}_{center_freq}_{operation_mode}.dat``.
Outdoor captures live in directories (sometimes files) named with 14 fields:
``{device}_{status}_{env}_{sdr_gain}_{splitter}_{duration}_{distance}_{altitude}_
{center_freq}_{drone_c_freq}_{bw}_{snr}_{sampling_rate}_{record_dir}``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path

OUTDOOR_FIELD_COUNT = 14
# names with this many numeric tokens are taken to be outdoor-style
_OUTDOOR_NUMERIC_HINT = 6
_SAMPLE_SUFFIX = re.compile(r"_sample_\d+$")
_TRUE = {"1", "true", "yes", "y", "t", "splitter", "on"}
_FALSE = {"0", "false", "no", "n", "f", "nosplitter", "off", "none"}


class NamingError(ValueError):
    pass


@dataclass(frozen=True)
class IndoorName:
    manufacturer: str
    model: str
    bandwidth_mhz: float
    center_freq_mhz: float
    operation_mode: str


@dataclass(frozen=True)
class OutdoorName:
    device: str
    status: str
    env: str
    sdr_gain_db: float
    splitter: bool
    duration_s: float
    distance_m: float
    altitude_m: float
    center_freq_mhz: float
    drone_c_freq_mhz: float
    bw_mhz: float
    snr_db: float
    sampling_rate_mhz: float
    record_dir: str


@dataclass(frozen=True)
class NamingMeta:
    """Exactly one of ``indoor`` / ``outdoor`` is set."""

    indoor: IndoorName | None = None
    outdoor: OutdoorName | None = None
    # "file" if the name carried a .dat suffix, else "directory"
    matched_on: str = "file"
    name: str = ""

    def __post_init__(self):
        if (self.indoor is None) == (self.outdoor is None):
            raise ValueError("exactly one naming form must be populated")

    @property
    def form(self) -> str:
        return "indoor" if self.indoor is not None else "outdoor"

    @property
    def center_freq_hz(self) -> float:
        meta = self.indoor or self.outdoor
        return meta.center_freq_mhz * 1e6

    @property
    def sample_rate_hz(self) -> float | None:
        return self.outdoor.sampling_rate_mhz * 1e6 if self.outdoor else None

    @property
    def class_label(self) -> str:
        if self.indoor:
            return f"{self.indoor.manufacturer}_{self.indoor.model}"
        return self.outdoor.device


def _is_number(token: str) -> bool:
    try:
        return math.isfinite(float(token))
    except ValueError:
        return False


def _number(token: str, field: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise NamingError(f"field {field!r}: {token!r} is not numeric") from None
    if not math.isfinite(value):
        raise NamingError(f"field {field!r}: {token!r} is not finite")
    return value


def _flag(token: str, field: str) -> bool:
    low = token.lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise NamingError(f"field {field!r}: {token!r} is not a recognized flag")


def _stem(name: str) -> tuple[str, str]:
    matched_on = "directory"
    for suffix in (".dat", ".png", ".txt"):
        if name.lower().endswith(suffix):
            name = name[: -len(suffix)]
            matched_on = "file"
            break
    return _SAMPLE_SUFFIX.sub("", name), matched_on


def _parse_outdoor(tokens: list[str]) -> OutdoorName:
    if len(tokens) != OUTDOOR_FIELD_COUNT:
        raise NamingError(
            f"field count mismatch: outdoor convention has {OUTDOOR_FIELD_COUNT} fields, got {len(tokens)}"
        )
    device, status, env, gain, splitter, dur, dist, alt, cf, dcf, bw, snr, fs, record_dir = tokens
    rate = _number(fs, "sampling_rate")
    if rate <= 0:
        raise NamingError(f"sampling rate must be positive, got {fs}")
    return OutdoorName(
        device=device,
        status=status,
        env=env,
        sdr_gain_db=_number(gain, "sdr_gain"),
        splitter=_flag(splitter, "splitter"),
        duration_s=_number(dur, "duration_recording"),
        distance_m=_number(dist, "distance"),
        altitude_m=_number(alt, "altitude"),
        center_freq_mhz=_number(cf, "center_freq"),
        drone_c_freq_mhz=_number(dcf, "drone_c_freq"),
        bw_mhz=_number(bw, "bw"),
        snr_db=_number(snr, "snr"),
        sampling_rate_mhz=rate,
        record_dir=record_dir,
    )


def _parse_indoor(tokens: list[str]) -> IndoorName:
    if len(tokens) < 5:
        raise NamingError(f"field count mismatch: indoor convention has 5 fields, got {len(tokens)}")
    # bandwidth and center frequency are the first numeric pair after the model;
    # tokens before it merge into the model, tokens after it into the mode
    for i in range(2, len(tokens) - 2):
        if _is_number(tokens[i]) and _is_number(tokens[i + 1]):
            mode = tokens[i + 2 :]
            if any(_is_number(t) for t in mode):
                break
            return IndoorName(
                manufacturer=tokens[0],
                model="_".join(tokens[1:i]),
                bandwidth_mhz=float(tokens[i]),
                center_freq_mhz=float(tokens[i + 1]),
                operation_mode="_".join(mode),
            )
    raise NamingError(f"unrecognized naming convention: {'_'.join(tokens)!r}")


def parse_name(name: str) -> NamingMeta:
    stem, matched_on = _stem(name)
    tokens = stem.split("_")
    if any(not t for t in tokens):
        raise NamingError(f"unrecognized naming convention: {name!r} (empty field)")
    numeric = sum(_is_number(t) for t in tokens)
    if len(tokens) == OUTDOOR_FIELD_COUNT or numeric >= _OUTDOOR_NUMERIC_HINT:
        return NamingMeta(outdoor=_parse_outdoor(tokens), matched_on=matched_on, name=name)
    if numeric < 2:
        raise NamingError(f"unrecognized naming convention: {name!r}")
    return NamingMeta(indoor=_parse_indoor(tokens), matched_on=matched_on, name=name)


def parse_naming(path) -> NamingMeta:
    """Parse a recording's file name, falling back to its directory name.

    A file inside an outdoor-convention directory (``.../{14 fields}/capture.dat``)
    is matched on the directory.
    """
    path = Path(path)
    try:
        return parse_name(path.name)
    except NamingError as first:
        if path.suffix and path.parent.name:
            try:
                return parse_name(path.parent.name)
            except NamingError:
                pass
        raise first

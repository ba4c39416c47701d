import pytest

from iqspec.naming import IndoorName, NamingError, parse_name, parse_naming

OUTDOOR = "DJIMavic3_flying_urban_76_1_120_150_60_2440_2442_20_12.5_20_north"


@pytest.mark.parametrize(
    "name,expected",
    [
        ("DJI_Mavic2Pro_10_2442_not_engaging.dat", IndoorName("DJI", "Mavic2Pro", 10, 2442, "not_engaging")),
        ("DJI_Mavic2Pro_10_2442_not_engaging_sample_9.png", IndoorName("DJI", "Mavic2Pro", 10, 2442, "not_engaging")),
        ("Autel_EXOII_10_2457_vis_sample_282.png", IndoorName("Autel", "EXOII", 10, 2457, "vis")),
        ("Autel_X_Star_20_5800_hover.dat", IndoorName("Autel", "X_Star", 20, 5800, "hover")),
    ],
)
def test_indoor_names(name, expected):
    meta = parse_name(name)
    assert meta.form == "indoor" and meta.outdoor is None
    assert meta.indoor == expected
    assert meta.matched_on == "file"


def test_indoor_derived_fields():
    meta = parse_name("DJI_Mavic2Pro_10_2442_not_engaging.dat")
    assert meta.center_freq_hz == 2442e6
    assert meta.class_label == "DJI_Mavic2Pro"
    assert meta.sample_rate_hz is None


def test_outdoor_fourteen_fields():
    meta = parse_name(OUTDOOR + ".dat")
    o = meta.outdoor
    assert meta.form == "outdoor" and meta.indoor is None
    assert (o.device, o.status, o.env) == ("DJIMavic3", "flying", "urban")
    assert o.sdr_gain_db == 76 and o.splitter is True
    assert (o.duration_s, o.distance_m, o.altitude_m) == (120, 150, 60)
    assert (o.center_freq_mhz, o.drone_c_freq_mhz, o.bw_mhz) == (2440, 2442, 20)
    assert o.snr_db == 12.5 and o.sampling_rate_mhz == 20
    assert o.record_dir == "north"
    assert meta.sample_rate_hz == 20e6
    assert parse_name(OUTDOOR).matched_on == "directory"


def test_thirteen_fields_rejected():
    short = OUTDOOR.rsplit("_", 1)[0]
    assert len(short.split("_")) == 13
    with pytest.raises(NamingError, match="field count"):
        parse_name(short + ".dat")


@pytest.mark.parametrize(
    "name,match",
    [
        ("garbage.dat", "unrecognized naming convention"),
        ("a__b_1_2_x.dat", "unrecognized"),
        (OUTDOOR.replace("_120_", "_long_") + ".dat", "not numeric"),
        (OUTDOOR.replace("_20_north", "_0_north") + ".dat", "sampling rate"),
        (OUTDOOR.replace("_1_120_", "_maybe_120_") + ".dat", "flag"),
    ],
)
def test_rejections(name, match):
    with pytest.raises(NamingError, match=match):
        parse_name(name)


def test_directory_fallback(tmp_path):
    path = tmp_path / OUTDOOR / "capture_000.dat"
    meta = parse_naming(path)
    assert meta.form == "outdoor"
    assert meta.outdoor.device == "DJIMavic3"
    with pytest.raises(NamingError):
        parse_naming(tmp_path / "plain" / "garbage.dat")

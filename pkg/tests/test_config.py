import pytest

from hllab import load_thresholds, parse_flat_config


def test_parse_flat_config():
    text = "# comment\nseed = 3\n\ndegrees=64,128  # trailing\n"
    assert parse_flat_config(text) == {"seed": "3", "degrees": "64,128"}


def test_parse_flat_config_rejects_garbage():
    with pytest.raises(ValueError, match=":2:"):
        parse_flat_config("a = 1\nnot a pair\n", "x.cfg")


def test_thresholds_are_frozen():
    th = load_thresholds()
    assert th["slope_pass"] == 0.05 and th["slope_fail"] == 0.1
    assert th["slope_pass"] < th["slope_fail"]

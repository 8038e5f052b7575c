"""Tests for layered settings."""

import pytest

from cover_energy.config import ENV_OVERRIDES, Settings, configure, get_settings, load_settings
from cover_energy.errors import ConfigError


@pytest.fixture(autouse=True)
def reset_settings():
    configure(None)
    yield
    configure(None)


def test_defaults():
    s = load_settings(environ={})
    assert s == Settings()
    assert s.max_bruteforce_n == 20
    assert s.jacobi_tolerance == 1e-12
    assert s.cluster_tolerance == 1e-7
    assert s.edge_probabilities == (0.15, 0.3, 0.5)


def test_yaml_then_environment(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("max_bruteforce_n: 12\nfloat_digits: 8\nedge_probabilities: [0.5]\n")

    s = load_settings(path, environ={"COVER_ENERGY_MAX_N": "16"})

    assert s.max_bruteforce_n == 16
    assert s.float_digits == 8
    assert s.edge_probabilities == (0.5,)


def test_blank_environment_values_are_ignored():
    s = load_settings(environ={"COVER_ENERGY_JACOBI_TOL": "  "})
    assert s.jacobi_tolerance == 1e-12


def test_every_override_names_a_field():
    assert set(ENV_OVERRIDES.values()) <= set(Settings.model_fields)


def test_empty_yaml_file_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_settings(path, environ={}) == Settings()


@pytest.mark.parametrize(
    "text",
    [
        "max_bruteforce_n: -1\n",
        "unknown_key: 3\n",
        "edge_probabilities: [1.5]\n",
        "edge_probabilities: []\n",
        "- just\n- a list\n",
        "key: [unclosed\n",
    ],
)
def test_invalid_yaml_settings(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_settings(path, environ={})


def test_invalid_environment_value():
    with pytest.raises(ConfigError):
        load_settings(environ={"COVER_ENERGY_CLUSTER_TOL": "tiny"})


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(tmp_path / "nope.yaml", environ={})


def test_settings_are_frozen():
    with pytest.raises(ValueError):
        Settings().max_bruteforce_n = 3  # type: ignore[misc]


def test_configure_installs_process_settings():
    custom = Settings(max_bruteforce_n=5)
    configure(custom)
    assert get_settings() is custom
    configure(None)
    assert get_settings() is not custom

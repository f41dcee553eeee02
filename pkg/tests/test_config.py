"""Tests for configuration loading."""

from pathlib import Path

import pytest

from libs.core.config import CalculatorConfig, load_config
from libs.core.errors import ConfigurationError


class TestConfig:
    """Test configuration defaults, files and overrides."""

    def test_defaults(self):
        """Test defaults without a file."""
        cfg = load_config()
        assert cfg.log_level == "WARNING"
        assert cfg.log_file is None
        assert cfg.structured_logs is True
        assert cfg.json_indent == 2

    def test_file(self, tmp_path):
        """Test values read from TOML."""
        path = tmp_path / "wallctl.toml"
        path.write_text('log_level = "DEBUG"\njson_indent = 4\nlog_file = "out.log"\n')
        cfg = load_config(path)
        assert cfg.log_level == "DEBUG"
        assert cfg.json_indent == 4
        assert cfg.log_file == Path("out.log")

    def test_overrides_win(self, tmp_path):
        """Test flags take priority over the file; None leaves it alone."""
        path = tmp_path / "wallctl.toml"
        path.write_text('log_level = "DEBUG"\nstructured_logs = false\n')
        cfg = load_config(path, {"log_level": "ERROR", "structured_logs": None})
        assert cfg.log_level == "ERROR"
        assert cfg.structured_logs is False

    def test_unknown_keys_ignored(self, tmp_path):
        """Test unknown keys do not fail loading."""
        path = tmp_path / "wallctl.toml"
        path.write_text('colour = "blue"\n')
        assert load_config(path) == CalculatorConfig()

    @pytest.mark.parametrize("content", [
        "json_indent = \"two\"\n",
        "structured_logs = 1\n",
        "json_indent = true\n",
        "log_file = 3\n",
        "log_level = \"LOUD\"\n",
        "json_indent = -1\n",
        "this is not toml\n",
    ])
    def test_invalid(self, tmp_path, content):
        """Test ill-typed or invalid values."""
        path = tmp_path / "wallctl.toml"
        path.write_text(content)
        with pytest.raises(ConfigurationError):
            load_config(path)

    def test_invalid_value_names_key(self, tmp_path):
        """Test a type error reports the offending key."""
        path = tmp_path / "wallctl.toml"
        path.write_text('log_level = "INFO"\njson_indent = "two"\n')
        with pytest.raises(ConfigurationError, match="json_indent"):
            load_config(path)

    def test_missing_file(self, tmp_path):
        """Test an explicit path that does not exist."""
        with pytest.raises(ConfigurationError):
            load_config(tmp_path / "absent.toml")

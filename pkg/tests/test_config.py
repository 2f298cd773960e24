"""Tests for settings loading and logging setup."""

import io
import json
import logging

import pytest
from pydantic import ValidationError

from src.config import Settings, get_settings, load_config, reset_settings
from src.utils.logging import setup_logging


@pytest.mark.unit
class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.order_cap == 5000
        assert settings.log_format == "text"
        assert settings.verification.series_cap == 64
        assert settings.verification.include_timing is False
        assert settings.server.name == "pilift"

    def test_cached(self):
        assert get_settings() is get_settings()
        first = get_settings()
        reset_settings()
        assert get_settings() is not first

    def test_yaml(self, tmp_path):
        path = tmp_path / "pilift.yaml"
        path.write_text(
            "engine:\n"
            "  order_cap: 2000\n"
            "  log_level: DEBUG\n"
            "verification:\n"
            "  seed: 7\n"
            "  parallelism: 3\n"
            "server:\n"
            "  name: pilift-test\n"
        )
        settings = load_config(str(path))
        assert settings.order_cap == 2000
        assert settings.log_level == "DEBUG"
        assert settings.verification.seed == 7
        assert settings.verification.parallelism == 3
        assert settings.verification.series_cap == 64
        assert settings.server.name == "pilift-test"

    def test_top_level_keys(self, tmp_path):
        path = tmp_path / "pilift.yaml"
        path.write_text("order_cap: 300\nlog_format: json\n")
        settings = load_config(str(path))
        assert settings.order_cap == 300
        assert settings.log_format == "json"

    def test_empty_yaml(self, tmp_path):
        path = tmp_path / "pilift.yaml"
        path.write_text("")
        assert load_config(str(path)).order_cap == 5000

    def test_environment_wins(self, tmp_path, monkeypatch):
        path = tmp_path / "pilift.yaml"
        path.write_text("engine:\n  order_cap: 2000\n")
        monkeypatch.setenv("PILIFT_ORDER_CAP", "123")
        assert load_config(str(path)).order_cap == 123

    def test_config_path_from_environment(self, tmp_path, monkeypatch):
        path = tmp_path / "other.yaml"
        path.write_text("engine:\n  order_cap: 42\n")
        monkeypatch.setenv("PILIFT_CONFIG_PATH", str(path))
        reset_settings()
        assert get_settings().order_cap == 42

    def test_invalid_log_format(self):
        with pytest.raises(ValidationError):
            Settings(log_format="xml")

    def test_invalid_order_cap(self):
        with pytest.raises(ValidationError):
            Settings(order_cap=0)


@pytest.mark.unit
class TestLogging:
    def test_json(self):
        stream = io.StringIO()
        setup_logging("INFO", "json", stream)
        logging.getLogger("src.test").info("hello")
        record = json.loads(stream.getvalue().strip().splitlines()[-1])
        assert record["message"] == "hello"
        assert record["name"] == "src.test"
        assert record["levelname"] == "INFO"

    def test_text(self):
        stream = io.StringIO()
        setup_logging("warning", "text", stream)
        logging.getLogger("src.test").info("hidden")
        logging.getLogger("src.test").warning("shown")
        output = stream.getvalue()
        assert "shown" in output
        assert "hidden" not in output
        assert logging.getLogger().level == logging.WARNING

    def test_replaces_handlers(self):
        setup_logging("INFO", "text", io.StringIO())
        setup_logging("INFO", "json", io.StringIO())
        assert len(logging.getLogger().handlers) == 1

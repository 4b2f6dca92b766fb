# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

import pytest

from qsc_toolkit import hooks
from qsc_toolkit.qsc_toolkit.settings import clear_settings_cache


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Every test starts from the shipped settings"""
    monkeypatch.delenv(hooks.settings_env_var, raising=False)
    clear_settings_cache()
    yield
    clear_settings_cache()

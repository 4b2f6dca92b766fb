# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Runtime settings

Defaults live on the Settings dataclass. A JSON object in the file named by
$QSC_TOOLKIT_SETTINGS overrides any of them.
"""

import dataclasses
import functools
import json
import os

from qsc_toolkit import hooks
from qsc_toolkit.exceptions import ValidationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
NON_NEGATIVE = ("irreducible_seed", "distance_budget", "sweep_distance_budget", "oracle_limit")


@dataclasses.dataclass(frozen=True)
class Settings:
    # start index of the lexicographic search for irreducible moduli
    irreducible_seed: int = 0
    # largest extension degree t of GF(q^t) a tower may use
    max_top_degree: int = 16
    # random pairs used to spot-check the base field embedding
    embed_spot_checks: int = 32
    # rank tests allowed before min_distance falls back to bounds
    distance_budget: int = 10_000_000
    # rank tests per code during sweeps; 0 reports BCH bounds only
    sweep_distance_budget: int = 0
    # codes with at most this many codewords are cross-checked by enumeration
    oracle_limit: int = 1_000_000
    bch_wraparound: bool = True
    workers: int = 1
    log_level: str = "WARNING"

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if f.type is int and (not isinstance(value, int) or isinstance(value, bool)):
                raise ValidationError(f"Setting {f.name} must be an integer, got {value!r}")
            if f.type is bool and not isinstance(value, bool):
                raise ValidationError(f"Setting {f.name} must be true or false, got {value!r}")

        for name in NON_NEGATIVE:
            if getattr(self, name) < 0:
                raise ValidationError(f"Setting {name} cannot be negative")
        if self.max_top_degree < 1:
            raise ValidationError("Setting max_top_degree must be at least 1")
        if self.embed_spot_checks < 0:
            raise ValidationError("Setting embed_spot_checks cannot be negative")
        if self.workers < 1:
            raise ValidationError("Setting workers must be at least 1")
        if self.log_level not in LOG_LEVELS:
            raise ValidationError(f"Setting log_level must be one of {', '.join(LOG_LEVELS)}")

    @classmethod
    def from_dict(cls, overrides):
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ValidationError(f"Unknown settings: {', '.join(unknown)}")
        return cls(**overrides)

    def as_dict(self):
        return dataclasses.asdict(self)


def load_overrides(path):
    try:
        with open(path, encoding="utf-8") as f:
            overrides = json.load(f)
    except (OSError, ValueError) as e:
        raise ValidationError(f"Cannot read settings file {path}: {e}")

    if not isinstance(overrides, dict):
        raise ValidationError(f"Settings file {path} must hold a JSON object")
    return overrides


@functools.lru_cache(maxsize=1)
def get_settings():
    """Settings with the override file named in the environment applied"""
    path = os.environ.get(hooks.settings_env_var)
    return Settings.from_dict(load_overrides(path)) if path else Settings()


def clear_settings_cache():
    get_settings.cache_clear()

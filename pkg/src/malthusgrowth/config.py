"""Run configurations, named presets and their JSON representation.

A config file is a JSON object; every key is optional::

    {
      "preset": "economy1",
      "calibration": {"c_bar_m": 1.35, "theta_x": 0.6},
      "shocks": [{"period": 10, "land_multiplier": 2.74, "population_multiplier": 1.0}],
      "horizon": 26,
      "growth_window": [10, 20],
      "base_year": 1500,
      "output": "economy1.csv"
    }

Keys present in the file override the preset; ``calibration`` entries
override individual fields of the preset calibration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .calibration import ECONOMY_1_LAND_MULTIPLIER, SHOCK_PERIOD, BASELINE, CalibrationInput
from .errors import ConfigError, DomainError
from .scenario import DEFAULT_BASE_YEAR, ShockEvent, ShockSchedule

DEFAULT_HORIZON = 26
DEFAULT_GROWTH_WINDOW = (10, 20)
PRESET_NAMES = ("table1", "economy1", "economy2")

_TOP_KEYS = {"preset", "calibration", "shocks", "horizon", "growth_window", "base_year", "output"}


@dataclass(frozen=True)
class RunConfig:
    calibration: CalibrationInput = BASELINE
    shocks: ShockSchedule = field(default_factory=ShockSchedule)
    horizon: int = DEFAULT_HORIZON
    growth_window: tuple = DEFAULT_GROWTH_WINDOW
    base_year: int = DEFAULT_BASE_YEAR
    output: str | None = None

    def __post_init__(self):
        if isinstance(self.horizon, bool) or not isinstance(self.horizon, int) or self.horizon < 1:
            raise ConfigError(f"horizon must be an integer >= 1, got {self.horizon!r}")
        t0, t1 = self.growth_window
        if not (isinstance(t0, int) and isinstance(t1, int) and 0 <= t0 < t1):
            raise ConfigError(f"growth window must satisfy 0 <= T0 < T1, got {self.growth_window!r}")
        object.__setattr__(self, "growth_window", (t0, t1))

    def to_dict(self):
        return {
            "calibration": self.calibration.to_dict(),
            "shocks": [
                {
                    "period": e.period,
                    "land_multiplier": e.land_multiplier,
                    "population_multiplier": e.population_multiplier,
                }
                for e in self.shocks.events
            ],
            "horizon": self.horizon,
            "growth_window": list(self.growth_window),
            "base_year": self.base_year,
            "output": self.output,
        }

    def dumps(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - _TOP_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        base = preset(data.get("preset", "table1"))
        changes = {}
        if "calibration" in data:
            cal = data["calibration"]
            if not isinstance(cal, dict):
                raise ConfigError("'calibration' must be an object")
            merged = base.calibration.to_dict()
            merged.update(cal)
            changes["calibration"] = CalibrationInput.from_dict(merged)
        if "shocks" in data:
            changes["shocks"] = _parse_shocks(data["shocks"])
        if "horizon" in data:
            changes["horizon"] = data["horizon"]
        if "growth_window" in data:
            window = data["growth_window"]
            if not (isinstance(window, list) and len(window) == 2):
                raise ConfigError("'growth_window' must be a two-element array")
            changes["growth_window"] = tuple(window)
        if "base_year" in data:
            if isinstance(data["base_year"], bool) or not isinstance(data["base_year"], int):
                raise ConfigError("'base_year' must be an integer")
            changes["base_year"] = data["base_year"]
        if "output" in data:
            if data["output"] is not None and not isinstance(data["output"], str):
                raise ConfigError("'output' must be a string or null")
            changes["output"] = data["output"]
        return replace(base, **changes)

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path):
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return cls.loads(text)


def _parse_shocks(items):
    if not isinstance(items, list):
        raise ConfigError("'shocks' must be an array")
    events = []
    for item in items:
        if not isinstance(item, dict) or "period" not in item:
            raise ConfigError(f"each shock needs at least a 'period': {item!r}")
        extra = set(item) - {"period", "land_multiplier", "population_multiplier"}
        if extra:
            raise ConfigError(f"unknown shock keys: {sorted(extra)}")
        period = item["period"]
        if isinstance(period, bool) or not isinstance(period, int) or period < 0:
            raise ConfigError(f"shock period must be a non-negative integer, got {period!r}")
        try:
            events.append(
                ShockEvent(
                    period,
                    float(item.get("land_multiplier", 1.0)),
                    float(item.get("population_multiplier", 1.0)),
                )
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad shock multiplier in {item!r}") from exc
    try:
        return ShockSchedule(tuple(events))
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc


def preset(name):
    """Named run configuration: ``table1``, ``economy1`` or ``economy2``."""
    if name == "table1" or name == "economy2":
        return RunConfig()
    if name == "economy1":
        return RunConfig(shocks=ShockSchedule.land_shock(SHOCK_PERIOD, ECONOMY_1_LAND_MULTIPLIER))
    raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")

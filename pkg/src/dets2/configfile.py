"""JSON configuration files.

Format::

    {"v": {"12": [1, 0], "13": ["1/2", -3], "14": [0, 1],
           "23": [1, 0], "24": [0, 1], "34": [1, 0]}}

Scalars are integers or "p/q" strings; decimal numbers are accepted only
when loading for the float backend.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .core import PAIRS, Configuration, Vec2
from .scalar import EXACT, FLOAT

PAIR_KEYS = {f"{i}{j}": (i, j) for i, j in PAIRS}
_RATIONAL = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?")


class ConfigError(ValueError):
    """Malformed configuration file."""


def parse_scalar(x, backend: str = EXACT):
    if isinstance(x, bool):
        raise ConfigError(f"boolean {x!r} is not a scalar")
    if isinstance(x, int):
        value = Fraction(x)
    elif isinstance(x, str):
        m = _RATIONAL.fullmatch(x)
        if not m:
            raise ConfigError(f"cannot parse scalar {x!r}; expected an integer or 'p/q'")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ConfigError(f"zero denominator in {x!r}")
        value = Fraction(int(m.group(1)), den)
    elif isinstance(x, float):
        if backend != FLOAT:
            raise ConfigError(
                f"decimal {x!r} needs the float backend; use 'p/q' for exact input"
            )
        return x
    else:
        raise ConfigError(f"unsupported scalar {x!r}")
    return float(value) if backend == FLOAT else value


def config_from_json(data, backend: str = EXACT) -> Configuration:
    if backend not in (EXACT, FLOAT):
        raise ValueError(f"unknown backend {backend!r}")
    if not isinstance(data, dict) or not isinstance(data.get("v"), dict):
        raise ConfigError('expected an object with key "v"')
    v = data["v"]
    missing = [k for k in PAIR_KEYS if k not in v]
    if missing:
        raise ConfigError(f"missing pair keys: {', '.join(missing)}")
    extra = sorted(set(v) - set(PAIR_KEYS))
    if extra:
        raise ConfigError(f"unknown pair keys: {', '.join(extra)}")
    pairs = {}
    for key, pair in PAIR_KEYS.items():
        entry = v[key]
        if not isinstance(entry, list) or len(entry) != 2:
            raise ConfigError(f"entry {key!r} must be a 2-element array")
        pairs[pair] = Vec2(*(parse_scalar(x, backend) for x in entry))
    return Configuration.from_pairs(pairs)


def format_scalar(x) -> str | int | float:
    if isinstance(x, float):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def config_to_json(c: Configuration) -> dict:
    return {
        "v": {
            f"{i}{j}": [format_scalar(v.alpha), format_scalar(v.beta)]
            for (i, j), v in c.items()
        }
    }


def load_config(path, backend: str = EXACT) -> Configuration:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    return config_from_json(data, backend)


def save_config(c: Configuration, path) -> None:
    Path(path).write_text(json.dumps(config_to_json(c), indent=2) + "\n", encoding="utf-8")

"""JSON asset files.

A document is either a list of entries or ``{"assets": [...]}``.  Entries::

    {"name": "x1", "type": "piecewise",
     "left": [[x, alpha], ...], "right": [[x, alpha], ...]}

    {"type": "quantile", "grid": 1001,
     "left":  {"family": "beta", "shape1": 0.5, "shape2": 2, "support": [100, 102]},
     "right": {"family": "beta", "shape1": 0.5, "shape2": 2, "support": [102, 110]}}

    {"type": "compact", "x": [2, 2.5, 4, 4.25, 10], "alpha": [0, 0.25, 1, 0.75, 0]}

Floats are written with ``repr`` precision, so a dump/load cycle reproduces
breakpoints bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .core import FuzzyNumber, Interval, from_compact, make_piecewise_linear
from .distributions import DEFAULT_GRID, QuantileSpec, fuzzy_from_quantiles
from .errors import AssetFileError, FuzzyNumberError


@dataclass(frozen=True)
class Asset:
    name: str
    fuzzy: FuzzyNumber


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise AssetFileError(f"expected a finite number, got {value!r}", where)
    return float(value)


def _points(value: Any, where: str) -> list[tuple[float, float]]:
    if not isinstance(value, list):
        raise AssetFileError("expected a list of [x, alpha] pairs", where)
    out = []
    for i, pair in enumerate(value):
        at = f"{where}[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise AssetFileError("expected an [x, alpha] pair", at)
        out.append((_number(pair[0], f"{at}[0]"), _number(pair[1], f"{at}[1]")))
    return out


def _quantile_spec(value: Any, where: str) -> QuantileSpec:
    if not isinstance(value, dict):
        raise AssetFileError("expected an object with family/shape1/shape2/support", where)
    family = value.get("family", "beta")
    if family not in ("beta", "uniform"):
        raise AssetFileError(f"unsupported family {family!r}", f"{where}.family")
    support = value.get("support")
    if not isinstance(support, list) or len(support) != 2:
        raise AssetFileError("expected [lo, hi]", f"{where}.support")
    lo = _number(support[0], f"{where}.support[0]")
    hi = _number(support[1], f"{where}.support[1]")
    if not lo < hi:
        raise AssetFileError("support must satisfy lo < hi", f"{where}.support")
    shape1 = _number(value.get("shape1", 1.0), f"{where}.shape1")
    shape2 = _number(value.get("shape2", 1.0), f"{where}.shape2")
    if shape1 <= 0 or shape2 <= 0:
        raise AssetFileError("shape parameters must be positive", where)
    return QuantileSpec(family, shape1, shape2, Interval(lo, hi))


def parse_entry(entry: Any, where: str) -> FuzzyNumber:
    if not isinstance(entry, dict):
        raise AssetFileError("expected an object", where)
    kind = entry.get("type", "piecewise")
    try:
        if kind == "piecewise":
            for side in ("left", "right"):
                if side not in entry:
                    raise AssetFileError("missing field", f"{where}.{side}")
            return make_piecewise_linear(
                _points(entry["left"], f"{where}.left"), _points(entry["right"], f"{where}.right")
            )
        if kind == "quantile":
            grid = entry.get("grid", DEFAULT_GRID)
            if isinstance(grid, bool) or not isinstance(grid, int) or grid < 2:
                raise AssetFileError("grid must be an integer >= 2", f"{where}.grid")
            return fuzzy_from_quantiles(
                _quantile_spec(entry.get("left"), f"{where}.left"),
                _quantile_spec(entry.get("right"), f"{where}.right"),
                grid,
            )
        if kind == "compact":
            xs, alphas = entry.get("x"), entry.get("alpha")
            if not isinstance(xs, list) or not isinstance(alphas, list):
                raise AssetFileError("compact entries need 'x' and 'alpha' lists", where)
            return from_compact(
                [_number(x, f"{where}.x[{i}]") for i, x in enumerate(xs)],
                [_number(a, f"{where}.alpha[{i}]") for i, a in enumerate(alphas)],
            )
    except FuzzyNumberError as exc:
        raise AssetFileError(str(exc), where) from exc
    raise AssetFileError(f"unknown type {kind!r}", f"{where}.type")


def parse_assets(text: str, source: str = "<string>") -> list[Asset]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AssetFileError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc
    prefix = source
    if isinstance(doc, dict):
        if "assets" not in doc:
            raise AssetFileError("missing 'assets' list", source)
        doc = doc["assets"]
        prefix = f"{source}:assets"
    if not isinstance(doc, list) or not doc:
        raise AssetFileError("expected a non-empty list of fuzzy numbers", prefix)
    out = []
    for i, entry in enumerate(doc):
        where = f"{prefix}[{i}]"
        fuzzy = parse_entry(entry, where)
        name = entry.get("name", f"asset{i + 1}")
        out.append(Asset(str(name), fuzzy))
    return out


def load_assets(path: str | Path) -> list[Asset]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise AssetFileError(exc.strerror or str(exc), str(p)) from exc
    return parse_assets(text, str(p))


def to_entry(f: FuzzyNumber, name: str | None = None) -> dict:
    entry: dict = {}
    if name is not None:
        entry["name"] = name
    entry["type"] = "piecewise"
    entry["left"] = [[float(x), float(a)] for a, x in zip(f.lower.alphas, f.lower.xs)]
    entry["right"] = [[float(x), float(a)] for a, x in zip(f.upper.alphas, f.upper.xs)]
    return entry


def dump_assets(assets: Sequence[Asset | FuzzyNumber], indent: int | None = 2) -> str:
    entries = []
    for i, a in enumerate(assets):
        if isinstance(a, Asset):
            entries.append(to_entry(a.fuzzy, a.name))
        else:
            entries.append(to_entry(a, f"asset{i + 1}"))
    return json.dumps({"assets": entries}, indent=indent)

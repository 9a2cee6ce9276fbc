"""Text and JSON formats for profiles, series and labelled trees."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import ParseError
from .polycore import parse_rational
from .series import BinaryForm, LinearSeries, RamificationProfile, VanishingSequence
from .special import LabelledTree

_TOKEN = re.compile(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*(?:[x×*]\s*(\d+))?\s*(,|$)")


def parse_profile_text(text: str) -> list[VanishingSequence]:
    """Parse ``"(0,3),(0,2)x4"`` into a flat list of sequences."""
    s = text.strip()
    if not s:
        raise ParseError("empty profile")
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse profile at {s[pos:]!r}")
        try:
            seq = VanishingSequence(int(x) for x in m.group(1).split(","))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        n = int(m.group(2) or 1)
        if n < 1:
            raise ParseError("repetition count must be positive")
        out.extend([seq] * n)
        pos = m.end()
        if m.group(3) == "," and pos >= len(s):
            raise ParseError("trailing comma in profile")
    return out


def profile_from_text(r: int, d: int, text: str) -> RamificationProfile:
    try:
        return RamificationProfile(r, d, tuple(parse_profile_text(text)))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _load_json(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    return data


def _int(data, key, where) -> int:
    v = data.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{where}: '{key}' must be an integer")
    return v


def _coef(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"coefficient {x!r} is not exact; use an integer or 'p/q' string")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    raise ParseError(f"bad coefficient {x!r}")


def _seq(x, where) -> VanishingSequence:
    if not isinstance(x, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in x):
        raise ParseError(f"{where}: sequence must be a list of integers")
    try:
        return VanishingSequence(x)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def series_from_json(data: dict, where: str = "series") -> LinearSeries:
    """Build a series; raises DegenerateBasis for dependent forms."""
    r, d = _int(data, "r", where), _int(data, "d", where)
    basis = data.get("basis")
    if not isinstance(basis, list):
        raise ParseError(f"{where}: 'basis' must be a list")
    forms = []
    for row in basis:
        if not isinstance(row, list) or len(row) != d + 1:
            raise ParseError(f"{where}: each basis row needs {d + 1} coefficients")
        forms.append(BinaryForm(d, tuple(_coef(x) for x in row)))
    if len(forms) != r + 1:
        raise ParseError(f"{where}: rank {r} needs {r + 1} basis forms, got {len(forms)}")
    return LinearSeries(r, d, tuple(forms))


def load_series(path) -> LinearSeries:
    return series_from_json(_load_json(path), str(path))


def profile_from_json(data: dict, where: str = "profile") -> RamificationProfile:
    r, d = _int(data, "r", where), _int(data, "d", where)
    pts = data.get("points")
    if not isinstance(pts, list):
        raise ParseError(f"{where}: 'points' must be a list")
    try:
        return RamificationProfile(r, d, tuple(_seq(p, where) for p in pts))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def load_profile(path) -> RamificationProfile:
    return profile_from_json(_load_json(path), str(path))


def tree_from_json(data: dict, where: str = "tree") -> LabelledTree:
    r, d = _int(data, "r", where), _int(data, "d", where)
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError(f"{where}: 'vertices' must be a list of names")
    edges = []
    for e in data.get("edges", []):
        if not isinstance(e, dict) or not {"u", "v", "label_u"} <= set(e):
            raise ParseError(f"{where}: each edge needs u, v, label_u")
        lv = _seq(e["label_v"], where) if e.get("label_v") is not None else None
        edges.append((e["u"], e["v"], _seq(e["label_u"], where), lv))
    dangling = []
    for h in data.get("dangling", []):
        if not isinstance(h, dict) or not {"vertex", "label"} <= set(h):
            raise ParseError(f"{where}: each dangling half-edge needs vertex and label")
        dangling.append((h["vertex"], _seq(h["label"], where)))
    return LabelledTree.build(r, d, vertices, edges, dangling)


def load_tree(path) -> LabelledTree:
    return tree_from_json(_load_json(path), str(path))


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)

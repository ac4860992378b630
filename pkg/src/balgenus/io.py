"""JSON complex format: {"dimension": d, "colors": {label: int}, "facets": [[label, ...]]}."""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

from .complex import ColoredComplex, build_complex
from .errors import ColorOutOfRange, InvalidInput, NonPure


def complex_from_dict(doc: dict) -> ColoredComplex:
    if not isinstance(doc, dict):
        raise InvalidInput("complex document must be a JSON object")
    try:
        facets = doc["facets"]
        colors = doc["colors"]
    except KeyError as exc:
        raise InvalidInput(f"missing key {exc.args[0]!r}") from None
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InvalidInput("'facets' must be a list of label lists")
    if not isinstance(colors, dict):
        raise InvalidInput("'colors' must map labels to integers")
    cx = build_complex(facets, colors)
    if cx.palette != tuple(range(cx.dim + 1)):
        raise ColorOutOfRange("colors must lie in 0..d")
    declared = doc.get("dimension")
    if declared is not None and declared != cx.dim:
        raise NonPure(f"declared dimension {declared} but facets have dimension {cx.dim}")
    return cx


def complex_to_dict(cx: ColoredComplex) -> dict:
    """Canonical document: colors keyed by label in vertex order, facets as label lists."""
    return {
        "dimension": cx.dim,
        "colors": {lab: c for lab, c in zip(cx.labels, cx.colors)},
        "facets": [cx.names(f) for f in cx.facets],
    }


def dumps(cx: ColoredComplex) -> str:
    return json.dumps(complex_to_dict(cx), indent=None, separators=(", ", ": "))


def loads(text: str) -> ColoredComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid JSON: {exc}") from None
    return complex_from_dict(doc)


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def load(path: str) -> ColoredComplex:
    """Read a complex from ``path``; ``-`` means standard input."""
    return loads(read_text(path))


def digest(cx: ColoredComplex) -> str:
    """sha256 of the complex with labels sorted, so vertex order does not matter."""
    doc = {
        "dimension": cx.dim,
        "colors": dict(sorted(zip(cx.labels, cx.colors))),
        "facets": sorted(sorted(cx.names(f)) for f in cx.facets),
    }
    text = json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()

"""JSON serialization of configurations.

Floats go through :func:`json.dumps`, which writes the shortest decimal
that round-trips, so centers survive a save/load cycle bit-exactly.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .construction import Configuration
from .errors import DocumentError

SCHEMA_VERSION = "1"
METHOD = "sequential-covering"


def to_document(config: Configuration, report: dict | None = None) -> dict[str, Any]:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": config.n,
        "r": config.r,
        "method": METHOD,
        "centers": [list(c) for c in config.centers],
    }
    if report is not None:
        doc["report"] = report
    return doc


def dumps(config: Configuration, report: dict | None = None) -> str:
    return json.dumps(to_document(config, report), indent=2) + "\n"


def loads(text: str) -> Configuration:
    """Parse a document back into a :class:`Configuration`.

    Raises:
        DocumentError: on invalid JSON or any schema violation.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("schema_version", "n", "r", "centers"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc['schema_version']!r}")
    n, r, centers = doc["n"], doc["r"], doc["centers"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"n must be a positive integer, got {n!r}")
    if not isinstance(r, (int, float)) or isinstance(r, bool) or not math.isfinite(r):
        raise DocumentError(f"r must be a finite number, got {r!r}")
    if not isinstance(centers, list) or len(centers) != n:
        raise DocumentError(f"centers must be a list of length n={n}")
    points = []
    for c in centers:
        if (
            not isinstance(c, list)
            or len(c) != 3
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in c)
        ):
            raise DocumentError(f"bad center {c!r}")
        points.append(c)
    try:
        return Configuration(n, float(r), tuple(points))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc

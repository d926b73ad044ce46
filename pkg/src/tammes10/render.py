"""Orthographic SVG drawing of cap boundaries and centers."""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike

from .construction import Configuration

CANVAS = 1000
SPHERE_RADIUS = 480
SEGMENTS = 256


def view_basis(view: ArrayLike) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed screen basis ``(right, up, toward_viewer)`` for a view direction.

    Only the direction of ``view`` matters. ``right`` is the x axis with its
    view component removed (the y axis when looking along x).
    """
    w = np.asarray(view, dtype=float)
    norm = np.linalg.norm(w)
    if w.shape != (3,) or not norm > 0:
        raise ValueError(f"view must be a nonzero 3-vector, got {view!r}")
    w = w / norm
    seed = np.array([1.0, 0.0, 0.0]) if abs(w[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = seed - (seed @ w) * w
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(w, e1)
    return e1, e2, w


def project(points: ArrayLike, view: ArrayLike = (0, 0, 10)) -> np.ndarray:
    """Canvas coordinates ``(x, y)`` of unit vectors; screen y grows downward."""
    e1, e2, _ = view_basis(view)
    p = np.asarray(points, dtype=float).reshape(-1, 3)
    c = CANVAS / 2
    return np.column_stack([c + SPHERE_RADIUS * (p @ e1), c - SPHERE_RADIUS * (p @ e2)])


def cap_boundary(center: ArrayLike, radius: float, segments: int = SEGMENTS) -> np.ndarray:
    c = np.asarray(center, dtype=float)
    axis = np.eye(3)[int(np.argmin(np.abs(c)))]
    u = np.cross(c, axis)
    u /= np.linalg.norm(u)
    v = np.cross(c, u)
    t = np.linspace(0.0, 2.0 * math.pi, segments + 1)
    return (
        math.cos(radius) * c
        + math.sin(radius) * (np.outer(np.cos(t), u) + np.outer(np.sin(t), v))
    )


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _polyline(xy: np.ndarray, hidden: bool) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in xy)
    style = 'stroke="#888" stroke-dasharray="6,5"' if hidden else 'stroke="#000"'
    return f'<polyline points="{pts}" fill="none" {style} stroke-width="1.5"/>'


def render_svg(
    config: Configuration, view: ArrayLike = (0, 0, 10), half_caps: bool = False
) -> str:
    """SVG 1.1 document showing every cap boundary and labelled center.

    Boundary segments on the far hemisphere are dashed. With ``half_caps``
    the circles have radius ``r/2``, which shows the packing instead of
    the covering.
    """
    _, _, w = view_basis(view)
    radius = config.r / 2 if half_caps else config.r
    c = CANVAS / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{SPHERE_RADIUS}" '
        f'fill="none" stroke="#000" stroke-width="2"/>',
    ]
    for center in config.centers:
        ring = cap_boundary(center, radius)
        xy = project(ring, view)
        mid = ring[:-1] + ring[1:]
        hidden = (mid @ w) < 0
        start = 0
        for k in range(1, SEGMENTS + 1):
            if k == SEGMENTS or hidden[k] != hidden[start]:
                out.append(_polyline(xy[start:k + 1], bool(hidden[start])))
                start = k
    for i, (center, (x, y)) in enumerate(zip(config.centers, project(config.centers, view)), 1):
        fill = "#c00" if np.dot(center, w) >= 0 else "none"
        out.append(
            f'<circle id="M{i}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" '
            f'fill="{fill}" stroke="#c00" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{_fmt(x + 8)}" y="{_fmt(y - 8)}" font-family="sans-serif" '
            f'font-size="18">M{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

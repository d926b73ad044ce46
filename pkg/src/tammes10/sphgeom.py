"""Spherical geometry primitives on the unit sphere.

Points are :class:`UnitVector` triples. Every function also accepts any
length-3 array-like, which is validated and re-normalized on entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from .errors import DegenerateAxisError, InvalidInputError

UNIT_NORM_TOL = 1e-9
TANGENCY_TOL = 1e-12
PARALLEL_TOL = 1e-12


class UnitVector(NamedTuple):
    """Cartesian point on the unit sphere."""

    x: float
    y: float
    z: float

    @classmethod
    def of(cls, v: ArrayLike) -> "UnitVector":
        """Validate ``v`` (norm within 1e-9 of 1) and return it re-normalized."""
        return cls(*(float(c) for c in as_unit(v)))

    def array(self) -> np.ndarray:
        return np.array(self, dtype=float)


@dataclass(frozen=True)
class SphericalCap:
    """Cap of all points within ``angular_radius`` of ``center``."""

    center: UnitVector
    angular_radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", UnitVector.of(self.center))
        if not 0.0 < self.angular_radius < math.pi:
            raise InvalidInputError(
                f"cap radius must lie in (0, pi), got {self.angular_radius!r}"
            )

    def contains(self, p: ArrayLike, tol: float = 0.0) -> bool:
        """True if ``p`` is in the open cap (shrunk by ``tol``)."""
        return angular_distance(self.center, p) < self.angular_radius - tol


def as_unit(v: ArrayLike) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise InvalidInputError(f"expected a finite 3-vector, got {v!r}")
    norm = math.sqrt(float(a @ a))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidInputError(f"vector {v!r} has norm {norm!r}, expected 1")
    return a / norm


def _clamped_acos(c: float) -> float:
    return math.acos(min(1.0, max(-1.0, c)))


def angular_distance(u: ArrayLike, v: ArrayLike) -> float:
    """Geodesic distance between two unit vectors, in radians."""
    return _clamped_acos(float(as_unit(u) @ as_unit(v)))


def points_at_distances(
    c1: ArrayLike, d1: float, c2: ArrayLike, d2: float
) -> list[UnitVector]:
    """Points at angular distance ``d1`` from ``c1`` and ``d2`` from ``c2``.

    Writes the solution as ``a*c1 + b*c2 + g*n`` with ``n`` the unit normal
    along ``c1 x c2``; the two plane equations fix ``a`` and ``b`` and the
    unit-norm condition fixes ``g**2``.

    Returns:
        Two points (the one with ``g > 0`` first), a single point at
        tangency, or an empty list when the circles do not meet.

    Raises:
        DegenerateAxisError: if ``c1`` and ``c2`` are parallel or antipodal
            and the two circles coincide. Disjoint circles around parallel
            or antipodal centers give an empty list.
    """
    p1, p2 = as_unit(c1), as_unit(c2)
    cross = np.cross(p1, p2)
    sin_sep = math.sqrt(float(cross @ cross))
    if sin_sep <= PARALLEL_TOL:
        same_circle = d2 if p1 @ p2 > 0 else math.pi - d2
        if abs(d1 - same_circle) <= TANGENCY_TOL:
            raise DegenerateAxisError("circle centers are parallel or antipodal")
        return []
    n = cross / sin_sep
    k = float(p1 @ p2)
    h1, h2 = math.cos(d1), math.cos(d2)
    det = 1.0 - k * k
    a = (h1 - k * h2) / det
    b = (h2 - k * h1) / det
    q = a * p1 + b * p2
    disc = 1.0 - float(q @ q)
    if disc < -TANGENCY_TOL:
        return []
    if disc <= TANGENCY_TOL:
        return [UnitVector.of(q / np.linalg.norm(q))]
    g = math.sqrt(disc)
    return [UnitVector(*(q + g * n)), UnitVector(*(q - g * n))]


def circle_intersection(a: SphericalCap, b: SphericalCap) -> list[UnitVector]:
    """Crossing points of two cap boundaries; see :func:`points_at_distances`."""
    return points_at_distances(a.center, a.angular_radius, b.center, b.angular_radius)


def equilateral_inner_angle(r: float) -> float:
    """Interior angle of the spherical equilateral triangle with side ``r``."""
    c = math.cos(r)
    return math.acos(c / (c + 1.0))


def square_inner_angle(r: float) -> float:
    """Interior angle of the spherical square with side ``r``."""
    c = math.cos(r)
    return math.acos((c - 1.0) / (c + 1.0))


def spherical_cos_side(a: float, b: float, angle: float) -> float:
    """Side opposite ``angle`` in a triangle with sides ``a``, ``b`` enclosing it."""
    return _clamped_acos(
        math.cos(a) * math.cos(b) + math.sin(a) * math.sin(b) * math.cos(angle)
    )

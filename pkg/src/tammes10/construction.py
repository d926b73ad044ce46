"""Sequential covering construction of ten cap centers M1..M10.

Each center is placed on the boundary of earlier caps of common radius
``r``. M1..M7 have explicit closed forms. M8 and M9 come from generic
circle intersections. M10 is placed without reference to M7 by using the
isosceles triangle M6 M7 M10, whose apex angle at M7 is an equilateral
triangle angle plus a square angle.

Where two crossing points are available, the candidate farthest from
every center placed so far is kept. For M5 and M6 this reproduces the
choices "outside C3" and "outside C1". For M8..M10 it keeps the point on
the boundary of the still-uncovered region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousBranchError, ConstructionInfeasibleError, InvalidRadiusError
from .sphgeom import UnitVector, angular_distance, as_unit, points_at_distances

N = 10
R_MIN, R_MAX = 0.9, 1.3
BRANCH_TIE_TOL = 1e-12


@dataclass(frozen=True)
class Configuration:
    n: int
    r: float
    centers: tuple[UnitVector, ...]

    def __post_init__(self):
        # validated but stored verbatim so serialized centers round-trip exactly
        for c in self.centers:
            as_unit(c)
        object.__setattr__(
            self, "centers", tuple(UnitVector(*(float(v) for v in c)) for c in self.centers)
        )
        if self.n != len(self.centers):
            raise ValueError(f"n={self.n} but {len(self.centers)} centers given")

    def array(self) -> np.ndarray:
        return np.array(self.centers, dtype=float).reshape(-1, 3)


@dataclass(frozen=True)
class PlacementStep:
    """One branch decision: ``index`` is placed on the circles around ``parents``."""

    index: int
    parents: tuple[int, int]
    distances: tuple[float, float]
    candidates: tuple[UnitVector, ...]
    branch: int
    score: float

    @property
    def point(self) -> UnitVector:
        return self.candidates[self.branch]


@dataclass(frozen=True)
class PlacementTrace:
    steps: tuple[PlacementStep, ...]

    def step(self, index: int) -> PlacementStep:
        for s in self.steps:
            if s.index == index:
                return s
        raise KeyError(index)


def check_radius(r: float) -> float:
    r = float(r)
    if not R_MIN < r <= R_MAX:
        raise InvalidRadiusError(
            f"r={r!r} outside the construction window ({R_MIN}, {R_MAX}]"
        )
    return r


def select_branch(
    candidates: list[UnitVector], placed: list[UnitVector]
) -> tuple[int, float]:
    """Index of the candidate maximizing its minimum distance to ``placed``."""
    if not candidates:
        raise ConstructionInfeasibleError("parent circles do not intersect")
    scores = [min(angular_distance(c, p) for p in placed) for c in candidates]
    if len(scores) == 2 and abs(scores[0] - scores[1]) <= BRANCH_TIE_TOL:
        raise AmbiguousBranchError(f"candidate scores tie: {scores}")
    best = int(np.argmax(scores))
    return best, scores[best]


def _place(
    index: int,
    centers: dict[int, UnitVector],
    parents: tuple[int, int],
    distances: tuple[float, float],
) -> PlacementStep:
    i, j = parents
    candidates = points_at_distances(centers[i], distances[0], centers[j], distances[1])
    branch, score = select_branch(candidates, [centers[k] for k in sorted(centers)])
    return PlacementStep(index, parents, distances, tuple(candidates), branch, score)


# Closed forms for M1..M7.

def place_m1_m2_m3(r: float) -> tuple[UnitVector, UnitVector, UnitVector]:
    r = check_radius(r)
    c, s = math.cos(r), math.sin(r)
    m1 = UnitVector(0.0, 0.0, -1.0)
    m2 = UnitVector(-c * (c - 1.0) / s, (c - 1.0) * math.sqrt(2.0 * c + 1.0) / s, -c)
    m3 = UnitVector(s, 0.0, -c)
    return m1, m2, m3


def place_m4(r: float) -> UnitVector:
    r = check_radius(r)
    c, s = math.cos(r), math.sin(r)
    return UnitVector(-c * (c - 1.0) / s, -(c - 1.0) * math.sqrt(2.0 * c + 1.0) / s, -c)


def place_m5(r: float) -> UnitVector:
    r = check_radius(r)
    c, s = math.cos(r), math.sin(r)
    q = (c + 1.0) ** 2
    return UnitVector(
        s * (c * c - 2.0 * c - 1.0) / q,
        2.0 * c * s * math.sqrt(2.0 * c + 1.0) / q,
        -c,
    )


def _m67_denominator(c: float) -> float:
    return 9.0 * c**3 - c * c - c + 1.0


def place_m6(r: float) -> UnitVector:
    r = check_radius(r)
    c, s = math.cos(r), math.sin(r)
    den = _m67_denominator(c)
    return UnitVector(
        2.0 * c * s * (c - 1.0) * (2.0 * c + 1.0) / den,
        2.0 * c * s * (c - 1.0) * math.sqrt(2.0 * c + 1.0) / den,
        (-4.0 * c**4 + c**3 - 5.0 * c * c - c + 1.0) / den,
    )


def place_m7(r: float) -> UnitVector:
    r = check_radius(r)
    c, s = math.cos(r), math.sin(r)
    den = _m67_denominator(c)
    return UnitVector(
        s * (c**3 - 5.0 * c * c - c + 1.0) / den,
        -4.0 * s * c * c * math.sqrt(2.0 * c + 1.0) / den,
        -c * (c**3 + 11.0 * c * c - c - 3.0) / den,
    )


def cos_s610(r: float) -> float:
    """Cosine of the M6-M10 distance once M7 M10 M9 M8 closes into a square."""
    r = check_radius(r)
    c = math.cos(r)
    return (
        3.0 * c**3 + 2.0 * c * c - c - 2.0 * (1.0 - c * c) * math.sqrt(c + 2.0 * c * c)
    ) / (1.0 + c) ** 2


def _closed_form_centers(r: float) -> dict[int, UnitVector]:
    m1, m2, m3 = place_m1_m2_m3(r)
    return {1: m1, 2: m2, 3: m3, 4: place_m4(r), 5: place_m5(r), 6: place_m6(r), 7: place_m7(r)}


# Generic-intersection steps. Parents follow the placement rules: M4 on
# dC1 & dC3 (other than M2), M5 on dC4 & dC1, M6 on dC5 & dC2, M7 on
# dC6 & dC2, M8 on dC7 & dC6, M9 on dC8 & dC4, M10 on dC9 & dC3.
PARENTS = {4: (1, 3), 5: (4, 1), 6: (5, 2), 7: (6, 2), 8: (7, 6), 9: (8, 4), 10: (9, 3)}


def generic_step(r: float, index: int, centers: dict[int, UnitVector]) -> PlacementStep:
    """Place center ``index`` from its two parent circles and ``centers`` so far."""
    r = check_radius(r)
    placed = {k: v for k, v in centers.items() if k < index}
    return _place(index, placed, PARENTS[index], (r, r))


def place_m8(r: float, m7: UnitVector) -> UnitVector:
    centers = _closed_form_centers(r)
    centers[7] = UnitVector.of(m7)
    return generic_step(r, 8, centers).point


def place_m9(r: float, m8: UnitVector, m7: UnitVector | None = None) -> UnitVector:
    centers = _closed_form_centers(r)
    if m7 is not None:
        centers[7] = UnitVector.of(m7)
    centers[8] = UnitVector.of(m8)
    return generic_step(r, 9, centers).point


def _m10_independent_step(r: float, centers: dict[int, UnitVector]) -> PlacementStep:
    d610 = math.acos(max(-1.0, min(1.0, cos_s610(r))))
    placed = {k: v for k, v in centers.items() if k < 10}
    return _place(10, placed, (3, 6), (r, d610))


def place_m10_independent(r: float) -> UnitVector:
    """M10 from its distance ``r`` to M3 and its distance to M6; M7 is not used."""
    centers = _closed_form_centers(r)
    centers[8] = generic_step(r, 8, centers).point
    centers[9] = generic_step(r, 9, centers).point
    return _m10_independent_step(r, centers).point


def place_m10_sequential(r: float) -> UnitVector:
    """M10 on the crossing of dC9 and dC3, continuing the chain M7 -> M8 -> M9."""
    centers = _closed_form_centers(r)
    for i in (8, 9, 10):
        centers[i] = generic_step(r, i, centers).point
    return centers[10]


def build_configuration(r: float) -> tuple[Configuration, PlacementTrace]:
    r = check_radius(r)
    centers = _closed_form_centers(r)
    steps = []
    for i in (4, 5, 6, 7):
        steps.append(generic_step(r, i, centers))
    for i in (8, 9):
        step = generic_step(r, i, centers)
        centers[i] = step.point
        steps.append(step)
    step = _m10_independent_step(r, centers)
    centers[10] = step.point
    steps.append(step)
    config = Configuration(N, r, tuple(centers[i] for i in range(1, N + 1)))
    return config, PlacementTrace(tuple(steps))

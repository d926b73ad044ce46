"""Packing and covering checks for a configuration of cap centers.

Caps are open, so a point exactly ``r`` from its nearest center is not
covered. ``covering_ok`` therefore asks for a covering radius strictly
below ``r`` by the covering tolerance. Packing allows the tolerance the
other way, since touching half-caps are fine.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass

import numpy as np

from .construction import Configuration
from .sphgeom import UnitVector

PACKING_TOL = 1e-9
COVERING_TOL = 1e-9
DEGENERATE_TOL = 1e-12
DANZER_INTERVAL = (1.154479, 1.154480)
_CHUNK = 200_000


@dataclass(frozen=True)
class VerificationReport:
    r: float
    min_pair_distance: float
    contact_pairs: list[tuple[int, int]]
    covering_radius: float
    worst_vertex: UnitVector
    sample_count: int
    sample_uncovered_count: int
    sample_max_gap: float
    danzer_interval_ok: bool
    packing_ok: bool
    covering_ok: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["contact_pairs"] = [list(p) for p in self.contact_pairs]
        d["worst_vertex"] = list(self.worst_vertex)
        return d


def _pairwise(points: np.ndarray) -> np.ndarray:
    return np.arccos(np.clip(points @ points.T, -1.0, 1.0))


def _points(config: Configuration | np.ndarray) -> np.ndarray:
    if isinstance(config, Configuration):
        return config.array()
    return np.asarray(config, dtype=float).reshape(-1, 3)


def min_pairwise_distance(
    config: Configuration | np.ndarray, tol: float = 1e-9
) -> tuple[float, list[tuple[int, int]]]:
    """Smallest center-to-center distance and every pair within ``tol`` of it.

    Pairs use zero-based center indices.
    """
    pts = _points(config)
    if len(pts) < 2:
        raise ValueError("need at least two centers")
    d = _pairwise(pts)
    iu = np.triu_indices(len(pts), 1)
    dmin = float(d[iu].min())
    pairs = [(int(i), int(j)) for i, j in zip(*iu) if d[i, j] - dmin <= tol]
    return dmin, pairs


def contact_graph(config: Configuration | np.ndarray, tol: float) -> list[tuple[int, int]]:
    """Pairs at the minimal distance (within ``tol``), sorted lexicographically."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    return sorted(min_pairwise_distance(config, tol)[1])


def _nearest_distance(points: np.ndarray, query: np.ndarray) -> np.ndarray:
    return np.arccos(np.clip((query @ points.T).max(axis=1), -1.0, 1.0))


def covering_candidates(points: np.ndarray) -> tuple[np.ndarray, list[str]]:
    """Candidate farthest points: circumcenters of triples, pair far-midpoints, antipodes.

    The distance to the nearest center only has local maxima at points
    equidistant from one, two or three centers, so the covering radius is
    attained at one of these.
    """
    notes = []
    cands = [-p for p in points]
    for a, b in itertools.combinations(range(len(points)), 2):
        m = points[a] + points[b]
        norm = np.linalg.norm(m)
        if norm > DEGENERATE_TOL:
            cands.append(-m / norm)
        else:
            # antipodal pair: the whole bisecting great circle is at pi/2
            axis = np.eye(3)[int(np.argmin(np.abs(points[a])))]
            perp = np.cross(points[a], axis)
            cands.append(perp / np.linalg.norm(perp))
    for a, b, c in itertools.combinations(range(len(points)), 3):
        n = np.cross(points[b] - points[a], points[c] - points[a])
        norm = np.linalg.norm(n)
        if norm <= DEGENERATE_TOL:
            notes.append(f"skipped degenerate triple ({a}, {b}, {c})")
            continue
        n = n / norm
        cands.extend([n, -n])
    return np.array(cands), notes


def covering_radius(config: Configuration | np.ndarray) -> tuple[float, UnitVector]:
    """Largest distance from any sphere point to its nearest center.

    Returns the radius and the point that attains it.
    """
    pts = _points(config)
    cands, _ = covering_candidates(pts)
    gaps = _nearest_distance(pts, cands)
    k = int(np.argmax(gaps))
    return float(gaps[k]), UnitVector(*(float(c) for c in cands[k]))


def fibonacci_lattice(k: int) -> np.ndarray:
    """``k`` nearly uniform points on the sphere (golden-angle spiral)."""
    i = np.arange(k, dtype=float)
    z = 1.0 - (2.0 * i + 1.0) / k
    rho = np.sqrt(1.0 - z * z)
    phi = i * (math.pi * (3.0 - math.sqrt(5.0)))
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def sample_coverage(
    config: Configuration | np.ndarray, k: int, r: float | None = None
) -> tuple[int, float]:
    """Count lattice points farther than ``r`` from every center.

    ``r`` defaults to the configuration's own radius. Returns
    ``(uncovered_count, max_gap)``.
    """
    if k < 1000:
        raise ValueError("need at least 1000 sample points")
    pts = _points(config)
    if r is None:
        r = config.r
    uncovered, max_gap = 0, 0.0
    lattice = fibonacci_lattice(k)
    for start in range(0, k, _CHUNK):
        gaps = _nearest_distance(pts, lattice[start:start + _CHUNK])
        uncovered += int(np.count_nonzero(gaps > r))
        max_gap = max(max_gap, float(gaps.max()))
    return uncovered, max_gap


def danzer_interval_check(r: float) -> bool:
    lo, hi = DANZER_INTERVAL
    return lo <= r <= hi


def verify_configuration(
    config: Configuration, samples: int = 1_000_000, contact_tol: float = 1e-9
) -> VerificationReport:
    dmin, _ = min_pairwise_distance(config)
    contacts = contact_graph(config, contact_tol)
    cover, worst = covering_radius(config)
    uncovered, max_gap = sample_coverage(config, samples)
    return VerificationReport(
        r=config.r,
        min_pair_distance=dmin,
        contact_pairs=contacts,
        covering_radius=cover,
        worst_vertex=worst,
        sample_count=samples,
        sample_uncovered_count=uncovered,
        sample_max_gap=max_gap,
        danzer_interval_ok=danzer_interval_check(config.r),
        packing_ok=dmin >= config.r - PACKING_TOL,
        covering_ok=cover < config.r - COVERING_TOL and uncovered == 0,
    )

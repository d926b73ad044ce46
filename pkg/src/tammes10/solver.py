"""Root finding for the ten-cap radius, plus its closed form and cubic check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .construction import place_m7, place_m10_independent, place_m10_sequential
from .errors import BracketError

DEFAULT_BRACKET = (1.0, 1.3)
DEFAULT_TOL = 1e-13
MIN_TOL = 1e-14


@dataclass(frozen=True)
class RootResult:
    r: float
    residual_at_root: float
    iterations: int
    bracket: tuple[float, float]


def residual(r: float) -> float:
    """Closure residual ``<M7, M10> - cos r`` with M10 on dC9 & dC3.

    Vanishes when M7 M8 M9 M10 closes into a square of side ``r``. It has
    a single sign change on the default bracket.
    """
    m7 = np.array(place_m7(r))
    m10 = np.array(place_m10_sequential(r))
    return float(m7 @ m10) - math.cos(r)


def independent_residual(r: float) -> float:
    """Closure residual ``<M7, M10> - cos r`` with M10 built without M7.

    Shares the root of :func:`residual` but also vanishes near r = 1.19,
    where the configuration is no longer a packing, so it is only
    bracketed locally.
    """
    m7 = np.array(place_m7(r))
    m10 = np.array(place_m10_independent(r))
    return float(m7 @ m10) - math.cos(r)


def find_root(
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    tol: float = DEFAULT_TOL,
    f: Callable[[float], float] = residual,
    maxiter: int = 200,
) -> RootResult:
    """Bisection with secant acceleration on a sign-changing bracket.

    A secant step is tried whenever the previous step at least halved the
    bracket; otherwise the next step bisects. Trial points are kept
    ``tol/2`` inside the bracket, so one-sided secant convergence still
    collapses the bracket.

    Raises:
        BracketError: if ``f`` has the same sign at both ends.
        ValueError: if ``tol`` is below 1e-14 or the bracket is empty.
    """
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise ValueError(f"empty bracket {bracket!r}")
    if not tol >= MIN_TOL:
        raise ValueError(f"tol must be >= {MIN_TOL}, got {tol!r}")
    flo, fhi = f(lo), f(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise ValueError(f"non-finite residual at bracket ends: {flo!r}, {fhi!r}")
    if flo == 0.0:
        return RootResult(lo, flo, 0, (lo, lo))
    if fhi == 0.0:
        return RootResult(hi, fhi, 0, (hi, hi))
    if (flo > 0) == (fhi > 0):
        raise BracketError(
            f"residual does not change sign on [{lo}, {hi}]: f(lo)={flo!r}, f(hi)={fhi!r}"
        )

    use_secant = True
    iterations = 0
    while hi - lo > tol and iterations < maxiter:
        iterations += 1
        width = hi - lo
        if use_secant:
            x = hi - fhi * (hi - lo) / (fhi - flo)
        else:
            x = 0.5 * (lo + hi)
        x = min(max(x, lo + 0.5 * tol), hi - 0.5 * tol)
        fx = f(x)
        if not math.isfinite(fx):
            raise ValueError(f"non-finite residual at r={x!r}")
        if fx == 0.0:
            lo = hi = x
            break
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
        use_secant = hi - lo <= 0.5 * width

    root = 0.5 * (lo + hi)
    return RootResult(root, f(root), iterations, (lo, hi))


def closed_form_r10() -> float:
    """Exact optimal radius for ten caps, evaluated in double precision."""
    inner = math.atan(math.sqrt(3.0) * math.sqrt(229.0) / 9.0) / 3.0
    return math.atan(math.sqrt(4.0 / math.sqrt(3.0) * math.cos(inner) + 3.0))


def cubic_reduction_check(r: float) -> float:
    """``t**3 - 4t - 1`` at ``t = tan(r)**2 - 3``; zero at the optimal radius.

    With ``t = (4/sqrt 3) cos(phi)`` the triple-angle identity gives
    ``t**3 - 4t = (16 / (3 sqrt 3)) cos(3 phi)``, and the closed form has
    ``cos(3 phi) = 9 / (16 sqrt 3)``, so the right side equals 1.
    """
    if not 0.0 < r < math.pi / 2:
        raise ValueError(f"r must lie in (0, pi/2), got {r!r}")
    t = math.tan(r) ** 2 - 3.0
    return t**3 - 4.0 * t - 1.0


def largest_cubic_root() -> float:
    """Largest real root of ``t**3 - 4t - 1`` via companion-matrix eigenvalues."""
    roots = np.roots([1.0, 0.0, -4.0, -1.0])
    return float(max(z.real for z in roots if abs(z.imag) < 1e-12))


def radius_from_cubic_root(t: float) -> float:
    return math.atan(math.sqrt(t + 3.0))

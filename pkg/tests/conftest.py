import math

import numpy as np
import pytest

from tammes10.construction import build_configuration
from tammes10.solver import closed_form_r10

# Figure 1 caption coordinates of M1..M10 (five significant decimals).
CAPTION = np.array(
    [
        (0.0, 0.0, -1.0),
        (0.26335, -0.87585, -0.40439),
        (0.91458, 0.0, -0.40439),
        (0.26335, 0.87585, -0.40439),
        (-0.76292, 0.50440, -0.40439),
        (-0.77575, -0.57681, -0.25593),
        (-0.13883, -0.78326, 0.60599),
        (-0.79006, 0.092588, 0.60599),
        (0.084546, 0.74290, 0.66405),
        (0.735778, -0.13295, 0.66405),
    ]
)

R10_DIGITS = "1.1544798334192707378319618404230"


def random_unit(rng, n=None):
    v = rng.normal(size=(3,) if n is None else (n, 3))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def tetrahedron():
    v = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
    return v / math.sqrt(3.0)


@pytest.fixture(scope="session")
def r10():
    return closed_form_r10()


@pytest.fixture(scope="session")
def built(r10):
    return build_configuration(r10)


@pytest.fixture(scope="session")
def config(built):
    return built[0]

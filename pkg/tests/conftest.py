"""Shared fixtures and generators for the test suite."""

import math
from pathlib import Path

import numpy as np
import pytest

from indivisibles import Point2, Polygon

REPO_ROOT = Path(__file__).resolve().parent.parent
SCRIPTS_DIR = REPO_ROOT / "scripts"
DATA_DIR = Path(__file__).resolve().parent / "data"


def star_polygon(rng: np.random.Generator, n_min=4, n_max=12, center=(0.0, 0.0), r_min=0.5, r_max=2.0) -> Polygon:
    """Random star-shaped (hence simple) polygon around ``center``."""
    n = int(rng.integers(n_min, n_max + 1))
    # jittered but strictly increasing angles keep vertices distinct
    jitter = rng.uniform(0.1, 0.9, n)
    angles = 2.0 * math.pi * (np.arange(n) + jitter) / n
    radii = rng.uniform(r_min, r_max, n)
    cx, cy = center
    pts = [(cx + r * math.cos(a), cy + r * math.sin(a)) for r, a in zip(radii, angles)]
    return Polygon(pts)


def rigid_motion(rng: np.random.Generator):
    """Random rotation + translation as a Point2 -> Point2 callable."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    tx, ty = rng.uniform(-5.0, 5.0, 2)
    c, s = math.cos(theta), math.sin(theta)

    def apply(p: Point2) -> Point2:
        return Point2(c * p.x - s * p.y + tx, s * p.x + c * p.y + ty)

    return apply


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)

"""Independent brute-force estimators: Monte Carlo membership sampling,
midpoint Riemann sums and boundary quadrature.

Sampling is counter-based: the i-th sample is a pure function of (seed, i),
so estimates are reproducible bit for bit regardless of chunking, and the
fixed-order reductions keep every result deterministic.  Membership
predicates and integrands must be numpy-vectorized (arrays in, array out).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import ordered_sum, uniform01
from .errors import DegenerateCurve, EmptyBox
from .geometry import CircleArc, Curve, Polyline

_CHUNK = 1 << 20


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo estimate with its standard error.

    stderr is the sample standard deviation over sqrt(samples); for a single
    sample it is reported as 0 (no spread information).
    """

    mean: float
    stderr: float
    samples: int
    seed: int

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.stderr < 0.0:
            raise ValueError("standard error cannot be negative")


def _check_box(bounds):
    for lo, hi in bounds:
        if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
            raise EmptyBox(f"box side [{lo!r}, {hi!r}] has nonpositive extent")


def _indicator_estimate(hits: int, samples: int, box_measure: float, seed: int) -> Estimate:
    mean = box_measure * hits / samples
    if samples > 1:
        # sample variance of box_measure * {0,1} values, from the counts alone
        var = box_measure**2 * hits * (samples - hits) / (samples * (samples - 1))
        stderr = math.sqrt(var) / math.sqrt(samples)
    else:
        stderr = 0.0
    return Estimate(mean=mean, stderr=stderr, samples=samples, seed=seed)


def _mc_membership(membership, bounds, samples: int, seed: int) -> Estimate:
    _check_box(bounds)
    if samples < 1:
        raise ValueError("need at least one sample")
    dims = len(bounds)
    lows = np.array([lo for lo, _ in bounds])
    spans = np.array([hi - lo for lo, hi in bounds])
    box_measure = float(np.prod(spans))
    hits = 0
    done = 0
    while done < samples:
        m = min(_CHUNK, samples - done)
        u = uniform01(seed, done * dims, m * dims).reshape(m, dims)
        coords = lows + spans * u
        inside = membership(*(coords[:, d] for d in range(dims)))
        hits += int(np.count_nonzero(inside))
        done += m
    return _indicator_estimate(hits, samples, box_measure, seed)


def mc_area(membership, bbox, samples: int, seed: int = 42) -> Estimate:
    """Monte Carlo area of {membership} inside bbox ((xlo, xhi), (ylo, yhi)).

    ``membership(xs, ys)`` receives coordinate arrays and returns a boolean
    array; the box must contain the region.
    """
    return _mc_membership(membership, tuple(bbox), samples, seed)


def mc_volume(membership, bbox3, samples: int, seed: int = 42) -> Estimate:
    """Monte Carlo volume; 3D analogue of mc_area with membership(xs, ys, zs)."""
    return _mc_membership(membership, tuple(bbox3), samples, seed)


def riemann_volume(section, n: int) -> float:
    """Midpoint Riemann sum of a cross-section profile over its domain.

    Deliberately distinct from the certified staircase bounds: this is the
    plain midpoint rule, used as an independent cross-check.
    """
    if n < 1:
        raise ValueError("need at least one cell")
    a, b = section.domain
    h = (b - a) / n
    total = 0.0
    done = 0
    while done < n:
        m = min(_CHUNK, n - done)
        mids = a + (np.arange(done, done + m, dtype=np.float64) + 0.5) * h
        vals = np.asarray(section.fn(mids), dtype=np.float64)
        total = ordered_sum(vals, total)
        done += m
    return total * h


def boundary_integral(curve: Curve, integrand, n: int) -> float:
    """Composite midpoint rule for an arclength integral along a curve.

    ``integrand(xs, ys)`` is vectorized; n is the subdivision count per
    segment (polyline edge) or per arc.
    """
    if n < 1:
        raise ValueError("need at least one subdivision")
    if isinstance(curve, Polyline):
        total = 0.0
        any_length = False
        for p, q in curve.edges():
            seg = math.hypot(q.x - p.x, q.y - p.y)
            if seg == 0.0:
                continue
            any_length = True
            ts = (np.arange(n, dtype=np.float64) + 0.5) / n
            xs = p.x + (q.x - p.x) * ts
            ys = p.y + (q.y - p.y) * ts
            vals = np.asarray(integrand(xs, ys), dtype=np.float64)
            total = ordered_sum(vals * (seg / n), total)
        if not any_length:
            raise DegenerateCurve("curve has zero length")
        return total
    if isinstance(curve, CircleArc):
        thetas = curve.start_angle + curve.span * (np.arange(n, dtype=np.float64) + 0.5) / n
        xs = curve.center.x + curve.radius * np.cos(thetas)
        ys = curve.center.y + curve.radius * np.sin(thetas)
        vals = np.asarray(integrand(xs, ys), dtype=np.float64)
        ds = curve.radius * curve.span / n
        return ordered_sum(vals * ds, 0.0)
    raise TypeError(f"unknown curve kind {type(curve).__name__}")

"""Exact planar primitives: regions, curves, areas, lengths, centroids, moments.

Regions are immutable value types.  Polygons and disks (and half-disks) carry
exact closed-form measures; slab regions carry a width profile and a declared
quadrature resolution, since no exact form exists for them.  First moments
about a line use the left-of-direction sign convention throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from .errors import (
    DegenerateCurve,
    DegenerateRegion,
    UnsupportedExact,
    UnsupportedRegion,
)

TWO_PI = 2.0 * math.pi

# Polygons above this size skip the O(n^2) simplicity check unless the caller
# asks for it explicitly (fine-grained sawtooth polygons would be quadratic).
_SIMPLE_CHECK_LIMIT = 512


def _require_finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise ValueError("coordinates must be finite")


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        _require_finite(self.x, self.y)


@dataclass(frozen=True)
class Line2:
    """Oriented line through ``point`` with unit ``direction``.

    The signed distance is positive on the left of the direction vector
    (normal = direction rotated 90 degrees counterclockwise).
    """

    point: Point2
    direction: tuple[float, float]

    def __post_init__(self):
        dx, dy = self.direction
        _require_finite(dx, dy)
        norm = math.hypot(dx, dy)
        if norm == 0.0:
            raise ValueError("line direction must be nonzero")
        if abs(norm - 1.0) > 1e-12:
            object.__setattr__(self, "direction", (dx / norm, dy / norm))

    @staticmethod
    def through(p: Point2, q: Point2) -> "Line2":
        return Line2(p, (q.x - p.x, q.y - p.y))

    @staticmethod
    def horizontal(y: float) -> "Line2":
        """Line y = const, directed along +x (positive side is above)."""
        return Line2(Point2(0.0, y), (1.0, 0.0))

    @staticmethod
    def vertical(x: float) -> "Line2":
        """Line x = const, directed along +y (positive side is x < const)."""
        return Line2(Point2(x, 0.0), (0.0, 1.0))

    def normal(self) -> tuple[float, float]:
        dx, dy = self.direction
        return (-dy, dx)

    def signed_distance(self, p: Point2) -> float:
        nx, ny = self.normal()
        return nx * (p.x - self.point.x) + ny * (p.y - self.point.y)


@dataclass(frozen=True)
class WidthFunction:
    """Nonnegative piecewise-monotone profile w(t) on [a, b].

    ``breakpoints`` are the interior piece boundaries; ``monotonicity`` gives
    one of "increasing"/"decreasing" per piece (a constant piece may declare
    either).  The evaluator must accept numpy arrays.
    """

    fn: Callable[[np.ndarray], np.ndarray] = field(compare=False)
    domain: tuple[float, float] = (0.0, 1.0)
    breakpoints: tuple[float, ...] = ()
    monotonicity: tuple[str, ...] = ("increasing",)

    def __post_init__(self):
        a, b = self.domain
        _require_finite(a, b)
        if not a < b:
            raise ValueError("domain must satisfy a < b")
        bps = tuple(float(t) for t in self.breakpoints)
        if any(not a < t < b for t in bps):
            raise ValueError("breakpoints must lie strictly inside the domain")
        if any(t1 >= t2 for t1, t2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        flags = tuple(self.monotonicity)
        if len(flags) != len(bps) + 1:
            raise ValueError("need one monotonicity flag per piece")
        if any(f not in ("increasing", "decreasing") for f in flags):
            raise ValueError("monotonicity flags are 'increasing' or 'decreasing'")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "monotonicity", flags)

    def pieces(self):
        """Yield (t0, t1, flag) for each declared monotone piece."""
        a, b = self.domain
        knots = (a,) + self.breakpoints + (b,)
        for t0, t1, flag in zip(knots, knots[1:], self.monotonicity):
            yield t0, t1, flag

    def __call__(self, t):
        return self.fn(np.asarray(t, dtype=np.float64))

    def total_variation(self) -> float:
        """Sum over pieces of |w(end) - w(start)|, from endpoint values."""
        tv = 0.0
        for t0, t1, _ in self.pieces():
            tv += abs(float(self(t1)) - float(self(t0)))
        return tv


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, stored counterclockwise (clockwise input is reversed).

    Weakly simple rings (boundary touching at isolated points, as in the
    sawtooth construction) are allowed; proper edge crossings are rejected.
    """

    vertices: tuple[Point2, ...]
    check_simple: bool | None = field(default=None, compare=False, repr=False)

    def __init__(self, vertices: Sequence, check_simple: bool | None = None):
        pts = tuple(v if isinstance(v, Point2) else Point2(float(v[0]), float(v[1])) for v in vertices)
        if len(pts) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for p, q in zip(pts, pts[1:] + pts[:1]):
            if p.x == q.x and p.y == q.y:
                raise ValueError("polygon has a repeated consecutive vertex")
        if _signed_area(pts) < 0.0:
            pts = pts[::-1]
        do_check = check_simple if check_simple is not None else len(pts) <= _SIMPLE_CHECK_LIMIT
        if do_check and _has_proper_self_intersection(pts):
            raise ValueError("polygon is self-intersecting")
        object.__setattr__(self, "vertices", pts)
        object.__setattr__(self, "check_simple", check_simple)

    def xy(self) -> np.ndarray:
        return np.array([(p.x, p.y) for p in self.vertices], dtype=np.float64)


@dataclass(frozen=True)
class Disk:
    center: Point2
    radius: float

    def __post_init__(self):
        _require_finite(self.radius)
        if self.radius <= 0.0:
            raise ValueError("disk radius must be positive")


@dataclass(frozen=True)
class HalfDisk:
    """Half-disk: the part of a disk on the ``bulge`` side of its diameter.

    ``center`` is the midpoint of the flat edge; ``bulge`` is the outward unit
    direction of the curved side.  Exact area pi r^2 / 2 and exact centroid at
    distance 4r/(3 pi) from the flat edge.
    """

    center: Point2
    radius: float
    bulge: tuple[float, float] = (1.0, 0.0)

    def __post_init__(self):
        _require_finite(self.radius, *self.bulge)
        if self.radius <= 0.0:
            raise ValueError("half-disk radius must be positive")
        bx, by = self.bulge
        norm = math.hypot(bx, by)
        if norm == 0.0:
            raise ValueError("bulge direction must be nonzero")
        if abs(norm - 1.0) > 1e-12:
            object.__setattr__(self, "bulge", (bx / norm, by / norm))


@dataclass(frozen=True)
class SlabRegion:
    """Region built from horizontal slabs: |x| <= w(y)/2 for y in [a, b].

    Slabs are stacked along the y axis and centered on x = 0.  There is no
    exact area; ``quadrature_slabs`` declares the midpoint resolution used for
    centroid and moment queries (the exhaustion module certifies the area).
    """

    width: WidthFunction
    quadrature_slabs: int = 4096

    def __post_init__(self):
        if self.quadrature_slabs < 1:
            raise ValueError("quadrature resolution must be positive")


PlanarRegion = Union[Polygon, Disk, HalfDisk, SlabRegion]


@dataclass(frozen=True)
class Polyline:
    points: tuple[Point2, ...]
    closed: bool = False

    def __init__(self, points: Sequence, closed: bool = False):
        pts = tuple(p if isinstance(p, Point2) else Point2(float(p[0]), float(p[1])) for p in points)
        if len(pts) < 2:
            raise ValueError("polyline needs at least 2 points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "closed", bool(closed))

    def edges(self):
        pts = self.points + (self.points[0],) if self.closed else self.points
        yield from zip(pts, pts[1:])


@dataclass(frozen=True)
class CircleArc:
    """Arc of angle ``span`` starting at ``start_angle`` (counterclockwise)."""

    center: Point2
    radius: float
    start_angle: float = 0.0
    span: float = TWO_PI

    def __post_init__(self):
        _require_finite(self.radius, self.start_angle, self.span)
        if self.radius <= 0.0:
            raise ValueError("arc radius must be positive")
        if not 0.0 < self.span <= TWO_PI:
            raise ValueError("arc span must lie in (0, 2*pi]")

    @property
    def closed(self) -> bool:
        return self.span == TWO_PI


Curve = Union[Polyline, CircleArc]


@dataclass(frozen=True)
class Profile:
    """Meridian section of a solid of revolution.

    Lives in the (rho, z) half-plane: the first coordinate is the distance to
    the revolution axis and must be >= 0 (touching the axis is allowed).
    """

    region: PlanarRegion

    def __post_init__(self):
        check_profile_region(self.region)


def check_profile_region(region: PlanarRegion, tol: float = 1e-12):
    """Raise AxisCrossing when any point of the region has rho < -tol."""
    from .errors import AxisCrossing

    rho_min = min_rho(region)
    if rho_min < -tol:
        raise AxisCrossing(f"profile reaches rho = {rho_min!r} past the revolution axis")


def min_rho(region: PlanarRegion) -> float:
    if isinstance(region, Polygon):
        return min(p.x for p in region.vertices)
    if isinstance(region, Disk):
        return region.center.x - region.radius
    if isinstance(region, HalfDisk):
        bx, by = region.bulge
        # Extremes occur at flat-edge endpoints or at the leftmost arc point.
        ex, ey = -by, bx
        cands = [region.center.x + region.radius * ex, region.center.x - region.radius * ex]
        if bx < 0.0:
            cands.append(region.center.x + region.radius * bx)
        return min(cands)
    if isinstance(region, SlabRegion):
        a, b = region.width.domain
        ts = np.linspace(a, b, 257)
        return float(-np.max(region.width(ts)) / 2.0)
    raise UnsupportedRegion(f"unknown region kind {type(region).__name__}")


# ---------------------------------------------------------------------------
# internal exact measure helpers


def _signed_area(pts: tuple[Point2, ...]) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        s += p.x * q.y - q.x * p.y
    return 0.5 * s


def _segments_properly_intersect(p1, p2, q1, q2) -> bool:
    def orient(a, b, c):
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0


def _has_proper_self_intersection(pts: tuple[Point2, ...]) -> bool:
    n = len(pts)
    edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent edges share an endpoint
            if _segments_properly_intersect(*edges[i], *edges[j]):
                return True
    return False


def _polygon_measures(poly: Polygon) -> tuple[float, float, float]:
    """(area, integral of x dA, integral of y dA) by the shoelace formulas."""
    a = sx = sy = 0.0
    pts = poly.vertices
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        cross = p.x * q.y - q.x * p.y
        a += cross
        sx += (p.x + q.x) * cross
        sy += (p.y + q.y) * cross
    return 0.5 * a, sx / 6.0, sy / 6.0


def _slab_grid(region: SlabRegion) -> tuple[np.ndarray, float]:
    a, b = region.width.domain
    n = region.quadrature_slabs
    h = (b - a) / n
    mids = a + (np.arange(n, dtype=np.float64) + 0.5) * h
    return mids, h


def _slab_measures(region: SlabRegion) -> tuple[float, float, float]:
    """Midpoint-quadrature (area, Sx, Sy) at the declared resolution."""
    mids, h = _slab_grid(region)
    w = np.asarray(region.width(mids), dtype=np.float64)
    area = float(np.sum(w) * h)
    # Slabs are centered on x = 0, so Sx vanishes identically.
    sy = float(np.sum(mids * w) * h)
    return area, 0.0, sy


def region_measures(region: PlanarRegion) -> tuple[float, float, float]:
    """(area, Sx, Sy) with Sx = integral x dA, Sy = integral y dA.

    Exact for polygons, disks and half-disks; midpoint quadrature at the
    declared resolution for slab regions.
    """
    if isinstance(region, Polygon):
        return _polygon_measures(region)
    if isinstance(region, Disk):
        a = math.pi * region.radius**2
        return a, a * region.center.x, a * region.center.y
    if isinstance(region, HalfDisk):
        a = 0.5 * math.pi * region.radius**2
        d = 4.0 * region.radius / (3.0 * math.pi)
        cx = region.center.x + d * region.bulge[0]
        cy = region.center.y + d * region.bulge[1]
        return a, a * cx, a * cy
    if isinstance(region, SlabRegion):
        return _slab_measures(region)
    raise UnsupportedRegion(f"unknown region kind {type(region).__name__}")


def _region_scale(region: PlanarRegion) -> float:
    (x0, x1), (y0, y1) = bounding_box(region)
    return max(x1 - x0, y1 - y0, 1e-300)


# ---------------------------------------------------------------------------
# public operations


def area(region: PlanarRegion) -> float:
    """Exact area.  Slab regions have no closed form; use exhaustion instead."""
    if isinstance(region, SlabRegion):
        raise UnsupportedExact("slab regions have no exact area; use exhaustion.area_bounds")
    return region_measures(region)[0]


def perimeter(curve: Curve) -> float:
    if isinstance(curve, Polyline):
        return sum(math.hypot(q.x - p.x, q.y - p.y) for p, q in curve.edges())
    if isinstance(curve, CircleArc):
        return curve.radius * curve.span
    raise UnsupportedRegion(f"unknown curve kind {type(curve).__name__}")


def centroid_region(region: PlanarRegion) -> Point2:
    a, sx, sy = region_measures(region)
    if a <= 1e-12 * _region_scale(region) ** 2:
        raise DegenerateRegion("region has zero area")
    return Point2(sx / a, sy / a)


def curve_measures(curve: Curve) -> tuple[float, float, float]:
    """(length, integral x ds, integral y ds)."""
    if isinstance(curve, Polyline):
        length = mx = my = 0.0
        for p, q in curve.edges():
            seg = math.hypot(q.x - p.x, q.y - p.y)
            length += seg
            mx += seg * 0.5 * (p.x + q.x)
            my += seg * 0.5 * (p.y + q.y)
        return length, mx, my
    if isinstance(curve, CircleArc):
        length = curve.radius * curve.span
        half = 0.5 * curve.span
        mid = curve.start_angle + half
        # centroid of an arc sits at distance r*sin(half)/half along the bisector
        d = curve.radius * math.sin(half) / half
        cx = curve.center.x + d * math.cos(mid)
        cy = curve.center.y + d * math.sin(mid)
        return length, length * cx, length * cy
    raise UnsupportedRegion(f"unknown curve kind {type(curve).__name__}")


def centroid_curve(curve: Curve) -> Point2:
    length, mx, my = curve_measures(curve)
    if length <= 0.0:
        raise DegenerateCurve("curve has zero length")
    return Point2(mx / length, my / length)


def first_moment(region: PlanarRegion, line: Line2) -> float:
    """Integral of the signed distance to ``line`` over the region (dA).

    Zero exactly when the line passes through the region centroid.
    """
    a, sx, sy = region_measures(region)
    if a <= 1e-12 * _region_scale(region) ** 2:
        raise DegenerateRegion("region has zero area")
    nx, ny = line.normal()
    return nx * (sx - line.point.x * a) + ny * (sy - line.point.y * a)


def first_moment_curve(curve: Curve, line: Line2) -> float:
    """Integral of the signed distance to ``line`` over the curve (ds)."""
    length, mx, my = curve_measures(curve)
    if length <= 0.0:
        raise DegenerateCurve("curve has zero length")
    nx, ny = line.normal()
    return nx * (mx - line.point.x * length) + ny * (my - line.point.y * length)


# ---------------------------------------------------------------------------
# membership, boundary and bounding box (shared by oracles, CLI and solids)


def bounding_box(region: PlanarRegion) -> tuple[tuple[float, float], tuple[float, float]]:
    if isinstance(region, Polygon):
        xs = [p.x for p in region.vertices]
        ys = [p.y for p in region.vertices]
        return (min(xs), max(xs)), (min(ys), max(ys))
    if isinstance(region, Disk):
        c, r = region.center, region.radius
        return (c.x - r, c.x + r), (c.y - r, c.y + r)
    if isinstance(region, HalfDisk):
        # bbox of the full disk is a valid (slightly loose) cover
        c, r = region.center, region.radius
        return (c.x - r, c.x + r), (c.y - r, c.y + r)
    if isinstance(region, SlabRegion):
        a, b = region.width.domain
        ts = np.linspace(a, b, 1025)
        half = float(np.max(region.width(ts))) / 2.0
        return (-half, half), (a, b)
    raise UnsupportedRegion(f"unknown region kind {type(region).__name__}")


def contains(region: PlanarRegion, xs, ys) -> np.ndarray:
    """Vectorized membership test; accepts arrays, returns a boolean array."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if isinstance(region, Disk):
        return (xs - region.center.x) ** 2 + (ys - region.center.y) ** 2 <= region.radius**2
    if isinstance(region, HalfDisk):
        dx, dy = xs - region.center.x, ys - region.center.y
        inside = dx**2 + dy**2 <= region.radius**2
        return inside & (dx * region.bulge[0] + dy * region.bulge[1] >= 0.0)
    if isinstance(region, SlabRegion):
        a, b = region.width.domain
        band = (ys >= a) & (ys <= b)
        half = np.zeros_like(ys)
        if np.any(band):
            half[band] = np.asarray(region.width(ys[band]), dtype=np.float64) / 2.0
        return band & (np.abs(xs) <= half)
    if isinstance(region, Polygon):
        pts = region.xy()
        inside = np.zeros(np.broadcast(xs, ys).shape, dtype=bool)
        n = len(pts)
        j = n - 1
        for i in range(n):
            xi, yi = pts[i]
            xj, yj = pts[j]
            crosses = (yi > ys) != (yj > ys)
            with np.errstate(divide="ignore", invalid="ignore"):
                xcross = (xj - xi) * (ys - yi) / (yj - yi) + xi
            inside ^= crosses & (xs < xcross)
            j = i
        return inside
    raise UnsupportedRegion(f"unknown region kind {type(region).__name__}")


def boundary(region: PlanarRegion) -> Curve:
    """Boundary curve of a region (closed polyline or circle)."""
    if isinstance(region, Polygon):
        return Polyline(region.vertices, closed=True)
    if isinstance(region, Disk):
        return CircleArc(region.center, region.radius)
    raise UnsupportedRegion(f"no boundary curve for {type(region).__name__}")


def revolving_boundary(region: PlanarRegion) -> Curve:
    """Boundary pieces that sweep surface when revolved about the rho=0 axis.

    For a half-disk whose flat edge lies on the axis this is the semicircular
    arc alone; edges on the axis sweep nothing either way (rho = 0 there).
    """
    if isinstance(region, HalfDisk):
        bx, by = region.bulge
        if not (abs(region.center.x) <= 1e-12 and abs(by) <= 1e-12 and bx > 0.0):
            raise UnsupportedRegion(
                "half-disk profiles are supported only with the flat edge on the axis"
            )
        return CircleArc(region.center, region.radius, start_angle=-0.5 * math.pi, span=math.pi)
    return boundary(region)

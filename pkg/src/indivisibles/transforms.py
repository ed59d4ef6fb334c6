"""Measure-preserving figure transforms.

Each construction is an explicit figure-to-figure map with a declared set of
preserved quantities.  Shears, apex moves, twists and the revolution unfolding
preserve their measures exactly; the two discretized constructions (circle
unrolling, meridian unfolding) return explicit discrete geometry together
with a documented convergence rate instead of pretending to be exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ApexHeightChanged, UnsupportedRegion
from .geometry import Disk, Line2, PlanarRegion, Point2, Polygon, Profile
from .solids import Cone, Cylinder, DoubleHoof, HeightFieldCylinder, Point3, Solid, Sphere, TwistedColumn

TWO_PI = 2.0 * math.pi

# What each construction preserves (the discretized ones preserve their
# measures only in the n -> infinity limit; see the convergence notes below).
PRESERVED = {
    "shear2d": frozenset({"area"}),
    "move-apex": frozenset({"volume"}),
    "unroll-disk": frozenset({"area"}),
    "twist-column": frozenset({"volume"}),
    "meridian-unfold": frozenset({"volume", "lateral-area"}),
    "unfold-revolution": frozenset({"volume", "lateral-area"}),
}


@dataclass(frozen=True)
class Transform:
    """A named construction with its preserved-quantity set."""

    kind: str
    parameters: dict

    def __post_init__(self):
        if self.kind not in PRESERVED:
            raise ValueError(f"unknown transform kind {self.kind!r}")

    @property
    def preserves(self) -> frozenset[str]:
        return PRESERVED[self.kind]


def shear_region(region: PlanarRegion, base: Line2, shift_per_unit_distance: float) -> Polygon:
    """Slide each vertex along the base direction, proportionally to its
    distance from the base.  Slices parallel to the base glide over each
    other, so the area is preserved exactly."""
    if not isinstance(region, Polygon):
        raise UnsupportedRegion("shear is defined for polygons only")
    dx, dy = base.direction
    moved = []
    for p in region.vertices:
        d = base.signed_distance(p)
        moved.append(Point2(p.x + shift_per_unit_distance * d * dx, p.y + shift_per_unit_distance * d * dy))
    return Polygon(moved, check_simple=region.check_simple)


def move_apex(cone: Cone, new_apex: Point3) -> Cone:
    """Move a cone apex within the plane parallel to its base.

    Every slice parallel to the base keeps its area, so the volume is the
    same; a height change is rejected.
    """
    h_old, h_new = cone.apex.z, new_apex.z
    if abs(h_new - h_old) > 1e-12 * max(abs(h_old), abs(h_new), 1.0):
        raise ApexHeightChanged(f"apex height changed from {h_old!r} to {h_new!r}")
    return Cone(cone.base, new_apex)


def unroll_disk(disk: Disk, n: int) -> Polygon:
    """Cut the disk like a pie into n slices and unroll them along a line.

    Returns the sawtooth polygon of n isoceles teeth (chord base
    2 r sin(pi/n), apothem height r cos(pi/n)) standing on a baseline of
    length n * chord.  Its area is n/2 * chord * apothem; the defect against
    pi r^2 shrinks at order 1/n^2 (within pi r^2 * (3/2) (pi/n)^2 for n >= 8).
    Shearing every tooth apex onto a common point afterwards leaves the area
    unchanged and produces a single triangle of the same base and height.
    """
    if n < 3:
        raise ValueError("need at least 3 slices to unroll a disk")
    r = disk.radius
    chord = 2.0 * r * math.sin(math.pi / n)
    apothem = r * math.cos(math.pi / n)
    verts: list[Point2] = [Point2(0.0, 0.0)]
    for i in range(n):
        verts.append(Point2((i + 0.5) * chord, apothem))
        verts.append(Point2((i + 1.0) * chord, 0.0))
    # teeth touch the baseline at interior vertices: weakly simple by design
    return Polygon(verts, check_simple=False)


def sawtooth_teeth(sawtooth: Polygon) -> list[Polygon]:
    """Split an unrolled sawtooth back into its n tooth triangles."""
    verts = sawtooth.vertices
    if len(verts) % 2 != 1:
        raise ValueError("not a sawtooth polygon")
    teeth = []
    for i in range(len(verts) // 2):
        base0, apex, base1 = verts[2 * i], verts[2 * i + 1], verts[2 * i + 2]
        teeth.append(Polygon([base0, base1, apex]))
    return teeth


def twist_column(cyl: Cylinder, twist: float) -> Solid:
    """Twist a column about its axis, rotating each cross-section by
    twist * z.  Sections stay congruent, so the volume is unchanged ("a stack
    of coins can be shifted into a helical stack of the same volume")."""
    if twist == 0.0:
        return cyl
    return TwistedColumn(cyl.base, cyl.height, twist)


def meridian_unfold(sphere: Sphere, n: int) -> DoubleHoof:
    """Split the sphere into n meridian wedges, unroll them along the equator
    and slide the ribs onto each other.

    Each wedge (dihedral 2 pi / n) is idealized as a cylinder section whose
    cut planes make the half-angle tan(pi/n) with the equator plane; stacking
    the wedges rib to rib yields a double hoof of cylinder radius r and apex
    height n r tan(pi/n).  Volume and lateral area are n (4/3) r^3 tan(pi/n)
    and n 4 r^2 tan(pi/n): both converge to the sphere values at order 1/n^2,
    and the limit object is the pair of hoofs with apex height pi r.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("wedge count must be an even integer >= 4")
    r = sphere.radius
    apex = n * r * math.tan(math.pi / n)
    return DoubleHoof(radius=r, apex_height=apex, wedges=n)


def unfold_revolution(profile: Profile) -> HeightFieldCylinder:
    """Slice a solid of revolution by meridian half-planes, unfold and regroup
    it into a right cylinder over the section.

    Each vertical fibre of the cylinder has the length of the circumference
    described by its base point, so the height field is h(p) = 2 pi rho(p);
    volume and lateral area match the solid of revolution exactly.
    """
    return HeightFieldCylinder(base=profile.region, rho_coeff=TWO_PI, offset=0.0)

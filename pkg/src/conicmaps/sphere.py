"""Unit-sphere geometry in longitude/height coordinates.

A point of the unit sphere is addressed by its longitude ``theta`` and its
height ``rho`` (the z-coordinate), embedding to

    (sqrt(1 - rho^2) cos(theta), sqrt(1 - rho^2) sin(theta), rho).

The poles are excluded: every operation works on the open chart
``-1 < rho < 1``, ``0 <= theta < 2*pi``.  Angles are radians throughout;
degrees exist only at the ingestion/CLI layer.  Latitude ``arcsin(rho)`` and
colatitude ``arccos(rho)`` are derived accessors, never stored.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TAU = 2.0 * math.pi


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite coordinate: {v!r}")


@dataclass(frozen=True)
class SphericalPoint:
    """Point on the unit sphere with longitude ``theta`` and height ``rho``."""

    theta: float
    rho: float

    def __post_init__(self):
        _check_finite(self.theta, self.rho)
        if not -1.0 < self.rho < 1.0:
            raise ValueError(f"rho must lie in (-1, 1), got {self.rho}")
        object.__setattr__(self, "theta", self.theta % TAU)

    @property
    def xyz(self) -> tuple[float, float, float]:
        r = math.sqrt(1.0 - self.rho * self.rho)
        return (r * math.cos(self.theta), r * math.sin(self.theta), self.rho)

    @property
    def colatitude(self) -> float:
        """Spherical distance from the north pole, arccos(rho)."""
        return math.acos(self.rho)

    @property
    def latitude(self) -> float:
        return math.asin(self.rho)

    @classmethod
    def from_xyz(cls, x: float, y: float, z: float) -> "SphericalPoint":
        norm = math.sqrt(x * x + y * y + z * z)
        if norm == 0.0:
            raise ValueError("zero vector has no direction")
        return cls(math.atan2(y, x) % TAU, z / norm)


@dataclass(frozen=True)
class SphericalAnnulus:
    """Open band of the sphere between the parallels at heights rho1 < rho2."""

    rho1: float
    rho2: float

    def __post_init__(self):
        _check_finite(self.rho1, self.rho2)
        if not -1.0 < self.rho1 < self.rho2 < 1.0:
            raise ValueError(
                f"annulus needs -1 < rho1 < rho2 < 1, got ({self.rho1}, {self.rho2})"
            )


@dataclass(frozen=True)
class PlanarPoint:
    """Point of one of the auxiliary planes.

    ``role`` records which plane the coordinates live in: "w" for the
    stereographic image plane, "z" for the normalized chart plane, "sector"
    for the developed cone, "map" for the final drawing plane.
    """

    re: float
    im: float
    role: str = "w"

    def __post_init__(self):
        _check_finite(self.re, self.im)

    @property
    def complex(self) -> complex:
        return complex(self.re, self.im)

    @property
    def radius(self) -> float:
        return abs(self.complex)

    @property
    def angle(self) -> float:
        return cmath.phase(self.complex) % TAU


def stereographic_project(p: SphericalPoint) -> PlanarPoint:
    """Project from the north pole onto the equator plane.

    The image of (theta, rho) is the complex number
    sqrt((1+rho)/(1-rho)) * exp(i*theta); the south pole goes to the origin
    (in the limiting sense) and the north pole is out of the chart.
    """
    r = math.sqrt((1.0 + p.rho) / (1.0 - p.rho))
    return PlanarPoint(r * math.cos(p.theta), r * math.sin(p.theta), "w")


def stereographic_unproject(w: PlanarPoint | complex) -> SphericalPoint:
    """Inverse of :func:`stereographic_project`; rejects the origin."""
    z = w.complex if isinstance(w, PlanarPoint) else complex(w)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("non-finite planar point")
    m2 = z.real * z.real + z.imag * z.imag
    if m2 == 0.0:
        raise ValueError("origin corresponds to the south pole (out of chart)")
    rho = (m2 - 1.0) / (m2 + 1.0)
    return SphericalPoint(cmath.phase(z) % TAU, rho)


def spherical_distance(p: SphericalPoint, q: SphericalPoint) -> float:
    """Geodesic (great-circle) distance, in [0, pi].

    Evaluated as atan2(|P x Q|, P . Q), which equals arccos(P . Q) but stays
    accurate at both ends of the range (arccos alone loses half the digits
    near coincident or antipodal points).
    """
    a = p.xyz
    b = q.xyz
    dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    cx = a[1] * b[2] - a[2] * b[1]
    cy = a[2] * b[0] - a[0] * b[2]
    cz = a[0] * b[1] - a[1] * b[0]
    return math.atan2(math.sqrt(cx * cx + cy * cy + cz * cz), dot)


def spherical_midpoint(p: SphericalPoint, q: SphericalPoint) -> SphericalPoint:
    """Geodesic midpoint; antipodal pairs are rejected (midpoint not unique)."""
    a = p.xyz
    b = q.xyz
    s = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
    norm = math.sqrt(s[0] ** 2 + s[1] ** 2 + s[2] ** 2)
    if norm < 1e-12:
        raise ValueError("antipodal points have no unique midpoint")
    return SphericalPoint.from_xyz(*s)


def annulus_modulus(a: SphericalAnnulus) -> float:
    """Conformal modulus of the annulus between the two parallels.

    Computed through the stereographic image, a round annulus with radii
    sqrt((1+rho)/(1-rho)); the value is
    log(((1-rho1)/(1+rho1)) * ((1+rho2)/(1-rho2))) / (4*pi)
    and is additive over concatenated bands.
    """
    t = (math.log1p(-a.rho1) - math.log1p(a.rho1)
         + math.log1p(a.rho2) - math.log1p(-a.rho2))
    return t / (4.0 * math.pi)

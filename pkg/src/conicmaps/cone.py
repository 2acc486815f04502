"""Circular cones coaxial with the poles and their planar development.

All cones here are rotationally symmetric about the z-axis, open downward,
with the apex at (0, 0, apex_z); ``alpha`` is the half-apex angle, i.e. the
angle between the axis and a generator.  The surface satisfies

    Z = apex_z - sqrt(X^2 + Y^2) / tan(alpha).

Cutting a cone along one generator and unrolling it gives a planar sector of
angle 2*pi*sin(alpha); a surface point at slant distance ``s`` from the apex
and spherical longitude ``theta`` develops to the sector point
``s * exp(i * theta * sin(alpha))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConditionViolation,
    NoIntersection,
    TangentIntersection,
    UnsupportedGeometry,
)
from .sphere import TAU, PlanarPoint, _check_finite


def apex_offset(alpha: float, rho: float) -> float:
    """Axial distance from the plane of the parallel at height ``rho`` to the
    apex of a cone with half-apex angle ``alpha`` passing through it:
    sqrt(1 - rho^2) / tan(alpha)."""
    return math.sqrt(1.0 - rho * rho) / math.tan(alpha)


@dataclass(frozen=True)
class Cone:
    """Downward cone with apex (0, 0, apex_z) and half-apex angle alpha."""

    alpha: float
    apex_z: float

    def __post_init__(self):
        _check_finite(self.alpha, self.apex_z)
        if not 0.0 < self.alpha < math.pi / 2.0:
            raise ValueError(f"half-apex angle must lie in (0, pi/2), got {self.alpha}")

    @property
    def sin_alpha(self) -> float:
        return math.sin(self.alpha)

    @property
    def cos_alpha(self) -> float:
        return math.cos(self.alpha)

    @property
    def tan_alpha(self) -> float:
        return math.tan(self.alpha)

    def slant_at_height(self, z: float) -> float:
        """Slant distance from the apex to the horizontal circle at height z."""
        if z >= self.apex_z:
            raise ValueError("height is at or above the apex")
        return (self.apex_z - z) / self.cos_alpha

    def point(self, slant: float, theta: float) -> "ConePoint":
        return ConePoint(self, slant, theta)


@dataclass(frozen=True)
class ConePoint:
    """Surface point given by slant distance from the apex and longitude."""

    cone: Cone
    slant: float
    theta: float

    def __post_init__(self):
        _check_finite(self.slant, self.theta)
        if self.slant <= 0.0:
            raise ValueError("slant distance must be positive (apex excluded)")
        object.__setattr__(self, "theta", self.theta % TAU)

    @property
    def xyz(self) -> tuple[float, float, float]:
        r = self.slant * self.cone.sin_alpha
        return (
            r * math.cos(self.theta),
            r * math.sin(self.theta),
            self.cone.apex_z - self.slant * self.cone.cos_alpha,
        )


@dataclass(frozen=True)
class ConicalAnnulus:
    """Annulus on a cone bounded by the circles at two slant distances."""

    cone: Cone
    s_inner: float
    s_outer: float

    def __post_init__(self):
        if not 0.0 < self.s_inner < self.s_outer:
            raise ValueError(
                f"need 0 < s_inner < s_outer, got ({self.s_inner}, {self.s_outer})"
            )


def _intersection_heights(alpha: float, apex_z: float) -> tuple[float, float]:
    """Roots of the sphere/cone height quadratic, without nappe filtering.

    Heights z of intersection circles satisfy
    (1 + t^2) z^2 - 2 A t^2 z + (A^2 t^2 - 1) = 0 with t = tan(alpha),
    A = apex_z.  The quarter discriminant reduces to 1 + t^2 (1 - A^2);
    the larger root is taken from the direct formula (no cancellation:
    both terms are positive) and the other from Vieta's product.
    """
    t = math.tan(alpha)
    t2 = t * t
    a = 1.0 + t2
    disc4 = 1.0 + t2 * (1.0 - apex_z * apex_z)
    if disc4 < -1e-12:
        raise NoIntersection("cone misses the sphere")
    if disc4 <= 1e-12:
        raise TangentIntersection("cone is tangent to the sphere")
    z_hi = (apex_z * t2 + math.sqrt(disc4)) / a
    z_lo = (apex_z * apex_z * t2 - 1.0) / (a * z_hi)
    return z_lo, z_hi


def cone_touching_parallel(alpha: float, rho0: float) -> Cone:
    """Cone with half-apex angle ``alpha`` whose lower intersection circle
    with the sphere is the parallel at height ``rho0``.

    The apex sits at rho0 + apex_offset(alpha, rho0).  Construction fails
    when the cone would miss the sphere (apex_z * sin(alpha) >= 1) or when
    the requested parallel is the upper of the two intersection circles.
    """
    if not 0.0 < alpha < math.pi / 2.0:
        raise ValueError(f"half-apex angle must lie in (0, pi/2), got {alpha}")
    if not -1.0 < rho0 < 1.0:
        raise ValueError(f"rho0 must lie in (-1, 1), got {rho0}")
    apex_z = rho0 + apex_offset(alpha, rho0)
    sa = math.sin(alpha)
    if apex_z * sa >= 1.0:
        raise ConditionViolation(
            f"(apex_offset + rho0) * sin(alpha) = {apex_z * sa:.6g} >= 1: "
            "the cone does not cross the sphere in two circles"
        )
    # The lower root of the height quadratic must be rho0 itself; otherwise
    # the parallel would be the upper circle and the construction is invalid.
    lower = apex_z * sa * sa - math.cos(alpha) * math.sqrt(1.0 - (apex_z * sa) ** 2)
    if abs(lower - rho0) > 1e-10:
        raise ConditionViolation(
            f"parallel at height {rho0} is not the lower intersection circle "
            f"(lower circle sits at {lower:.9g})"
        )
    return Cone(alpha, apex_z)


def cone_through_parallels(rho1: float, rho2: float) -> Cone:
    """Cone through both parallels at heights rho1 < rho2.

    Its half-apex angle satisfies
    tan(alpha) = (sqrt(1-rho1^2) - sqrt(1-rho2^2)) / (rho2 - rho1),
    which is only a downward cone with apex above the sphere when
    rho1 + rho2 > 0; other height pairs are rejected.
    """
    if not -1.0 < rho1 < rho2 < 1.0:
        raise ValueError(f"need -1 < rho1 < rho2 < 1, got ({rho1}, {rho2})")
    r1 = math.sqrt(1.0 - rho1 * rho1)
    r2 = math.sqrt(1.0 - rho2 * rho2)
    tana = (r1 - r2) / (rho2 - rho1)
    if tana <= 0.0:
        raise UnsupportedGeometry(
            "parallels of equal or inverted radii (rho1 + rho2 <= 0) give a "
            "cylinder or an upward cone; not supported"
        )
    alpha = math.atan(tana)
    return Cone(alpha, rho1 + r1 / tana)


def sphere_cone_intersections(c: Cone) -> tuple[float, float]:
    """Heights of the two circles where the cone crosses the unit sphere.

    Raises :class:`NoIntersection` / :class:`TangentIntersection` when the
    discriminant is non-positive, and :class:`NoIntersection` when one of the
    quadratic roots falls on the mirror (upward) nappe, i.e. above the apex.
    """
    z_lo, z_hi = _intersection_heights(c.alpha, c.apex_z)
    if z_hi > c.apex_z + 1e-12 or z_lo > c.apex_z + 1e-12:
        raise NoIntersection(
            "the downward nappe meets the sphere in fewer than two circles"
        )
    return z_lo, z_hi


def develop(c: Cone, p: ConePoint) -> PlanarPoint:
    """Unroll the cone: the image of (slant, theta) is the sector point
    slant * exp(i * theta * sin(alpha)).

    The development is an isometry; the seam theta = 0 maps to the positive
    real axis and a full parallel sweep covers the sector angle
    2*pi*sin(alpha).
    """
    if p.cone != c:
        raise ValueError("point does not lie on this cone")
    ang = p.theta * c.sin_alpha
    return PlanarPoint(p.slant * math.cos(ang), p.slant * math.sin(ang), "sector")


def cone_annulus_modulus(b: ConicalAnnulus) -> float:
    """Conformal modulus of a conical annulus.

    Developing onto the sector and straightening the sector to a full plane
    annulus with the power map of exponent 1/sin(alpha) gives
    log(s_outer / s_inner) / (2 * pi * sin(alpha)).
    """
    return math.log(b.s_outer / b.s_inner) / (TAU * b.cone.sin_alpha)

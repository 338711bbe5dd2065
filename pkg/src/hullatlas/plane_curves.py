"""Plücker formulas, the genus-degree formula and tangent developables."""

from __future__ import annotations

from dataclasses import dataclass


class InvalidInvariants(ValueError):
    pass


def genus_degree(d: int, delta: int, kappa: int) -> int:
    """Geometric genus of a plane curve of degree d with delta nodes and kappa cusps."""
    if min(d, delta, kappa) < 0:
        raise InvalidInvariants("invariants must be nonnegative")
    return (d - 1) * (d - 2) // 2 - delta - kappa


@dataclass(frozen=True)
class PlaneCurveInvariants:
    """Degree, geometric genus, nodes and cusps of a plane curve with only nodes and cusps."""

    d: int
    g: int
    delta: int
    kappa: int

    def __post_init__(self):
        if self.d < 1 or self.delta < 0 or self.kappa < 0 or self.g < 0:
            raise InvalidInvariants(f"invalid invariants {self.as_tuple()}")
        if self.g != genus_degree(self.d, self.delta, self.kappa):
            raise InvalidInvariants(
                f"genus {self.g} disagrees with degree/singularities {self.d},{self.delta},{self.kappa}"
            )

    @classmethod
    def from_singularities(cls, d: int, delta: int, kappa: int) -> "PlaneCurveInvariants":
        return cls(d, genus_degree(d, delta, kappa), delta, kappa)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d, self.g, self.delta, self.kappa)

    def to_json(self) -> dict:
        return {"degree": self.d, "genus": self.g, "nodes": self.delta, "cusps": self.kappa}


def plucker_dual(inv: PlaneCurveInvariants) -> PlaneCurveInvariants:
    """Invariants of the dual curve.

    d* = d(d-1) - 2 delta - 3 kappa and g* = g; delta*, kappa* then follow from
    d = d*(d*-1) - 2 delta* - 3 kappa* and g = (d*-1)(d*-2)/2 - delta* - kappa*.
    """
    d, g, delta, kappa = inv.as_tuple()
    ds = d * (d - 1) - 2 * delta - 3 * kappa
    if ds < 2:
        raise InvalidInvariants(f"dual degree {ds} < 2: the curve is a line or the data are inconsistent")
    a = ds * (ds - 1) - d  # 2 delta* + 3 kappa*
    b = (ds - 1) * (ds - 2) // 2 - g  # delta* + kappa*
    kappa_s = a - 2 * b
    delta_s = b - kappa_s
    if kappa_s < 0 or delta_s < 0:
        raise InvalidInvariants(f"negative dual singularity counts ({delta_s}, {kappa_s})")
    return PlaneCurveInvariants(ds, g, delta_s, kappa_s)


@dataclass(frozen=True)
class SpaceCurveData:
    degree: int
    geometric_genus: int
    cusp_count: int

    def __post_init__(self):
        if min(self.degree, self.geometric_genus, self.cusp_count) < 0:
            raise InvalidInvariants("space curve data must be nonnegative")


def tangent_developable_degree(c: SpaceCurveData) -> int:
    """Degree of the tangent developable, from Riemann-Hurwitz for a projection to P^1.

    2g - 2 = deg * (-2) + (cusps + deg T), so deg T = 2g - 2 + 2 deg - cusps.
    """
    out = 2 * c.geometric_genus - 2 + 2 * c.degree - c.cusp_count
    if out < 0:
        raise InvalidInvariants(f"negative developable degree {out}")
    return out


def riemann_hurwitz_sides(c: SpaceCurveData, developable_degree: int) -> tuple[int, int]:
    """Both sides of 2g - 2 = deg * (-2) + (cusps + deg T)."""
    return 2 * c.geometric_genus - 2, c.degree * (-2) + (c.cusp_count + developable_degree)

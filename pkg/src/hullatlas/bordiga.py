"""Bordiga surfaces: component censuses, invariant chains and plane-quartic certificates.

A Bordiga surface is the plane blown up in ten points and embedded in P^4 by
quartics through them.  A hyperplane u supports the real surface exactly
when the corresponding plane quartic q_u has constant sign, so all real
statements are checked on plane quartics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .algebra import univariate as U
from .algebra.matrix import nullspace, rank
from .algebra.poly import Poly
from .algebra.resultant import resultant
from .counts import SurfaceSystem, chern_input, count_cuspidal, count_nodal, stored_constant
from .plane_curves import (
    PlaneCurveInvariants,
    SpaceCurveData,
    genus_degree,
    plucker_dual,
    riemann_hurwitz_sides,
    tangent_developable_degree,
)

P2 = ("x0", "x1", "x2")

BORDIGA = chern_input(SurfaceSystem.parse("bordiga"))
PLANE_QUARTICS = chern_input(SurfaceSystem.parse("plane:4"))
PLANE_CUBICS = chern_input(SurfaceSystem.parse("plane:3"))
# quartics through the ten points with a double point at one of them
BORDIGA_NODE = chern_input(SurfaceSystem.blowup_plane(4, [2] + [1] * 9, "quartics singular at one base point"))

# three-nodal quartic Severi curve through ten points: genera and the count of members with
# two nodes and a cusp
SEVERI_DEGREE_LINES = 55
SEVERI_ARITH_GENUS = stored_constant("severi_arith_genus").value
SEVERI_GEOM_GENUS = stored_constant("severi_geom_genus").value
SEVERI_CUSPS = stored_constant("N_A1A1A2_quartics").value
BRANCH_DEGREE = stored_constant("branch_degree").value
BRANCH_CUSPS = stored_constant("branch_cusps").value
PRINTED_K3_TOTAL = 675


class PipelineMismatch(ArithmeticError):
    pass


class CommonComponent(ValueError):
    pass


class RetryBudgetExhausted(RuntimeError):
    pass


# -- censuses ------------------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusEntry:
    label: str
    count: int
    per_degree: int
    dual_is_hypersurface: bool
    citation: str

    @property
    def degree(self) -> int:
        return self.count * self.per_degree

    def to_json(self) -> dict:
        return {"label": self.label, "count": self.count, "per_degree": self.per_degree,
                "degree": self.degree, "dual_is_hypersurface": self.dual_is_hypersurface,
                "citation": self.citation}


@dataclass
class ComponentCensus:
    k: int
    entries: list[CensusEntry]
    expected_total: int
    cross_checks: list[tuple[str, int, int]] = field(default_factory=list)  # (name, expected, computed)
    flags: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(e.degree for e in self.entries)

    @property
    def consistent(self) -> bool:
        return self.total == self.expected_total and all(a == b for _, a, b in self.cross_checks)

    def to_json(self) -> dict:
        return {
            "k": self.k, "entries": [e.to_json() for e in self.entries], "total": self.total,
            "expected_total": self.expected_total, "consistent": self.consistent,
            "cross_checks": [{"name": n, "expected": a, "computed": b} for n, a, b in self.cross_checks],
            "flags": self.flags,
        }


def census(k: int) -> ComponentCensus:
    """Components of X^[k] for a generic Bordiga surface, cross-checked against the nodal counts."""
    expected = count_nodal(k, BORDIGA)
    if k == 2:
        n2 = count_nodal(2, PLANE_QUARTICS)
        entries = [
            CensusEntry("A", 10, 1, False, "node at a base point: one plane per point"),
            CensusEntry("B", 1, n2, True, "two nodes off the base points: 2-nodal quartics through 12 points"),
        ]
        checks = [("2-nodal quartics", 225, n2)]
        return ComponentCensus(2, entries, expected, checks)
    if k == 3:
        n3 = count_nodal(3, PLANE_QUARTICS)
        node1 = count_nodal(1, BORDIGA_NODE)
        entries = [
            CensusEntry("A1", comb(10, 2), 1, False, "line through two points plus cubic through eight"),
            CensusEntry("A2", 10, 1, False, "cubic through nine points plus a line through the tenth"),
            CensusEntry("B", 1, n3 - SEVERI_DEGREE_LINES, True, "rational quartics: the Severi curve"),
            CensusEntry("C", 10, node1, True, "node at a base point plus one more node: plane curves"),
        ]
        checks = [
            ("Severi degree", 620, n3 - SEVERI_DEGREE_LINES),
            ("reducible components", SEVERI_DEGREE_LINES, comb(10, 2) + 10),
            ("degree per node component", 20, node1),
        ]
        flags = []
        if PRINTED_K3_TOTAL != expected:
            flags.append(
                f"stated total {PRINTED_K3_TOTAL} differs from the component sum {expected}"
                + (" and equals the 3-nodal plane quartic count" if n3 == PRINTED_K3_TOTAL else "")
            )
        return ComponentCensus(3, entries, expected, checks, flags)
    if k == 4:
        two_conics = comb(10, 5) // 2
        cubic_line = comb(10, 8) * count_nodal(1, PLANE_CUBICS)
        n4 = count_nodal(4, PLANE_QUARTICS)
        node2 = count_nodal(2, BORDIGA_NODE)
        overlap = 2 * comb(10, 2)
        entries = [
            CensusEntry("A1", two_conics, 1, False, "two conics through five points each"),
            CensusEntry("A2", cubic_line, 1, False, "nodal cubic through eight points plus a line through two"),
            CensusEntry("B", 10 * node2 - overlap, 1, False, "node at a base point plus two more nodes, less overlap"),
            CensusEntry("C", comb(10, 2), 1, False, "nodes at two base points"),
        ]
        checks = [
            ("two-conic quartics", 126, two_conics),
            ("cubic-plus-line quartics", 540, cubic_line),
            ("4-nodal quartics", 666, n4),
            ("reducible split", n4, two_conics + cubic_line),
            ("node at a base point plus two", 1140, 10 * node2),
            ("double counting", 90, overlap),
        ]
        return ComponentCensus(4, entries, expected, checks)
    raise ValueError("k must be 2, 3 or 4")


# -- the curve Y of quartics singular at a base point ----------------------------------------------

@dataclass
class YCurveReport:
    branch: PlaneCurveInvariants
    y_curve: PlaneCurveInvariants
    genus_paths: tuple[int, int]
    kazarian_nodes: int
    kazarian_cusps: int
    cone_degree: int
    components: int

    @property
    def total_cone_degree(self) -> int:
        return self.cone_degree * self.components

    def to_json(self) -> dict:
        return {
            "branch": self.branch.to_json(), "y_curve": self.y_curve.to_json(),
            "genus_paths": list(self.genus_paths), "kazarian_nodes": self.kazarian_nodes,
            "kazarian_cusps": self.kazarian_cusps, "cone_degree": self.cone_degree,
            "components": self.components, "total_cone_degree": self.total_cone_degree,
        }


def y_curve_pipeline() -> YCurveReport:
    """Branch curve (8, 0 nodes, 12 cusps) -> its dual Y, checked against independent counts."""
    g = genus_degree(BRANCH_DEGREE, 0, BRANCH_CUSPS)
    branch = PlaneCurveInvariants(BRANCH_DEGREE, g, 0, BRANCH_CUSPS)
    y = plucker_dual(branch)
    g2 = genus_degree(y.d, y.delta, y.kappa)
    nodes = count_nodal(2, BORDIGA_NODE)
    cusps = count_cuspidal(BORDIGA_NODE)
    if (y.delta, y.kappa) != (nodes, cusps):
        raise PipelineMismatch(f"Y has ({y.delta}, {y.kappa}) nodes/cusps, counts give ({nodes}, {cusps})")
    if g != g2:
        raise PipelineMismatch(f"genus {g} vs {g2}")
    if y.d != count_nodal(1, BORDIGA_NODE):
        raise PipelineMismatch(f"Y has degree {y.d}, one-nodal count {count_nodal(1, BORDIGA_NODE)}")
    if plucker_dual(y) != branch:
        raise PipelineMismatch("double dual does not return the branch curve")
    # the dual of a plane curve in P^4 is a cone over its plane dual: the branch curve
    return YCurveReport(branch, y, (g, g2), nodes, cusps, branch.d, 10)


@dataclass
class SeveriDualReport:
    degree: int
    rh_left: int
    rh_right: int
    curve: SpaceCurveData
    hypersurface_total: int  # dual Severi plus the ten cones

    def to_json(self) -> dict:
        return {"degree": self.degree, "riemann_hurwitz": [self.rh_left, self.rh_right],
                "curve": {"degree": self.curve.degree, "genus": self.curve.geometric_genus,
                          "cusps": self.curve.cusp_count},
                "hypersurface_total": self.hypersurface_total,
                "boundary_bound": f"deg (X2_B)* + {self.degree}"}


def severi_dual_degree() -> SeveriDualReport:
    """Degree of the dual of the three-nodal Severi curve, via its tangent developable."""
    curve = SpaceCurveData(620, SEVERI_GEOM_GENUS, SEVERI_CUSPS)
    deg = tangent_developable_degree(curve)
    left, right = riemann_hurwitz_sides(curve, deg)
    if left != right:
        raise PipelineMismatch("Riemann-Hurwitz sides differ")
    return SeveriDualReport(deg, left, right, curve, deg + y_curve_pipeline().total_cone_degree)


# -- sums of squares of conics -------------------------------------------------------------------

def _conic_monomials():
    return [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def _as_point(p) -> tuple[Fraction, ...]:
    p = tuple(Fraction(x) for x in p)
    if len(p) == 2:
        p = (Fraction(1),) + p
    if len(p) != 3 or all(x == 0 for x in p):
        raise ValueError(f"bad plane point {p}")
    return p


def parse_points(text: str) -> list[tuple[Fraction, ...]]:
    """``"(-1,0);(0,-1)"`` -> affine points (1, -1, 0), (1, 0, -1); triples are projective."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("()")
        if chunk:
            out.append(_as_point([Fraction(v.strip()) for v in chunk.split(",")]))
    return out


def _eval_monomials(p) -> list[Fraction]:
    return [p[0] ** a * p[1] ** b * p[2] ** c for a, b, c in _conic_monomials()]


def conics_through(points: Sequence) -> list[Poly]:
    """Basis of the conics through the given points."""
    rows = [_eval_monomials(_as_point(p)) for p in points]
    basis = nullspace(rows, 6)
    return [Poly({m: c for m, c in zip(_conic_monomials(), v) if c}, P2) for v in basis]


def _same_point(p, q) -> bool:
    return all(p[i] * q[j] == p[j] * q[i] for i in range(3) for j in range(3))


def _collinear(ps) -> bool:
    return rank([list(p) for p in ps]) < 3


@dataclass
class ZeroSetCertificate:
    """Exact proof that the conics have exactly the listed complex common zeros."""

    change: list[list[Fraction]]  # coordinates y with x = change . y
    gcd_degree: int
    fibre_checks: list[int]  # degree of the common factor on each projection line
    holds: bool


def _transform(f: Poly, G) -> Poly:
    ys = Poly.gens(("y0", "y1", "y2"))
    sub = {P2[i]: sum((ys[k] * G[i][k] for k in range(3)), Poly.const(0, ys[0].vars)) for i in range(3)}
    return f.with_vars(P2).substitute(sub).with_vars(("y0", "y1", "y2"))


def _binary(f: Poly, a: str, b: str) -> list:
    """Dense coefficients in a/b of a binary form in (a, b), dehomogenized at b = 1."""
    return f.substitute({b: Poly.const(1, (a,))}).with_vars((a,)).univariate_coeffs(a)


def certify_common_zeros(conics: Sequence[Poly], points: Sequence, seed: int = 0, tries: int = 30) -> ZeroSetCertificate:
    """Check that the common complex zeros of the conics are exactly ``points``.

    In random coordinates y (x = G y), common zeros project from (0:0:1) to common roots of
    Res_y2(c1, c2) and Res_y2(c1, c3).  The gcd of these must vanish exactly at the
    projections of the points, and on each projection line the conics may share only
    the point itself.
    """
    pts = [_as_point(p) for p in points]
    rng = random.Random(seed)
    for _ in range(tries):
        G = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        if rank(G) < 3:
            continue
        from .algebra.matrix import inverse
        Gi = inverse(G)
        ypts = [[sum(Gi[i][k] * p[k] for k in range(3)) for i in range(3)] for p in pts]
        if any(y[1] == 0 for y in ypts):
            continue
        proj = [y[0] / y[1] for y in ypts]
        if len(set(proj)) != len(proj):
            continue
        cs = [_transform(c, G) for c in conics]
        if any(c.coefficient((0, 0, 2)) == 0 for c in cs):
            continue
        r = [resultant(cs[0], c, "y2") for c in cs[1:]]
        if any(x.is_zero() for x in r):
            return ZeroSetCertificate(G, -1, [], False)
        # full degree in y0 rules out a common zero projecting to (1:0)
        binaries = [_binary(x.with_vars(("y0", "y1")), "y0", "y1") for x in r]
        g = U.gcd(binaries[0], binaries[1])
        degs_ok = all(U.degree(b) == 4 for b in binaries)
        if not degs_ok:
            continue
        target = [Fraction(1)]
        for t in proj:
            target = U.mul(target, [-t, Fraction(1)])
        sq = U.monic(U.squarefree_part(g)) if U.degree(g) > 0 else [Fraction(1)]
        if U.trim(sq) != U.monic(target):
            return ZeroSetCertificate(G, U.degree(g), [], False)
        fibres = []
        ok = True
        for y in ypts:
            # line {y0 = t y1}: points (t s, s, w); restrict each conic to it
            t = y[0] / y[1]
            line = {"y0": Poly({(1, 0): t}, ("s", "w")), "y1": Poly({(1, 0): 1}, ("s", "w")),
                    "y2": Poly({(0, 1): 1}, ("s", "w"))}
            restricted = [_binary(c.substitute(line).with_vars(("s", "w")), "w", "s") for c in cs]
            h = restricted[0]
            for q in restricted[1:]:
                h = U.gcd(h, q)
            fibres.append(U.degree(h))
            ok = ok and U.degree(h) == 1
        return ZeroSetCertificate(G, U.degree(g), fibres, ok)
    raise RetryBudgetExhausted("no generic coordinates found")


@dataclass
class SosQuartic:
    conics: tuple[Poly, Poly, Poly]
    quartic: Poly
    prescribed_nodes: tuple[tuple[Fraction, ...], ...]
    certificate: ZeroSetCertificate | None = None

    def verify(self) -> bool:
        total = sum((c * c for c in self.conics), Poly.const(0, P2))
        if total != self.quartic:
            return False
        return all(c.evaluate(p) == 0 for c in self.conics for p in self.prescribed_nodes)

    def to_json(self) -> dict:
        return {
            "conics": [c.to_text() for c in self.conics],
            "quartic": self.quartic.to_text(),
            "nodes": [[str(x) for x in p] for p in self.prescribed_nodes],
            "zero_set_certified": bool(self.certificate and self.certificate.holds),
        }


def sos_quartic_with_nodes(points: Sequence, conics: Sequence[Poly] | None = None, seed: int = 0,
                           retries: int = 50) -> SosQuartic:
    """A nonnegative quartic c1^2 + c2^2 + c3^2 vanishing exactly at the given 2 or 3 points.

    Without ``conics``, the three conics are pseudo-random integer combinations from the
    linear system through the points, retried until the zero-set certificate holds.
    """
    pts = tuple(_as_point(p) for p in points)
    if len(pts) not in (2, 3):
        raise ValueError("need 2 or 3 points")
    if any(_same_point(p, q) for p, q in combinations(pts, 2)):
        raise ValueError("points must be distinct")
    if len(pts) == 3 and _collinear(pts):
        raise ValueError("three points must not be collinear")
    if conics is not None:
        cs = tuple(c.with_vars(P2) if isinstance(c, Poly) else Poly.parse(c, P2) for c in conics)
        q = SosQuartic(cs, sum((c * c for c in cs), Poly.const(0, P2)), pts)
        q.certificate = certify_common_zeros(cs, pts, seed)
        return q
    basis = conics_through(pts)
    rng = random.Random(seed)
    for _ in range(retries):
        cs = tuple(
            sum((b * rng.randint(-3, 3) for b in basis), Poly.const(0, P2)) for _ in range(3)
        )
        if any(c.is_zero() for c in cs):
            continue
        try:
            cert = certify_common_zeros(cs, pts, rng.randrange(1 << 30))
        except RetryBudgetExhausted:
            continue
        if cert.holds:
            return SosQuartic(cs, sum((c * c for c in cs), Poly.const(0, P2)), pts, cert)
    raise RetryBudgetExhausted("no certified choice of conics within the retry budget")


# -- common zeros of two quartics ------------------------------------------------------------------

@dataclass
class IntersectionReport:
    eliminants: dict[str, list]  # axis name -> dense eliminant after dehomogenizing x0 = 1
    degrees: dict[str, int]
    real_roots: dict[str, int]
    squarefree: dict[str, bool]
    total: int
    real: int
    conjugate_pairs: int

    def to_json(self) -> dict:
        return {"degrees": self.degrees, "real_roots": self.real_roots, "squarefree": self.squarefree,
                "total": self.total, "real": self.real, "conjugate_pairs": self.conjugate_pairs}


def _dehomogenize(f: Poly, keep: tuple[str, str]) -> Poly:
    return f.with_vars(P2).substitute({"x0": Poly.const(1, keep)}).with_vars(keep)


def base_points(q1: SosQuartic | Poly, q2: SosQuartic | Poly) -> IntersectionReport:
    """Common zeros of two plane quartics: eliminate each of x2 and x1, then count real roots."""
    f = q1.quartic if isinstance(q1, SosQuartic) else q1
    g = q2.quartic if isinstance(q2, SosQuartic) else q2
    f, g = f.with_vars(P2), g.with_vars(P2)
    # common points on the line x0 = 0 would escape the dehomogenized eliminants
    fi = f.substitute({"x0": Poly.const(0, ("x1", "x2"))}).with_vars(("x1", "x2"))
    gi = g.substitute({"x0": Poly.const(0, ("x1", "x2"))}).with_vars(("x1", "x2"))
    inf_common = U.degree(U.gcd(_binary(fi, "x1", "x2"), _binary(gi, "x1", "x2")))
    if fi.coefficient((4, 0)) == 0 and gi.coefficient((4, 0)) == 0:
        inf_common += 1  # the point (0:1:0)
    elim, degs, reals, sqf = {}, {}, {}, {}
    for axis, other in (("x1", "x2"), ("x2", "x1")):
        R = resultant(_dehomogenize(f, ("x1", "x2")), _dehomogenize(g, ("x1", "x2")), other)
        if R.is_zero():
            raise CommonComponent("the quartics share a component")
        e = R.with_vars((axis,)).univariate_coeffs(axis)
        elim[axis] = e
        degs[axis] = U.degree(e)
        reals[axis] = U.sturm_real_roots(e).count
        sqf[axis] = U.degree(U.gcd(e, U.derivative(e))) == 0
    total = degs["x1"] + max(inf_common, 0)
    real = min(reals.values())
    pairs = (total - real) // 2 if all(sqf.values()) else (degs["x1"] - reals["x1"]) // 2
    return IntersectionReport(elim, degs, reals, sqf, total, real, pairs)


def complex_base_points(q1: SosQuartic | Poly, q2: SosQuartic | Poly) -> list[np.ndarray]:
    """Floating-point common zeros (1, x1, x2), polished by Newton's method."""
    f = (q1.quartic if isinstance(q1, SosQuartic) else q1).with_vars(P2)
    g = (q2.quartic if isinstance(q2, SosQuartic) else q2).with_vars(P2)
    rep = base_points(f, g)
    e = rep.eliminants["x1"]
    f2 = _dehomogenize(f, ("x1", "x2"))
    g2 = _dehomogenize(g, ("x1", "x2"))
    fx1, fx2, gx1, gx2 = f2.diff("x1"), f2.diff("x2"), g2.diff("x1"), g2.diff("x2")
    out = []
    for x1 in np.roots([float(c) for c in reversed(e)]):
        cf = [complex(c.evaluate_float(np.array([[x1]], dtype=complex))[0]) for c in
              [c.with_vars(("x1",)) for c in f2.coeffs_in("x2")]]
        cands = np.roots(list(reversed(cf)))
        x2 = min(cands, key=lambda y: abs(g2.evaluate_float(np.array([[x1, y]], dtype=complex))[0]))
        z = np.array([x1, x2], dtype=complex)
        for _ in range(30):
            F = np.array([f2.evaluate_float(z[None, :])[0], g2.evaluate_float(z[None, :])[0]])
            J = np.array([[fx1.evaluate_float(z[None, :])[0], fx2.evaluate_float(z[None, :])[0]],
                          [gx1.evaluate_float(z[None, :])[0], gx2.evaluate_float(z[None, :])[0]]])
            d = np.linalg.solve(J, -F)
            z = z + d
            if np.linalg.norm(d) < 1e-15 * max(1, np.linalg.norm(z)):
                break
        out.append(np.array([1.0, z[0], z[1]], dtype=complex))
    return out


def conjugate_pairs(points: Sequence[np.ndarray], tol: float = 1e-8) -> list[tuple[np.ndarray, np.ndarray]]:
    """Group points with their complex conjugates (points with positive imaginary x1 first)."""
    used = set()
    pairs = []
    for i, p in enumerate(points):
        if i in used or abs(p[1].imag) < tol:
            continue
        j = min((k for k in range(len(points)) if k != i and k not in used),
                key=lambda k: np.linalg.norm(points[k] - p.conj()))
        if np.linalg.norm(points[j] - p.conj()) > 1e-6 * max(1, np.linalg.norm(p)):
            continue
        used.update((i, j))
        a, b = (p, points[j]) if p[1].imag > 0 else (points[j], p)
        pairs.append((a, b))
    return pairs


def _monomial_rows(points: Sequence[np.ndarray], d: int) -> np.ndarray:
    mons = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
    return np.array([[p[0] ** a * p[1] ** b * p[2] ** c for a, b, c in mons] for p in points], dtype=complex)


def _full_rank(M: np.ndarray, tol: float) -> bool:
    sv = np.linalg.svd(M, compute_uv=False)
    return sv[-1] > tol * sv[0]


def general_position(points: Sequence[np.ndarray], tol: float = 1e-8) -> dict[str, bool]:
    """Genericity of ten plane points: no 3 on a line, no 6 on a conic, not all on a cubic,
    and independent conditions on quartics."""
    pts = [np.asarray(p, dtype=complex) / np.linalg.norm(p) for p in points]
    out = {
        "no_three_collinear": all(_full_rank(_monomial_rows(s, 1), tol) for s in combinations(pts, 3)),
        "no_six_on_conic": all(_full_rank(_monomial_rows(s, 2), tol) for s in combinations(pts, 6)),
    }
    if len(pts) >= 10:
        out["not_on_cubic"] = _full_rank(_monomial_rows(pts[:10], 3), tol)
        out["independent_on_quartics"] = np.linalg.matrix_rank(_monomial_rows(pts, 4), tol) == len(pts)
    return out


def admissible_subsets(pairs: Sequence[tuple[np.ndarray, np.ndarray]], size: int = 5) -> list[tuple[int, ...]]:
    """Choices of ``size`` conjugate pairs whose ten points pass the genericity predicate."""
    out = []
    for idx in combinations(range(len(pairs)), size):
        pts = [p for k in idx for p in pairs[k]]
        if all(general_position(pts).values()):
            out.append(idx)
    return out


# -- which components can support the real surface -------------------------------------------------

@dataclass
class SupportCase:
    key: str
    component: str
    realizable: bool
    reason: str
    certificate: SosQuartic | None = None

    def to_json(self) -> dict:
        return {"case": self.key, "component": self.component, "realizable": self.realizable,
                "reason": self.reason,
                "certificate": self.certificate.to_json() if self.certificate else None}


CASES = ("X2_B", "X3_B", "X3_C", "X4_A", "X4_B", "X4_C")


def supporting_classification(case: str, f2: SosQuartic | None = None, f3: SosQuartic | None = None) -> SupportCase:
    """Whether hyperplanes from a hypersurface-dual component can support the real surface.

    Base points come in conjugate pairs, except that a base point where q_u is singular and
    which should be a real contact point must itself be real, which forces a second real base point.
    """
    if case == "X2_B":
        cert = f2 or sos_quartic_with_nodes([(1, -1, 0), (1, 0, -1)])
        return SupportCase(case, "two nodes off the base points", True,
                           "sum of three squares of conics through two real points", cert)
    if case == "X3_B":
        cert = f3 or sos_quartic_with_nodes([(1, 0, 0), (1, 1, 0), (1, 0, 1)])
        return SupportCase(case, "rational quartics", True,
                           "sum of three squares of conics through three real points", cert)
    if case == "X3_C":
        return SupportCase(case, "node at a base point plus one node", False,
                           "the real singular base point forces another real base point, where q_u is "
                           "smooth and so changes sign")
    if case == "X4_A":
        return SupportCase(case, "reducible quartics", False,
                           "two conics or a cubic and a line meet in more real points than the four nodes "
                           "allow; the real components cross and q_u changes sign")
    if case == "X4_B":
        return SupportCase(case, "node at a base point plus two nodes", False,
                           "as for a node at a base point plus one node: a second real base point is a "
                           "smooth point of q_u")
    if case == "X4_C":
        cert = sos_quartic_with_nodes([(1, 0, 0), (0, 1, 0)])
        return SupportCase(case, "nodes at two base points", True,
                           "only the quartic with nodes at the two real base points; it is a sum of squares "
                           "of conics through them", cert)
    raise ValueError(f"unknown case {case!r}; known: {CASES}")

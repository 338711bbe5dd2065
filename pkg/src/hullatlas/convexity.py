"""Floating-point sampling of real surfaces in P^n and hull tests.

This is the only non-exact layer.  Every verdict records how many samples
and attempts it rests on and the tolerances used; exact certificates from
the other modules take precedence whenever they exist.
"""

from __future__ import annotations

import csv
import enum
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .algebra.matrix import Signature, SymMatrix, signature_congruence
from .algebra.poly import Poly


@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-10  # on-variety test, relative
    dead_band: float = 1e-8  # sign band, relative
    rank: float = 1e-6  # singular-value threshold for contact dimension


class InsufficientSamples(RuntimeError):
    pass


class NotApplicable(ValueError):
    pass


class BoundarySelectionError(RuntimeError):
    def __init__(self, message: str, diagnostics: dict):
        super().__init__(message)
        self.diagnostics = diagnostics


# -- samplers -------------------------------------------------------------------------------

@dataclass
class SurfaceSampler:
    """Real points of a surface in P^n, reported in the affine chart {H.x = 1}.

    ``kind`` is ``complete_intersection`` (n - 2 quadrics, n = 3 or 4, given as
    symmetric float matrices) or ``parametrized`` (forms of a common degree in
    three variables).
    """

    kind: str
    chart: np.ndarray
    quadrics: list[np.ndarray] = field(default_factory=list)
    forms: list[Poly] = field(default_factory=list)
    seed: int = 0
    tol: Tolerances = field(default_factory=Tolerances)

    @classmethod
    def complete_intersection(cls, quadrics: Sequence, chart: Sequence, seed: int = 0, tol: Tolerances | None = None):
        qs = [m.to_float() if isinstance(m, SymMatrix) else np.asarray(m, dtype=float) for m in quadrics]
        n = qs[0].shape[0]
        if len(qs) != n - 3 or n not in (4, 5):
            raise ValueError("need one quadric in P^3 or two quadrics in P^4")
        return cls("complete_intersection", np.asarray(chart, dtype=float), qs, [], seed, tol or Tolerances())

    @classmethod
    def from_pencil(cls, pencil, chart: Sequence, seed: int = 0, tol: Tolerances | None = None):
        return cls.complete_intersection([pencil.V0, pencil.Vinf], chart, seed, tol)

    @classmethod
    def parametrized(cls, forms: Sequence[Poly], chart: Sequence, seed: int = 0, tol: Tolerances | None = None):
        return cls("parametrized", np.asarray(chart, dtype=float), [], list(forms), seed, tol or Tolerances())

    @property
    def ambient(self) -> int:
        return len(self.chart)

    def residual(self, x: np.ndarray) -> float:
        """Largest relative defect of the defining equations at a projective point."""
        x = np.asarray(x, dtype=float)
        x = x / np.linalg.norm(x)
        if self.kind == "complete_intersection":
            return max(abs(x @ Q @ x) / np.linalg.norm(Q, 2) for Q in self.quadrics)
        return 0.0  # parametrized samples lie on the surface by construction

    def to_affine(self, x: np.ndarray) -> np.ndarray:
        return x / (self.chart @ x)


@dataclass
class SampleReport:
    points: np.ndarray  # affine points, one per row, with chart . x = 1
    attempts: int
    requested: int
    at_infinity: int = 0

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def empty(self) -> bool:
        return self.count == 0


def _conic_coeffs(Q: np.ndarray, x: complex):
    # Q as a quadratic in y2 with y = (x, 1, y2)
    return (Q[2, 2], 2 * (Q[0, 2] * x + Q[1, 2]), Q[0, 0] * x * x + 2 * Q[0, 1] * x + Q[1, 1])


def _poly_conic(Q: np.ndarray):
    """Coefficients in y0 (numpy poly1d) of the y2-coefficients of y^T Q y at y1 = 1."""
    a2 = np.poly1d([Q[2, 2]])
    a1 = np.poly1d([2 * Q[0, 2], 2 * Q[1, 2]])
    a0 = np.poly1d([Q[0, 0], 2 * Q[0, 1], Q[1, 1]])
    return a2, a1, a0


def conic_intersections(Q1: np.ndarray, Q2: np.ndarray, imag_tol: float = 1e-7) -> list[np.ndarray]:
    """Real common zeros of two plane conics (3x3 symmetric), as unit vectors, polished by Newton."""
    a2, a1, a0 = _poly_conic(Q1)
    b2, b1, b0 = _poly_conic(Q2)
    # resultant of two quadratics in y2
    R = (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)
    coeffs = np.trim_zeros(R.coeffs, "f")
    if len(coeffs) < 2:
        return []
    scale = max(1.0, np.max(np.abs(np.roots(coeffs)))) if len(coeffs) > 1 else 1.0
    out = []
    for x in np.roots(coeffs):
        if abs(x.imag) > imag_tol * scale:
            continue
        x = x.real
        c1, c2 = _conic_coeffs(Q1, x), _conic_coeffs(Q2, x)
        cands = [r.real for r in np.roots(c1) if abs(r.imag) < 1e-6 * max(1, abs(r))] if abs(c1[0]) > 1e-14 else []
        if not cands and abs(c1[1]) > 1e-14:
            cands = [-c1[2] / c1[1]]
        if not cands:
            continue
        y2 = min(cands, key=lambda y: abs(c2[0] * y * y + c2[1] * y + c2[2]))
        y = _newton_plane(Q1, Q2, np.array([x, 1.0, y2]))
        out.append(y / np.linalg.norm(y))
    return out


def _newton_plane(Q1, Q2, y, steps: int = 8):
    """Newton iteration for y^T Q1 y = y^T Q2 y = 0 with y1 fixed to 1."""
    for _ in range(steps):
        F = np.array([y @ Q1 @ y, y @ Q2 @ y])
        J = np.array([2 * (Q1 @ y)[[0, 2]], 2 * (Q2 @ y)[[0, 2]]])
        try:
            d = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            break
        y = y + np.array([d[0], 0.0, d[1]])
        if np.linalg.norm(d) < 1e-15 * max(1.0, np.linalg.norm(y)):
            break
    return y


def _line_quadric(Q: np.ndarray, a: np.ndarray, b: np.ndarray) -> list[np.ndarray]:
    """Real points of the quadric Q on the line spanned by a and b."""
    c2, c1, c0 = a @ Q @ a, 2 * a @ Q @ b, b @ Q @ b
    out = []
    for s in np.roots([c2, c1, c0]) if abs(c2) > 1e-14 else []:
        if abs(s.imag) < 1e-9 * max(1, abs(s)):
            x = s.real * a + b
            out.append(x / np.linalg.norm(x))
    return out


def _ci_points_on(s: SurfaceSampler, basis: np.ndarray) -> list[np.ndarray]:
    """Real points of the complete intersection on the projective span of the columns of basis."""
    if s.ambient == 5:
        if basis.shape[1] != 3:
            raise ValueError("need a plane in P^4")
        Q1 = basis.T @ s.quadrics[0] @ basis
        Q2 = basis.T @ s.quadrics[1] @ basis
        return [basis @ y for y in conic_intersections(Q1, Q2)]
    if basis.shape[1] != 2:
        raise ValueError("need a line in P^3")
    return _line_quadric(s.quadrics[0], basis[:, 0], basis[:, 1])


def _rng(s: SurfaceSampler, salt: int = 0) -> np.random.Generator:
    return np.random.default_rng([s.seed, salt])


def _dedup(points: list[np.ndarray], decimals: int = 9) -> np.ndarray:
    if not points:
        return np.zeros((0, 0))
    keys = {}
    for p in points:
        keys.setdefault(tuple(np.round(p, decimals)), p)
    return np.array([keys[k] for k in sorted(keys)])


def sample(s: SurfaceSampler, n: int, budget_factor: int = 40) -> SampleReport:
    """At least n real points (if the real locus allows), within n * budget_factor attempts."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = _rng(s, 1)
    found: list[np.ndarray] = []
    attempts = 0
    at_inf = 0
    budget = n * budget_factor
    while len(found) < n and attempts < budget:
        attempts += 1
        if s.kind == "parametrized":
            t = rng.normal(size=3)
            x = np.array([float(v) for v in (f.evaluate_float(t[None, :])[0] for f in s.forms)])
            pts = [x / np.linalg.norm(x)]
        else:
            k = 3 if s.ambient == 5 else 2
            basis = np.linalg.qr(rng.normal(size=(s.ambient, k)))[0]
            pts = _ci_points_on(s, basis)
        for x in pts:
            if s.residual(x) > s.tol.residual:
                continue
            h = s.chart @ x
            if abs(h) < 1e-12:
                at_inf += 1
                continue
            found.append(s.to_affine(x))
    pts = _dedup(found)
    return SampleReport(pts, attempts, n, at_inf)


# -- supporting hyperplanes --------------------------------------------------------------------

class SupportStatus(enum.Enum):
    SUPPORTS = "Supports"
    STRICTLY_SEPARATES = "StrictlySeparates"
    CUTS = "Cuts"
    NO_REAL_CONTACT = "NoRealContact"


@dataclass
class SupportVerdict:
    status: SupportStatus
    positive: int
    negative: int
    near_zero: int
    side: int  # +1 or -1 for the closed side holding the samples, 0 when cut
    witnesses: list[np.ndarray]
    contact_points: list[np.ndarray]
    contact_dimension: int | None
    n_samples: int
    tolerance: float

    def to_json(self) -> dict:
        return {
            "status": self.status.value, "positive": self.positive, "negative": self.negative,
            "near_zero": self.near_zero, "side": self.side, "contact_dimension": self.contact_dimension,
            "n_samples": self.n_samples, "tolerance": self.tolerance,
        }


def contact_dimension(points: Sequence[np.ndarray], threshold: float = 1e-6, merge: float = 1e-6) -> int | None:
    """Affine dimension (capped at 2) spanned by contact points, by singular-value thresholding."""
    pts = _merge(points, merge)
    if not pts:
        return None
    if len(pts) == 1:
        return 0
    A = np.array(pts)
    A = A - A.mean(axis=0)
    sv = np.linalg.svd(A, compute_uv=False)
    scale = max(sv[0], 1e-300)
    if sv[0] < merge:
        return 0
    return min(2, int(np.sum(sv > threshold * scale)))


def _merge(points: Sequence[np.ndarray], tol: float) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for p in points:
        if all(np.linalg.norm(p - q) > tol * max(1.0, np.linalg.norm(q)) for q in out):
            out.append(np.asarray(p))
    return out


def _on_surface_minimize(s: SurfaceSampler, u: np.ndarray, side: int, start: np.ndarray):
    """Locally minimize side * u.x over the real surface in the affine chart, from a sample."""
    if s.kind == "parametrized":
        def point(t):
            x = np.array([f.evaluate_float(t[None, :])[0] for f in s.forms])
            return x / (s.chart @ x)

        # recover parameters of the start point by a least-squares fit in the projective sense
        best = None
        rng = _rng(s, 7)
        for _ in range(20):
            t0 = rng.normal(size=3)
            r = minimize(lambda t: np.sum((point(t) - start) ** 2), t0, method="BFGS")
            if best is None or r.fun < best.fun:
                best = r
            if r.fun < 1e-16:
                break
        r = minimize(lambda t: side * (u @ point(t)), best.x, method="BFGS")
        return point(r.x)
    n = s.ambient
    cons = [{"type": "eq", "fun": (lambda x, Q=Q: x @ Q @ x)} for Q in s.quadrics]
    cons.append({"type": "eq", "fun": lambda x: s.chart @ x - 1.0})
    r = minimize(lambda x: side * (u @ x), start, method="SLSQP", constraints=cons,
                 options={"maxiter": 200, "ftol": 1e-14})
    x = r.x
    if s.residual(x) > 1e-8 or abs(s.chart @ x - 1) > 1e-8:
        return None
    return x


def supports(s: SurfaceSampler, u: Sequence, samples: SampleReport | None = None, n: int = 400,
             min_samples: int = 10, starts: int = 6) -> SupportVerdict:
    """Classify the hyperplane u^perp against the real surface, as seen in the affine chart."""
    u = np.asarray(u, dtype=float)
    if samples is None:
        samples = sample(s, n)
    if samples.empty:
        return SupportVerdict(SupportStatus.NO_REAL_CONTACT, 0, 0, 0, 0, [], [], None, 0, s.tol.dead_band)
    if samples.count < min_samples:
        raise InsufficientSamples(f"only {samples.count} samples")
    X = samples.points
    vals = X @ u
    band = s.tol.dead_band * np.linalg.norm(u) * max(1.0, float(np.max(np.linalg.norm(X, axis=1))))
    pos, neg = int(np.sum(vals > band)), int(np.sum(vals < -band))
    near = [X[k] for k in np.nonzero(np.abs(vals) <= band)[0]]
    if pos and neg:
        w = [X[int(np.argmax(vals))], X[int(np.argmin(vals))]]
        return SupportVerdict(SupportStatus.CUTS, pos, neg, len(near), 0, w, near, None, samples.count, band)
    side = 1 if pos >= neg else -1
    # look for contact (or a hidden sign change) by local minimization from the closest samples
    order = np.argsort(side * vals)[:starts]
    contacts = list(near)
    for k in order:
        x = _on_surface_minimize(s, u, side, X[k])
        if x is None:
            continue
        v = side * (u @ x)
        if v < -band:
            w = [X[int(np.argmax(side * vals))], x]
            return SupportVerdict(SupportStatus.CUTS, pos + (side < 0), neg + (side > 0), len(near), 0, w,
                                  contacts, None, samples.count, band)
        if abs(v) <= band * 10:
            contacts.append(x)
    if contacts:
        dim = contact_dimension(contacts, s.tol.rank)
        return SupportVerdict(SupportStatus.SUPPORTS, pos, neg, len(near), side, contacts[:1], contacts, dim,
                              samples.count, band)
    return SupportVerdict(SupportStatus.STRICTLY_SEPARATES, pos, neg, 0, side, [], [], None, samples.count, band)


# -- curvature of quadric cones ------------------------------------------------------------------

def curvature_obstruction(sig: Signature) -> bool:
    """Whether a singular quadric of P^4 with this signature cannot bound a convex set.

    (2,2,1) cones are saddle-shaped in every chart; (3,1,1) cones are round.
    """
    s = sig.normalized()
    if s.as_tuple() == (2, 2, 1):
        return True
    if s.as_tuple() == (3, 1, 1):
        return False
    raise NotApplicable(f"signature {s} is not that of a real quadric cone with a point vertex")


def curvature_verdict(sig: Signature) -> str:
    try:
        return "obstructed" if curvature_obstruction(sig) else "not obstructed"
    except NotApplicable:
        return "not applicable"


# -- compact charts ------------------------------------------------------------------------------

@dataclass
class ChartVerdict:
    compact: bool
    method: str  # "exact" or "sampled"
    attempts: int
    witness: np.ndarray | None = None
    certificate: object | None = None

    def to_json(self) -> dict:
        return {
            "compact": self.compact, "method": self.method, "attempts": self.attempts,
            "witness": None if self.witness is None else [float(v) for v in self.witness],
        }


def _exact_parametrized_chart(forms: Sequence[Poly], H: Sequence) -> bool | None:
    """For quadratic parametrizations: H.F(t) definite means no real point at infinity."""
    from fractions import Fraction
    try:
        Hq = [Fraction(h) for h in H]
    except (TypeError, ValueError):
        return None
    if not all(f.is_form(2) for f in forms):
        return None
    g = sum((f * h for f, h in zip(forms, Hq)), Poly.const(0, forms[0].vars))
    sig = signature_congruence(SymMatrix.from_quadratic_form(g, forms[0].vars))
    return sig.zero == 0 and (sig.positive == 0 or sig.negative == 0)


def chart_compactness(s: SurfaceSampler, H: Sequence, attempts: int = 2000, pencil=None) -> ChartVerdict:
    """Is the real surface compact in the chart P^n - H?  Searches for real points on H.

    An exact certificate is used first when available: definiteness of the pulled-back
    form for quadratic parametrizations, or a semidefinite member of the pencil on H.
    """
    if s.kind == "parametrized":
        ex = _exact_parametrized_chart(s.forms, H)
        if ex:
            return ChartVerdict(True, "exact", 0)
    elif pencil is not None:
        from .delpezzo import certify_chart
        cert = certify_chart(pencil, H)
        if cert.valid:
            return ChartVerdict(True, "exact", 0, certificate=cert)
    Hf = np.asarray([float(h) for h in H])
    rng = _rng(s, 3)
    if s.kind == "parametrized":
        # real zeros of H.F on random lines of the parameter plane
        d = s.forms[0].degree()

        def g(t):
            return sum(h * f.evaluate_float(t[None, :])[0] for f, h in zip(s.forms, Hf))

        for k in range(1, attempts + 1):
            a, b = rng.normal(size=3), rng.normal(size=3)
            rs = np.arange(d + 1, dtype=float) - d / 2
            coeffs = np.polyfit(rs, [g(r * a + b) for r in rs], d)
            for r in np.roots(coeffs) if d > 0 else []:
                if abs(r.imag) < 1e-9 * max(1.0, abs(r)):
                    t = r.real * a + b
                    x = np.array([f.evaluate_float(t[None, :])[0] for f in s.forms])
                    return ChartVerdict(False, "sampled", k, witness=x / np.linalg.norm(x))
        return ChartVerdict(True, "sampled", attempts)
    basis_H = np.linalg.svd(Hf[None, :])[2][1:].T  # orthonormal basis of H
    k_dim = 3 if s.ambient == 5 else 2
    for k in range(1, attempts + 1):
        B = basis_H @ rng.normal(size=(basis_H.shape[1], k_dim))
        for x in _ci_points_on(s, np.linalg.qr(B)[0]):
            if s.residual(x) <= s.tol.residual:
                return ChartVerdict(False, "sampled", k, witness=x)
    return ChartVerdict(True, "sampled", attempts)


# -- boundary selection for Del Pezzo surfaces ----------------------------------------------------

def hull_samples(report: SampleReport, n: int, seed: int = 0, k: int = 4) -> np.ndarray:
    """Random convex combinations of k surface samples."""
    rng = np.random.default_rng([seed, 11])
    idx = rng.integers(0, report.count, size=(n, k))
    w = rng.dirichlet(np.ones(k), size=n)
    return np.einsum("nk,nkd->nd", w, report.points[idx])


@dataclass
class PairSelection:
    pair: tuple[int, int]
    labels: tuple[str, str]
    passing: list[tuple[int, int]]
    diagnostics: dict
    n_samples: int
    n_hull: int


def _sign_census(M: SymMatrix, pts: np.ndarray, band: float) -> tuple[int, int]:
    A = M.to_float()
    vals = np.einsum("ni,ij,nj->n", pts, A, pts) / np.linalg.norm(A, 2)
    scale = np.einsum("ni,ni->n", pts, pts)
    return int(np.sum(vals > band * scale)), int(np.sum(vals < -band * scale))


def boundary_pair_select(pencil, chart: Sequence, seed: int = 0, n: int = 600, n_hull: int = 3000,
                         members=None) -> PairSelection:
    """Choose the pair of (3,1,1) cones containing conv X(R) in the given chart.

    A cone bounds the hull only if it has constant sign on hull points; for D4 exactly
    one of the two admissible pairs passes.
    """
    from .delpezzo import candidate_boundary, classify_real_type, singular_members
    if members is None:
        members = singular_members(pencil)
    rtype = classify_real_type(members)
    pairs = candidate_boundary(pencil, members)
    s = SurfaceSampler.from_pencil(pencil, chart, seed)
    rep = sample(s, n)
    if rep.count < 20:
        raise InsufficientSamples(f"only {rep.count} samples in the chart")
    hull = hull_samples(rep, n_hull, seed)
    band = s.tol.dead_band
    diag = {}
    passing = []
    for a, b in pairs:
        ok = True
        for k in (a, b):
            pos, neg = _sign_census(members[k].oriented_matrix(), hull, band) if members[k].exact else \
                _float_census(members[k], pencil, hull, band)
            diag[members[k].label] = {"positive": pos, "negative": neg}
            ok = ok and (pos == 0 or neg == 0)
        if ok:
            passing.append((a, b))
    diag["real_type"] = rtype
    if len(passing) != 1:
        raise BoundarySelectionError(f"{len(passing)} candidate pairs have constant sign", diag)
    a, b = passing[0]
    return PairSelection((a, b), (members[a].label, members[b].label), passing, diag, rep.count, n_hull)


def _float_census(member, pencil, pts, band):
    lam, mu = member.param_approx
    A = lam * pencil.V0.to_float() + mu * pencil.Vinf.to_float()
    vals = np.einsum("ni,ij,nj->n", pts, A, pts) / np.linalg.norm(A, 2)
    scale = np.einsum("ni,ni->n", pts, pts)
    return int(np.sum(vals > band * scale)), int(np.sum(vals < -band * scale))


# -- planar slices for plots ----------------------------------------------------------------------

@dataclass
class SliceData:
    clouds: dict[str, np.ndarray]  # label -> points in section coordinates
    frame: np.ndarray  # origin and direction vectors of the section (rows)


def _section_frame(chart: np.ndarray, section: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Affine 3-space {chart.x = 1, section.x = 0}: origin and an orthonormal basis of directions."""
    A = np.vstack([chart, section])
    origin = np.linalg.lstsq(A, np.array([1.0, 0.0]), rcond=None)[0]
    dirs = np.linalg.svd(A)[2][2:]
    return origin, dirs


def slice_clouds(pencil, chart: Sequence, section: Sequence, labels: dict[str, SymMatrix] | None = None,
                 seed: int = 0, n_lines: int = 4000, extent: float | None = None) -> SliceData:
    """Point clouds of X and of candidate quadrics on a hyperplane section, in 3 affine coordinates.

    Points are found on random lines of the section: quadrics meet a line in 2 points, and
    X meets random planes of the section in finitely many points.
    """
    chart = np.asarray(chart, dtype=float)
    section = np.asarray(section, dtype=float)
    origin, dirs = _section_frame(chart, section)
    rng = np.random.default_rng([seed, 5])
    s = SurfaceSampler.from_pencil(pencil, chart, seed)
    surf = []
    N = np.linalg.svd(section[None, :])[2][1:].T  # the section hyperplane, projectively
    for _ in range(n_lines):
        B = np.linalg.qr(N @ rng.normal(size=(4, 3)))[0]
        Q1, Q2 = B.T @ s.quadrics[0] @ B, B.T @ s.quadrics[1] @ B
        for y in conic_intersections(Q1, Q2):
            x = B @ y
            if abs(chart @ x) > 1e-12 and s.residual(x) < s.tol.residual:
                surf.append(x / (chart @ x))
    if extent is None:
        extent = 2.0 * max((np.linalg.norm(p - origin) for p in surf), default=1.0)
    clouds = {"X": _coords(surf, origin, dirs)}
    for name, M in (labels or {}).items():
        A = M.to_float()
        pts = []
        for _ in range(n_lines):
            p = origin + dirs.T @ rng.uniform(-extent, extent, size=3)
            d = dirs.T @ rng.normal(size=3)
            c2, c1, c0 = d @ A @ d, 2 * d @ A @ p, p @ A @ p
            disc = c1 * c1 - 4 * c2 * c0
            if abs(c2) < 1e-14 or disc < 0:
                continue
            for r in ((-c1 + np.sqrt(disc)) / (2 * c2), (-c1 - np.sqrt(disc)) / (2 * c2)):
                x = p + r * d
                if np.linalg.norm(x - origin) <= extent:
                    pts.append(x)
        clouds[name] = _coords(pts, origin, dirs)
    return SliceData(clouds, np.vstack([origin, dirs]))


def _coords(points, origin, dirs) -> np.ndarray:
    if not points:
        return np.zeros((0, 3))
    return (np.array(points) - origin) @ dirs.T


def emit_slices(data: SliceData, path: str) -> int:
    """Write labeled slice clouds as CSV rows (label, c1, c2, c3); returns the row count."""
    rows = 0
    if all(len(v) == 0 for v in data.clouds.values()):
        warnings.warn("all slice clouds are empty")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "c1", "c2", "c3"])
        for label, pts in data.clouds.items():
            for p in pts:
                w.writerow([label] + [f"{v:.12g}" for v in p])
                rows += 1
    return rows

"""Projections of the Veronese surface from a point of P^5.

A point a of P^5 is written in the monomial coordinates
(t0^2, t0t1, t0t2, t1^2, t1t2, t2^2); it is identified with the symmetric
matrix A whose (i, j) entry is the coordinate of t_i t_j (off-diagonal
entries are *not* halved), so that points of the Veronese surface are
the rank-one matrices t t^T.  A quadratic form f in t pairs with A
through tr(A Gram(f)), where Gram halves the off-diagonal coefficients.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra.matrix import (
    Signature,
    SymMatrix,
    inverse,
    nullspace,
    rank,
    signature,
)
from .algebra.numbers import GaussianRational, as_rational
from .algebra.poly import Poly
from .algebra.resultant import bareiss_det, binary_form_discriminant, discriminant, resultant
from .algebra import univariate as up

T_VARS = ("t0", "t1", "t2")
S_VARS = ("s0", "s1")
X_VARS = ("x0", "x1", "x2", "x3", "x4")
MONOMIALS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))

# a conic is planar, so no hyperplane is tangent to the Veronese surface at four points
X4_EMPTY = True


class SingularCenter(ValueError):
    """The projection center has rank < 3; the projected surface is singular."""


class DegenerateCurve(ValueError):
    """The discriminant of the curve vanishes identically."""


def point_to_matrix(point: Sequence) -> SymMatrix:
    a = [as_rational(v) for v in point]
    if len(a) != 6:
        raise ValueError("a point of P^5 has 6 coordinates")
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for (i, j), v in zip(MONOMIALS, a):
        m[i][j] = m[j][i] = v
    return SymMatrix(m)


def matrix_to_point(A: SymMatrix) -> list[Fraction]:
    return [A[i, j] for i, j in MONOMIALS]


def form_to_vector(f: Poly) -> list[Fraction]:
    """Coefficients of a quadratic form in t on the monomial basis."""
    f = f.with_vars(T_VARS)
    if f and not f.is_form(2):
        raise ValueError("expected a quadratic form in t0, t1, t2")
    out = []
    for i, j in MONOMIALS:
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        out.append(f.coefficient(tuple(e)))
    return out


def vector_to_form(c: Sequence) -> Poly:
    terms = {}
    for (i, j), v in zip(MONOMIALS, c):
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        terms[tuple(e)] = v
    return Poly(terms, T_VARS)


def gram(f: Poly) -> SymMatrix:
    return SymMatrix.from_quadratic_form(f, T_VARS)


@dataclass(frozen=True)
class ProjectionCenter:
    A: SymMatrix
    chart_basis: tuple[Poly, ...] | None = None

    @classmethod
    def from_point(cls, point: Sequence, chart_basis: Sequence | None = None) -> "ProjectionCenter":
        return cls.build(point_to_matrix(point), chart_basis)

    @classmethod
    def build(cls, A: SymMatrix, chart_basis: Sequence | None = None) -> "ProjectionCenter":
        if A.n != 3:
            raise ValueError("center must be a 3x3 symmetric matrix")
        basis = None
        if chart_basis is not None:
            forms = []
            for f in chart_basis:
                if isinstance(f, Poly):
                    forms.append(f.with_vars(T_VARS))
                elif isinstance(f, str):
                    forms.append(Poly.parse(f, T_VARS))
                else:
                    forms.append(vector_to_form(f))
            basis = tuple(forms)
        center = cls(A, basis)
        center.validate()
        return center

    @property
    def point(self) -> list[Fraction]:
        return matrix_to_point(self.A)

    def validate(self):
        if self.chart_basis is None:
            return
        if len(self.chart_basis) != 5:
            raise ValueError("chart basis must have 5 forms")
        vecs = [form_to_vector(f) for f in self.chart_basis]
        if rank(vecs) != 5:
            raise ValueError("chart basis forms are linearly dependent")
        a = self.point
        for f, v in zip(self.chart_basis, vecs):
            if sum(x * y for x, y in zip(v, a)) != 0:
                raise ValueError(f"chart form {f} does not vanish at the center")

    def basis_vectors(self) -> list[list[Fraction]]:
        if self.chart_basis is not None:
            return [form_to_vector(f) for f in self.chart_basis]
        return nullspace([self.point])

    def forms(self) -> list[Poly]:
        return [vector_to_form(v) for v in self.basis_vectors()]

    def signature(self) -> Signature:
        return signature(self.A)


@dataclass(frozen=True)
class ParametrizedSurface:
    forms: tuple[Poly, ...]
    vars: tuple[str, ...] = T_VARS
    source_description: str = ""

    def __post_init__(self):
        degs = {f.degree() for f in self.forms}
        if len(degs) != 1 or not all(f.is_form() for f in self.forms):
            raise ValueError("surface forms must be homogeneous of one common degree")

    def pullback(self, g: Poly) -> Poly:
        names = tuple(f"x{i}" for i in range(len(self.forms)))
        return g.with_vars(names + tuple(v for v in g.vars if v not in names)).substitute(
            dict(zip(names, self.forms))
        )

    def base_locus_is_finite(self, seed: int = 0) -> bool:
        """Sufficient test: two random combinations of the forms have a nonzero resultant."""
        rng = random.Random(seed)
        for _ in range(4):
            g = [sum((f * rng.randint(-9, 9) for f in self.forms), Poly.const(0, self.vars)) for _ in range(2)]
            if g[0] and g[1] and resultant(g[0], g[1], self.vars[-1]):
                return True
        return False

    def evaluate_float(self, params: np.ndarray) -> np.ndarray:
        return np.stack([f.with_vars(self.vars).evaluate_float(params) for f in self.forms], axis=1)


@dataclass(frozen=True)
class ParametrizedCurve:
    forms: tuple[Poly, ...]
    vars: tuple[str, str] = S_VARS
    field: str = "Q"

    def __post_init__(self):
        degs = {f.degree() for f in self.forms if f}
        if len(degs) != 1 or not all(f.is_form() for f in self.forms):
            raise ValueError("curve forms must be binary forms of one common degree")

    @property
    def degree(self) -> int:
        return next(f.degree() for f in self.forms if f)


def project_veronese(center: ProjectionCenter) -> ParametrizedSurface:
    if center.A.rank() < 3:
        raise SingularCenter("smoothness of the projection requires a center of full rank")
    forms = tuple(center.chart_basis) if center.chart_basis is not None else tuple(center.forms())
    return ParametrizedSurface(forms, T_VARS, f"projection of the Veronese surface from {center.point}")


def verify_ideal(surface: ParametrizedSurface, generators: Sequence[Poly]) -> bool:
    return all(not surface.pullback(g) for g in generators)


class ConicType(enum.Enum):
    SMOOTH_CONIC = "smooth_conic"
    TWO_LINES = "two_lines"
    DOUBLE_LINE = "double_line"


def conic_of(B: SymMatrix) -> tuple[ConicType, Poly]:
    r = B.rank()
    if r == 0:
        raise ValueError("zero matrix defines no conic")
    kind = {3: ConicType.SMOOTH_CONIC, 2: ConicType.TWO_LINES, 1: ConicType.DOUBLE_LINE}[r]
    return kind, B.quadratic_form(T_VARS)


class HullType(enum.Enum):
    FULL_SPACE = "FullSpaceHull"
    BOUNDED = "BoundedHull"


def classify_center(A: SymMatrix) -> HullType:
    if A.rank() < 3:
        raise SingularCenter("center must have full rank")
    sig = signature(A).normalized()
    return HullType.FULL_SPACE if sig.as_tuple() == (3, 0, 0) else HullType.BOUNDED


# rational points and the curve of bitangent hyperplanes

def find_conic_point(A: SymMatrix, bound: int = 8, gaussian_bound: int = 2):
    """Small-height point on s^T A s = 0: first over Q, then over Q(i).

    Returns (point, field) or (None, None).
    """
    for h in range(1, bound + 1):
        for s in itertools.product(range(-h, h + 1), repeat=3):
            if max(abs(v) for v in s) != h:
                continue
            if next(v for v in s if v) < 0:
                continue
            if A.value(s) == 0:
                return [Fraction(v) for v in s], "Q"
    for h in range(1, gaussian_bound + 1):
        rng = range(-h, h + 1)
        gints = [GaussianRational(a, b) for a in rng for b in rng]
        for s in itertools.product(gints, repeat=3):
            if max(max(abs(v.re), abs(v.im)) for v in s) != h or all(v.is_real() for v in s):
                continue
            val = sum((s[i] * A[i, j] * s[j] for i in range(3) for j in range(3)), GaussianRational(0))
            if not val:
                return list(s), "Q(i)"
    return None, None


def _bilinear(A: SymMatrix, x, y):
    out = 0
    for i in range(3):
        for j in range(3):
            if A[i, j]:
                out = out + x[i] * A[i, j] * y[j]
    return out


def parametrize_conic(A: SymMatrix, p) -> list[Poly]:
    """Quadratic parametrization s(s0, s1) of the conic through the point p (lines through p)."""
    # complement of p spanned by two coordinate vectors
    idx = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        k = 3 - i - j
        if p[k]:
            idx = (i, j)
            break
    if idx is None:
        raise ValueError("zero point")
    s0, s1 = Poly.gens(S_VARS)
    v = [Poly.const(0, S_VARS)] * 3
    v = list(v)
    v[idx[0]] = s0
    v[idx[1]] = s1
    qv = _bilinear(A, v, v)
    bpv = _bilinear(A, [Poly.const(c, S_VARS) for c in p], v)
    return [qv * p[i] - bpv * 2 * v[i] for i in range(3)]


def _left_inverse(F_cols: list[list[Fraction]]):
    """Rows selection and inverse so that coords = Minv * c[rows] for c in the column span."""
    F = [list(r) for r in zip(*F_cols)]  # 6 x 5
    rows = []
    for i in range(6):
        if rank([F[r] for r in rows + [i]]) > len(rows):
            rows.append(i)
        if len(rows) == 5:
            break
    Minv = inverse([F[r] for r in rows])
    return rows, Minv


@dataclass
class X2Curve:
    """Bitangent-hyperplane curve of a projected Veronese surface."""

    quadrics: list[Poly]
    real_locus_empty: bool
    parametrization: ParametrizedCurve | None
    conic_point: list | None
    field: str | None

    @property
    def has_parametrization(self) -> bool:
        return self.parametrization is not None


def bitangent_quadrics(center: ProjectionCenter) -> list[Poly]:
    """2x2 minors of sum_k x_k Gram(form_k): the rank-one condition in the dual P^4."""
    xs = Poly.gens(X_VARS)
    grams = [gram(f) for f in (center.chart_basis or center.forms())]
    G = [[sum((xs[k] * grams[k][i, j] for k in range(5)), Poly.const(0, X_VARS)) for j in range(3)] for i in range(3)]
    out = []
    for r in itertools.combinations(range(3), 2):
        for c in itertools.combinations(range(3), 2):
            if r > c:
                continue
            m = G[r[0]][c[0]] * G[r[1]][c[1]] - G[r[0]][c[1]] * G[r[1]][c[0]]
            if m:
                out.append(m)
    return out


def x2_curve(center: ProjectionCenter, search_bound: int = 8) -> X2Curve:
    """The curve X_A^[2] in the dual P^4: image of the conic C_A = {s^T A s = 0} under s -> s s^T."""
    if center.A.rank() < 3:
        raise SingularCenter("center must have full rank")
    quadrics = bitangent_quadrics(center)
    empty = signature(center.A).normalized().as_tuple() == (3, 0, 0)
    p, fld = find_conic_point(center.A, search_bound)
    if p is None:
        return X2Curve(quadrics, empty, None, None, None)
    s = parametrize_conic(center.A, p)
    # hyperplane of P^5 given by s s^T, on the monomial basis
    c = []
    for i, j in MONOMIALS:
        c.append(s[i] * s[j] * (1 if i == j else 2))
    rows, Minv = _left_inverse(center.basis_vectors())
    u = [sum((c[r] * Minv[k][n] for n, r in enumerate(rows)), Poly.const(0, S_VARS)) for k in range(5)]
    curve = ParametrizedCurve(tuple(u), S_VARS, fld)
    return X2Curve(quadrics, empty, curve, p, fld)


# duals

def _squarefree_multivariate(f: Poly, seed: int = 0) -> Poly:
    rng = random.Random(seed)
    vars = f.used_vars()
    for _ in range(3):
        a = [Fraction(rng.randint(-20, 20)) for _ in vars]
        b = [Fraction(rng.randint(-20, 20)) for _ in vars]
        t = Poly.var("_t")
        line = {v: t * bi + ai for v, ai, bi in zip(vars, a, b)}
        g = f.with_vars(vars).substitute(line).univariate_coeffs("_t")
        if up.degree(g) == f.degree() and up.degree(up.gcd(g, up.derivative(g))) == 0:
            return f
    # restriction test inconclusive: fall back to a multivariate gcd
    import sympy
    syms = sympy.symbols(vars)
    expr = sympy.Poly(sympy.sympify(f.to_text().replace("^", "**"), locals=dict(zip(vars, syms))), *syms)
    sq = sympy.sqf_part(expr)
    return Poly.parse(str(sq.as_expr()).replace("**", "^"), f.vars)


def normalize_rational(f: Poly) -> Poly:
    """Scale a polynomial with Gaussian coefficients to a rational primitive one."""
    if not f:
        return f
    f = f.monic()
    if not f.is_rational():
        raise ValueError("polynomial is not a scalar multiple of a rational polynomial")
    return f.to_rational().primitive()


def dual_of_parametrized_curve(curve: ParametrizedCurve, names: Sequence[str] | None = None) -> Poly:
    """Dual hypersurface of a rational curve: discriminant of sum_k x_k form_k(s)."""
    m = len(curve.forms)
    names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(m))
    xs = Poly.gens(names)
    pencil = Poly.const(0, names + curve.vars)
    for x, f in zip(xs, curve.forms):
        pencil = pencil + x * f
    s0, s1 = curve.vars
    if not pencil.substitute({s1: 0}):
        # every form vanishes at [1:0]; dehomogenize the other way (disc is symmetric up to sign)
        s0, s1 = s1, s0
    disc = binary_form_discriminant(pencil, s0, s1)
    if not disc:
        raise DegenerateCurve("identically zero discriminant")
    return _squarefree_multivariate(normalize_rational(disc)).with_vars(names)


def dual_of_center(center: ProjectionCenter) -> Poly:
    """Boundary hypersurface via the cubic discriminant: disc_lambda det(Y(x) + lambda A).

    Y(x) is any lift of x in P^4 to a symmetric matrix on the fibre of the projection.
    """
    # x_k = F_k . y; Minv inverts F^T on the selected rows, so its transpose inverts
    # F on the selected columns and y (zero off those columns) is a lift of x
    rows, Minv = _left_inverse(center.basis_vectors())
    xs = Poly.gens(X_VARS)
    y = [Poly.const(0, X_VARS)] * 6
    for n, r in enumerate(rows):
        y[r] = sum((xs[k] * Minv[k][n] for k in range(5)), Poly.const(0, X_VARS))
    lam = Poly.var("lam", X_VARS)
    Y = [[None] * 3 for _ in range(3)]
    for (i, j), v in zip(MONOMIALS, y):
        Y[i][j] = Y[j][i] = v + lam * center.A[i, j]
    det = bareiss_det(Y)
    disc = discriminant(det, "lam")
    return normalize_rational(disc).with_vars(X_VARS)


def equal_up_to_scalar(f: Poly, g: Poly) -> bool:
    if not f or not g:
        return not f and not g
    vars = f.vars + tuple(v for v in g.vars if v not in f.vars)
    f, g = f.with_vars(vars), g.with_vars(vars)
    e, cf = f.leading_term()
    cg = g.coefficient(e)
    if not cg:
        return False
    return f * cg == g * cf


def tangent_hyperplane_points(curve: ParametrizedCurve, tau) -> list[list]:
    """Basis of hyperplanes containing the tangent line of the curve at s = (tau, 1).

    Points x with x . u(tau) = 0 and x . u'(tau) = 0 lie on the dual hypersurface.
    """
    s0, s1 = curve.vars
    u = [f.substitute({s0: tau, s1: 1}).constant_value() for f in curve.forms]
    du = [f.diff(s0).substitute({s0: tau, s1: 1}).constant_value() for f in curve.forms]
    return nullspace([u, du])


@dataclass
class FullHullWitness:
    lam: Fraction
    signature: Signature
    vectors: np.ndarray
    residual: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.signature.as_tuple() == (3, 0, 0) and self.residual < self.tolerance


class NotPositiveDefinite(ValueError):
    pass


def full_hull_witness(A: SymMatrix, M: SymMatrix, tolerance: float = 1e-9) -> FullHullWitness:
    """A rational lam with M + lam A positive definite, plus M + lam A = (1/3) sum v v^T in floats."""
    if signature(A).as_tuple() != (3, 0, 0):
        raise NotPositiveDefinite("A must be positive definite")
    lam = Fraction(1)
    while True:
        S = M + A.scale(lam)
        sig = signature(S)
        if sig.as_tuple() == (3, 0, 0):
            break
        lam *= 2
    Sf = S.to_float()
    w, Q = np.linalg.eigh(Sf)
    vecs = (Q * np.sqrt(3 * np.clip(w, 0, None))).T
    recon = sum(np.outer(v, v) for v in vecs) / 3
    scale = max(1.0, float(np.abs(Sf).max()))
    residual = float(np.abs(recon - Sf).max()) / scale
    return FullHullWitness(lam, sig, vecs, residual, tolerance)


def sos_verify(f: Poly, terms: Sequence[tuple[object, Poly]]) -> bool:
    total = Poly.const(0, f.vars)
    for c, g in terms:
        c = as_rational(c)
        if c < 0:
            return False
        total = total + g * g * c
    return total == f

"""Pencils of quadrics in P^4 and the convex hulls of their base surfaces.

A smooth complete intersection X of two quadrics in P^4 is a Del Pezzo
surface of degree 4.  Everything here is exact over Q except where a
singular member has an irrational parameter; those members are handled by
isolating intervals and sign evaluation at algebraic numbers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .algebra import univariate as U
from .algebra.matrix import (
    Signature,
    SymMatrix,
    charpoly,
    generalized_inverse,
    kernel_vector,
    nullspace,
    signature_congruence,
    signature_from_charpoly,
)
from .algebra.poly import Poly
from .algebra.resultant import resultant
from .counts import ChernInput, SurfaceSystem, chern_input, count_nodal

X_VARS = ("x0", "x1", "x2", "x3", "x4")
U_VARS = ("u0", "u1", "u2", "u3", "u4")

S311 = Signature(3, 1, 1)
S221 = Signature(2, 2, 1)
S410 = Signature(4, 1, 0)
S320 = Signature(3, 2, 0)

REAL_TYPES = {
    "Q31": (3, {S311: 2, S221: 1}),
    "Q22": (5, {S311: 2, S221: 3}),
    "D4": (5, {S311: 4, S221: 1}),
}
TOPOLOGY = {"Q31": "S^2", "Q22": "S^1 x S^1", "D4": "S^2 + S^2", "Unclassified": "?"}


class DegeneratePencil(ValueError):
    pass


class SingularSurface(ValueError):
    """The determinant quintic has a repeated root: the base surface is singular."""


class InconsistentPencil(ValueError):
    pass


class NoCompactChart(ValueError):
    pass


def _primitive_pair(a: Fraction, b: Fraction) -> tuple[int, int]:
    den = lcm(Fraction(a).denominator, Fraction(b).denominator)
    x, y = int(a * den), int(b * den)
    g = gcd(x, y) or 1
    x, y = x // g, y // g
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return x, y


def _vec_primitive(v):
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for k in ints:
        g = gcd(g, k)
    g = g or 1
    lead = next((k for k in ints if k), 1)
    if lead < 0:
        g = -g
    return [Fraction(k, g) for k in ints]


@dataclass(frozen=True)
class QuadricPencil:
    """The pencil lam*V0 + mu*Vinf of quadrics in P^4."""

    V0: SymMatrix
    Vinf: SymMatrix

    def __post_init__(self):
        if self.V0.n != 5 or self.Vinf.n != 5:
            raise ValueError("pencil matrices must be 5x5")

    @classmethod
    def from_forms(cls, f0: Poly | str, finf: Poly | str, vars: Sequence[str] = X_VARS) -> "QuadricPencil":
        if isinstance(f0, str):
            f0 = Poly.parse(f0, vars)
        if isinstance(finf, str):
            finf = Poly.parse(finf, vars)
        return cls(SymMatrix.from_quadratic_form(f0, vars), SymMatrix.from_quadratic_form(finf, vars))

    def member(self, lam, mu) -> SymMatrix:
        return self.V0.scale(lam) + self.Vinf.scale(mu)

    def forms(self, vars: Sequence[str] = X_VARS) -> tuple[Poly, Poly]:
        return self.V0.quadratic_form(vars), self.Vinf.quadratic_form(vars)

    def reparametrize(self, a, b, c, d) -> "QuadricPencil":
        """Pencil with generators a V0 + c Vinf and b V0 + d Vinf (same set of members)."""
        if Fraction(a) * Fraction(d) - Fraction(b) * Fraction(c) == 0:
            raise ValueError("reparametrization must be invertible")
        return QuadricPencil(self.member(a, c), self.member(b, d))

    def contains_point(self, x) -> bool:
        return self.V0.value(x) == 0 and self.Vinf.value(x) == 0

    def to_json(self) -> dict:
        return {"V0": self.V0.to_json(), "Vinf": self.Vinf.to_json()}


def pencil_determinant(p: QuadricPencil, lam: str = "lam", mu: str = "mu") -> Poly:
    """det(lam V0 + mu Vinf) as a binary quintic."""
    vars = (lam, mu)
    a = [p.V0[i, j] for i in range(5) for j in range(i, 5)]
    b = [p.Vinf[i, j] for i in range(5) for j in range(i, 5)]
    if all(a[k] * b[l] == a[l] * b[k] for k in range(len(a)) for l in range(k + 1, len(a))):
        raise DegeneratePencil("V0 and Vinf do not span a pencil")
    L, M = Poly.var(lam, vars), Poly.var(mu, vars)
    rows = [[L * p.V0[i, j] + M * p.Vinf[i, j] for j in range(5)] for i in range(5)]
    from .algebra.resultant import bareiss_det
    det = bareiss_det(rows)
    if not isinstance(det, Poly):
        det = Poly.const(det, vars)
    if det.is_zero():
        raise DegeneratePencil("det(lam V0 + mu Vinf) vanishes identically")
    return det.with_vars(vars)


@dataclass(frozen=True)
class AffineChart:
    """[lam:mu] = t*(p, q) + (r, s); t = infinity is the non-singular member (p, q)."""

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def pair(self, t) -> tuple:
        return (t * self.p + self.r, t * self.q + self.s)


def _choose_chart(det: Poly) -> AffineChart:
    cands = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1), (1, 3), (3, 1)]
    k = 4
    while True:
        for a, b in cands:
            if det.evaluate([a, b]) != 0:
                r, s = (0, 1) if a != 0 else (1, 0)
                return AffineChart(Fraction(a), Fraction(b), Fraction(r), Fraction(s))
        cands = [(1, k), (k, 1), (1, -k), (k, -1)]
        k += 1


@dataclass
class SingularMember:
    """A singular member of the pencil; exact when its parameter is rational."""

    t_interval: U.RootInterval
    param: tuple[int, int] | None  # primitive integer [lam:mu] when rational
    param_approx: tuple[float, float]
    signature: Signature  # as computed, not normalized
    matrix: SymMatrix | None
    vertex: list | None  # exact kernel vector, or floats for irrational members
    label: str = ""

    @property
    def exact(self) -> bool:
        return self.param is not None

    @property
    def normalized_signature(self) -> Signature:
        return self.signature.normalized()

    def oriented_matrix(self) -> SymMatrix:
        """The member scaled so that it has at least as many positive as negative eigenvalues."""
        if self.matrix is None:
            raise ValueError("irrational member has no exact matrix")
        if self.signature.negative > self.signature.positive:
            return -self.matrix
        return self.matrix

    def to_json(self) -> dict:
        out = {
            "label": self.label,
            "param": list(self.param) if self.param else None,
            "param_approx": list(self.param_approx),
            "signature": str(self.normalized_signature),
            "exact": self.exact,
        }
        if self.vertex is not None:
            out["vertex"] = [str(x) if isinstance(x, Fraction) else float(x) for x in self.vertex]
        return out


def _pencil_in_t(p: QuadricPencil, chart: AffineChart):
    """Matrix entries as dense univariate polynomials in t."""
    return [
        [U.trim([chart.r * p.V0[i, j] + chart.s * p.Vinf[i, j], chart.p * p.V0[i, j] + chart.q * p.Vinf[i, j]])
         for j in range(5)]
        for i in range(5)
    ]


def _quintic_in_t(det: Poly, chart: AffineChart) -> list:
    t = Poly.var("t", ("t",))
    lam = t * chart.p + chart.r
    mu = t * chart.q + chart.s
    sub = det.substitute({det.vars[0]: lam, det.vars[1]: mu})
    return sub.with_vars(("t",)).univariate_coeffs("t")


def _charpoly_in_t(p: QuadricPencil, chart: AffineChart) -> list[list]:
    """Coefficients of det(zI - M(t)), each a dense polynomial in t."""
    tv = ("t",)
    rows = [[Poly.from_univariate(c, "t").with_vars(tv) for c in row] for row in _pencil_in_t(p, chart)]
    cp = charpoly(rows)
    return [c.univariate_coeffs("t") if isinstance(c, Poly) else [Fraction(c)] for c in cp]


def _numeric_vertex(M: np.ndarray) -> list[float]:
    _, _, vt = np.linalg.svd(M)
    v = vt[-1]
    k = int(np.argmax(np.abs(v)))
    return list(v / v[k])


def singular_members(p: QuadricPencil) -> list[SingularMember]:
    """Real singular members, in ascending order of the affine parameter of a fixed chart."""
    det = pencil_determinant(p)
    chart = _choose_chart(det)
    quintic = _quintic_in_t(det, chart)
    if U.degree(quintic) != 5:
        raise DegeneratePencil(f"determinant has degree {U.degree(quintic)} in the chart")
    if U.degree(U.gcd(quintic, U.derivative(quintic))) > 0:
        raise SingularSurface("the determinant quintic has a repeated root; the surface is singular")
    roots = U.sturm_real_roots(quintic)
    cp = None
    out = []
    for iv in roots.intervals:
        rational = None
        if iv.exact:
            rational = iv.lo
        else:
            rr = [r for r in U.rational_roots(quintic) if iv.lo < r <= iv.hi]
            if rr:
                rational = rr[0]
                iv = U.RootInterval(rational, rational, 1)
        if rational is not None:
            lam, mu = chart.pair(rational)
            M = p.member(lam, mu)
            sig = signature_congruence(M)
            member = SingularMember(iv, _primitive_pair(lam, mu), (float(lam), float(mu)), sig, M, kernel_vector(M))
        else:
            if cp is None:
                cp = _charpoly_in_t(p, chart)
            signs = [U.sign_at_root(c, quintic, iv) for c in cp]
            sig = signature_from_charpoly(signs)
            fine = U.refine(quintic, iv, Fraction(1, 10**12))
            tm = fine.midpoint()
            lam, mu = chart.pair(tm)
            Mf = p.member(lam, mu).to_float()
            member = SingularMember(fine, None, (float(lam), float(mu)), sig, None, _numeric_vertex(Mf))
        out.append(member)
    for k, m in enumerate(out, start=1):
        m.label = f"V{k}"
    return out


def complex_member_count(p: QuadricPencil) -> int:
    det = pencil_determinant(p)
    return 5 - U.sturm_real_roots(_quintic_in_t(det, _choose_chart(det))).count


def signature_multiset(members: Sequence[SingularMember]) -> dict[Signature, int]:
    out: dict[Signature, int] = {}
    for m in members:
        s = m.normalized_signature
        out[s] = out.get(s, 0) + 1
    return out


def classify_real_type(members: Sequence[SingularMember]) -> str:
    ms = signature_multiset(members)
    for name, (count, expected) in REAL_TYPES.items():
        if len(members) == count and ms == expected:
            return name
    return "Unclassified"


def _separating_rational(a: U.RootInterval, b: U.RootInterval, quintic) -> Fraction:
    """A rational strictly between the roots isolated by a < b that is not a root."""
    while True:
        lo, hi = a.hi, b.lo
        if lo < hi:
            m = (lo + hi) / 2
            if U.evaluate(quintic, m) != 0:
                return m
        if not a.exact:
            a = U.refine(quintic, a, (a.hi - a.lo) / 2)
        if not b.exact:
            b = U.refine(quintic, b, (b.hi - b.lo) / 2)
        if a.exact and b.exact and a.lo >= b.lo:
            raise InconsistentPencil("roots are not separated")


def arc_samples(p: QuadricPencil, members: Sequence[SingularMember]) -> list[tuple[int, int]]:
    """A rational member inside each arc of P^1(R) between cyclically consecutive singular members.

    Entry k lies between member k and member k+1 (the last one wraps through infinity).
    """
    det = pencil_determinant(p)
    chart = _choose_chart(det)
    quintic = _quintic_in_t(det, chart)
    out = []
    n = len(members)
    for k in range(n):
        a, b = members[k].t_interval, members[(k + 1) % n].t_interval
        if k + 1 < n:
            t = _separating_rational(a, b, quintic)
            out.append(_primitive_pair(*chart.pair(t)))
        else:
            # the arc through t = infinity contains the chart's generic member
            out.append(_primitive_pair(chart.p, chart.q))
    return out


def arc_signatures(p: QuadricPencil, members: Sequence[SingularMember]) -> list[Signature]:
    return [signature_congruence(p.member(*pair)).normalized() for pair in arc_samples(p, members)]


def sign_matrix(members: Sequence[SingularMember]) -> list[list[int | None]]:
    """Entry (i, j): sign of the oriented member j at the vertex of member i."""
    out = []
    for mi in members:
        row = []
        for mj in members:
            if mi is mj:
                row.append(None)
                continue
            if mj.matrix is not None and mi.vertex is not None and mi.exact:
                val = mj.oriented_matrix().value(mi.vertex)
                row.append(U.sign(val))
            else:
                raise ValueError("sign matrix needs exact members")
        out.append(row)
    return out


@dataclass
class AdmissiblePairs:
    pairs: list[tuple[int, int]]  # indices into the member list
    arcs: list[Signature]
    signs: list[list[int | None]] | None  # restricted to the (3,1,1) members
    sign_labels: list[str]


def d4_admissible_pairs(p: QuadricPencil, members: Sequence[SingularMember] | None = None) -> AdmissiblePairs:
    """The two pairs of cyclically consecutive (3,1,1) members separated by a (4,1,0) arc."""
    if members is None:
        members = singular_members(p)
    if classify_real_type(members) != "D4":
        raise ValueError("admissible pairs are defined for pencils of type D4")
    arcs = arc_signatures(p, members)
    for s in arcs:
        if s not in (S410, S320):
            raise InconsistentPencil(f"arc signature {s} is neither (4,1,0) nor (3,2,0)")
    n = len(members)
    pairs = []
    for k in range(n):
        a, b = k, (k + 1) % n
        if members[a].normalized_signature == S311 and members[b].normalized_signature == S311 and arcs[k] == S410:
            pairs.append(tuple(sorted((a, b))))
    if len(pairs) != 2 or set(pairs[0]) & set(pairs[1]):
        raise InconsistentPencil(f"expected two disjoint admissible pairs, found {pairs}")
    cones = [k for k, m in enumerate(members) if m.normalized_signature == S311]
    signs = None
    if all(members[k].exact for k in cones):
        signs = sign_matrix([members[k] for k in cones])
        pos = {k: i for i, k in enumerate(cones)}
        for a, b in pairs:
            # each cone of a pair is nonnegative at the vertex of its partner
            if signs[pos[a]][pos[b]] != 1 or signs[pos[b]][pos[a]] != 1:
                raise InconsistentPencil(f"sign matrix contradicts pair {(a, b)}")
    return AdmissiblePairs(pairs, arcs, signs, [members[k].label for k in cones])


def candidate_boundary(p: QuadricPencil, members: Sequence[SingularMember] | None = None) -> list[tuple[int, int]]:
    """Pairs of (3,1,1) members that may bound the hull: unique for Q31/Q22, two choices for D4."""
    if members is None:
        members = singular_members(p)
    rtype = classify_real_type(members)
    if rtype == "D4":
        return d4_admissible_pairs(p, members).pairs
    if rtype in ("Q31", "Q22"):
        cones = [k for k, m in enumerate(members) if m.normalized_signature == S311]
        return [tuple(cones)]
    raise ValueError(f"no boundary candidates for real type {rtype}")


# -- dual quadrics and X^[4] --------------------------------------------------------------------

@dataclass(frozen=True)
class DualQuadric:
    """Y = {u : u.p = 0, u^T M+ u = 0}, the hyperplanes tangent to the cone M with vertex p."""

    vertex: tuple[Fraction, ...]
    inverse: SymMatrix

    def linear(self, vars: Sequence[str] = U_VARS) -> Poly:
        return Poly.linear(self.vertex, vars)

    def quadric(self, vars: Sequence[str] = U_VARS) -> Poly:
        return self.inverse.quadratic_form(vars)

    def contains(self, u) -> bool:
        return sum(a * b for a, b in zip(self.vertex, u)) == 0 and self.inverse.value(u) == 0


def dual_quadric(m: SingularMember | SymMatrix) -> DualQuadric:
    M = m.matrix if isinstance(m, SingularMember) else m
    if M is None:
        raise ValueError("dual quadric needs an exact member")
    v = kernel_vector(M)  # raises CorankError for corank >= 2
    if v is None:
        raise ValueError("member is nonsingular")
    return DualQuadric(tuple(v), generalized_inverse(M))


@dataclass
class X4Group:
    pair: tuple[int, int]
    points: list[np.ndarray]  # complex points of (P^4)*, normalized
    real: list[bool]
    multiplicities: list[int]
    exact: bool
    eliminant: list | None = None  # binary quartic, dehomogenized


@dataclass
class X4Report:
    groups: list[X4Group]
    total: int
    disjoint: bool
    disjoint_certified: bool

    @property
    def real_points(self) -> list[np.ndarray]:
        return [pt.real for g in self.groups for pt, r in zip(g.points, g.real) if r]


def _random_unimodular(rng: random.Random, n: int = 3):
    while True:
        G = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        from .algebra.matrix import rank
        if rank(G) == n:
            return G


def _restrict(M: SymMatrix, B) -> list[list[Fraction]]:
    """B^T M B for a 5 x k basis B."""
    k = len(B[0])
    return [[sum(B[a][i] * M[a, b] * B[b][j] for a in range(5) for b in range(5)) for j in range(k)] for i in range(k)]


def _conic_poly(C, vars=("y0", "y1", "y2")) -> Poly:
    return Poly.quadratic_form(C, vars)


def _solve_conics_numeric(C1: Poly, C2: Poly, quartic: list) -> list[np.ndarray]:
    """Complex common zeros (y0, 1, y2) of two conics, from the roots of their y2-eliminant."""
    coeffs = [float(c) for c in reversed(quartic)]
    pts = []
    for x in np.roots(coeffs):
        c2 = C1.coeffs_in("y2")
        a = [complex(c.evaluate([x, 1])) for c in c2]
        a = a + [0] * (3 - len(a))
        cand = np.roots([a[2], a[1], a[0]]) if abs(a[2]) > 1e-14 else np.array([-a[0] / a[1]])
        best = min(cand, key=lambda y: abs(complex(C2.evaluate_float(np.array([[x, 1, y]], dtype=complex))[0])))
        pts.append(np.array([x, 1.0, best], dtype=complex))
    return pts


def _distinct(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    sv = np.linalg.svd(np.vstack([a, b]), compute_uv=False)
    return sv[1] > tol * sv[0]


def _conics_meet_on_line(conics: Sequence[Poly], lin: Sequence[Fraction]) -> bool:
    """Whether the conics have a common zero on the line lin . y = 0 of P^2 (exact)."""
    w = nullspace([list(lin)], 3)
    if len(w) != 2:
        raise ValueError("degenerate line")
    vars = ("y0", "y1", "y2")
    a = Poly.var("a", ("a",))
    line = {v: a * w[0][c] + w[1][c] for c, v in enumerate(vars)}
    g = None
    for C in conics:
        f = C.substitute(line).with_vars(("a",)).univariate_coeffs("a")
        g = f if g is None else U.gcd(g, f)
    if not g or U.degree(g) > 0:
        return True
    # the point a = infinity of the line
    return all(C.evaluate(w[0]) == 0 for C in conics)


def _normalize_projective(v: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(v)))
    return v / v[k]


def x4_points(p: QuadricPencil, members: Sequence[SingularMember] | None = None, seed: int = 0) -> X4Report:
    """The 40 points of X^[4]: Y_i meet Y_j in 4 points for each of the 10 pairs of singular members.

    Requires all five singular members to be rational (real); each pair is solved exactly by
    restricting to the plane {u.p_i = u.p_j = 0} and eliminating between two conics.
    """
    if members is None:
        members = singular_members(p)
    if len(members) != 5 or not all(m.exact for m in members):
        return _x4_numeric(p, seed)
    duals = [dual_quadric(m) for m in members]
    rng = random.Random(seed)
    groups = []
    certified = True
    for i, j in combinations(range(5), 2):
        basis = nullspace([list(duals[i].vertex), list(duals[j].vertex)], 5)
        B = [[basis[c][r] for c in range(3)] for r in range(5)]
        for _attempt in range(20):
            G = _random_unimodular(rng)
            BG = [[sum(B[r][k] * G[k][c] for k in range(3)) for c in range(3)] for r in range(5)]
            C1 = _conic_poly(_restrict(duals[i].inverse, BG))
            C2 = _conic_poly(_restrict(duals[j].inverse, BG))
            if C1.degree("y2") < 2 or C2.degree("y2") < 2:
                continue
            R = resultant(C1, C2, "y2")
            if R.is_zero():
                raise InconsistentPencil(f"Y_{i + 1} and Y_{j + 1} share a component")
            quartic = R.substitute({"y1": Poly.const(1, ("y0",))}).with_vars(("y0",)).univariate_coeffs("y0")
            if U.degree(quartic) != 4 or U.degree(U.gcd(quartic, U.derivative(quartic))) > 0:
                continue
            break
        else:
            raise InconsistentPencil(f"no generic projection found for pair {(i + 1, j + 1)}")
        nreal = U.sturm_real_roots(quartic).count
        pts_plane = _solve_conics_numeric(C1, C2, quartic)
        BGf = np.array([[float(x) for x in r] for r in BG])
        pts = [_normalize_projective(BGf @ y) for y in pts_plane]
        real = sorted(range(4), key=lambda k: abs(pts_plane[k][0].imag))
        flags = [False] * 4
        for k in real[:nreal]:
            flags[k] = True
        pts = [pt.real.astype(complex) if f else pt for pt, f in zip(pts, flags)]
        # no third dual quadric passes through this group
        for k in range(5):
            if k in (i, j):
                continue
            lin = [sum(duals[k].vertex[r] * BG[r][c] for r in range(5)) for c in range(3)]
            Ck = _conic_poly(_restrict(duals[k].inverse, BG))
            if _conics_meet_on_line([C1, C2, Ck], lin):
                certified = False
        groups.append(X4Group((i, j), pts, flags, [1] * 4, True, quartic))
    allpts = [pt for g in groups for pt in g.points]
    disjoint = all(_distinct(a, b) for a, b in combinations(allpts, 2))
    return X4Report(groups, len(allpts), disjoint and certified, certified)


def _x4_numeric(p: QuadricPencil, seed: int) -> X4Report:
    """Floating-point fallback for pencils with irrational or complex singular members."""
    V0, V1 = p.V0.to_float(), p.Vinf.to_float()
    ev = np.linalg.eigvals(np.linalg.solve(V1, -V0)) if abs(np.linalg.det(V1)) > 1e-12 else None
    if ev is None:
        raise InconsistentPencil("numeric fallback needs an invertible Vinf")
    cones = []
    for lam_over in ev:
        M = lam_over * V1 + V0  # det(V0 + t V1) = 0
        _, _, vt = np.linalg.svd(M)
        vert = vt[-1].conj()
        Mp = np.linalg.pinv(M)
        cones.append((vert, Mp))
    groups = []
    rng = np.random.default_rng(seed)
    for i, j in combinations(range(5), 2):
        A = np.vstack([cones[i][0], cones[j][0]])
        _, _, vt = np.linalg.svd(A)
        B = vt[2:].T.conj()
        Q1 = B.T @ cones[i][1] @ B
        Q2 = B.T @ cones[j][1] @ B
        pts = _intersect_conics_complex(Q1, Q2, rng)
        pts = [_normalize_projective(B @ y) for y in pts]
        real = [bool(np.max(np.abs(pt.imag)) < 1e-7) for pt in pts]
        groups.append(X4Group((i, j), pts, real, [1] * len(pts), False))
    allpts = [pt for g in groups for pt in g.points]
    disjoint = all(_distinct(a, b) for a, b in combinations(allpts, 2))
    return X4Report(groups, len(allpts), disjoint, False)


def _intersect_conics_complex(Q1, Q2, rng) -> list[np.ndarray]:
    # common zeros via the singular members of the conic pencil Q1 + t Q2
    pts = []
    G = rng.normal(size=(3, 3))
    A, Bm = G.T @ Q1 @ G, G.T @ Q2 @ G

    def cf(Q, x):
        return [Q[2, 2], 2 * (Q[0, 2] * x + Q[1, 2]), Q[0, 0] * x * x + 2 * Q[0, 1] * x + Q[1, 1]]

    # resultant in y2 sampled at 9 points and interpolated as a quartic in y0
    xs = np.linspace(-2, 2, 9)
    vals = []
    for x in xs:
        a, b = cf(A, x), cf(Bm, x)
        S = np.array([[a[0], a[1], a[2], 0], [0, a[0], a[1], a[2]], [b[0], b[1], b[2], 0], [0, b[0], b[1], b[2]]])
        vals.append(np.linalg.det(S))
    coef = np.polyfit(xs, np.array(vals), 4)
    for x in np.roots(coef):
        a, b = cf(A, x), cf(Bm, x)
        cand = np.roots(a)
        y = min(cand, key=lambda y: abs(b[0] * y * y + b[1] * y + b[2]))
        pts.append(G @ np.array([x, 1, y]))
    return pts


# -- compact charts --------------------------------------------------------------------------

@dataclass
class ChartCertificate:
    """Exact proof that the hyperplane H misses X(R): some member Q is semidefinite on H
    and vanishes on H only at a point that is not on X (or nowhere)."""

    hyperplane: tuple[Fraction, ...]
    member: tuple[int, int] | None
    restricted_signature: Signature | None
    contact: list[Fraction] | None

    @property
    def valid(self) -> bool:
        return self.member is not None

    def to_json(self) -> dict:
        return {
            "hyperplane": [str(x) for x in self.hyperplane],
            "member": list(self.member) if self.member else None,
            "restricted_signature": str(self.restricted_signature) if self.restricted_signature else None,
            "contact": [str(x) for x in self.contact] if self.contact else None,
            "valid": self.valid,
        }


def _candidate_members(p: QuadricPencil, members) -> list[tuple[int, int]]:
    cands = [m.param for m in members if m.exact]
    cands += arc_samples(p, members)
    return cands


def certify_chart(p: QuadricPencil, H: Sequence, members: Sequence[SingularMember] | None = None) -> ChartCertificate:
    """Try to prove X(R) does not meet H exactly, using members of the pencil restricted to H."""
    H = tuple(Fraction(x) for x in H)
    if members is None:
        members = singular_members(p)
    basis = nullspace([list(H)], 5)
    B = [[basis[c][r] for c in range(4)] for r in range(5)]
    for pair in _candidate_members(p, members):
        R = SymMatrix(_restrict(p.member(*pair), B))
        sig = signature_congruence(R)
        if sig.zero == 0 and (sig.positive == 4 or sig.negative == 4):
            return ChartCertificate(H, pair, sig, None)
        if sig.zero == 1 and (sig.positive == 3 or sig.negative == 3):
            k = kernel_vector(R)
            q = [sum(B[r][c] * k[c] for c in range(4)) for r in range(5)]
            if not p.contains_point(q):
                return ChartCertificate(H, pair, sig, _vec_primitive(q))
    return ChartCertificate(H, None, None, None)


def compact_chart(p: QuadricPencil, members: Sequence[SingularMember] | None = None) -> ChartCertificate:
    """A hyperplane H with X(R) inside the affine chart P^4 - H, from a (3,1,1) member.

    With V = sum D_k y_k^2 diagonalized (three positive, one negative, one zero entry),
    H = {y_neg = 0} makes V positive semidefinite with kernel the vertex only.
    """
    from .algebra.matrix import congruence_diagonalize, inverse
    if members is None:
        members = singular_members(p)
    cones = [m for m in members if m.normalized_signature == S311]
    if not cones:
        raise NoCompactChart("no singular member of signature (3,1,1)")
    for m in cones:
        if not m.exact:
            continue
        V = m.oriented_matrix()
        T, D = congruence_diagonalize(V)
        j = next(k for k, d in enumerate(D) if d < 0)
        H = _vec_primitive(inverse(T)[j])
        cert = certify_chart(p, H, members)
        if cert.valid:
            return cert
    # irrational cones: any (4,1,0) member's negative direction also works
    for pair, sig in zip(arc_samples(p, members), arc_signatures(p, members)):
        if sig != S410:
            continue
        V = p.member(*pair)
        if signature_congruence(V).negative > 1:
            V = -V
        T, D = congruence_diagonalize(V)
        j = next(k for k, d in enumerate(D) if d < 0)
        cert = certify_chart(p, _vec_primitive(inverse(T)[j]), members)
        if cert.valid:
            return cert
    raise NoCompactChart("no certified chart found")


# -- census of the varieties X^[k] ------------------------------------------------------------

DEL_PEZZO = SurfaceSystem.parse("delpezzo")
DEL_PEZZO_NODE = SurfaceSystem.blowup_plane(3, [2, 1, 1, 1, 1], "cubics through 5 points, singular at one of them")


@dataclass(frozen=True)
class CensusEntry:
    label: str
    count: int
    per_degree: int
    dual_is_hypersurface: bool
    description: str

    @property
    def degree(self) -> int:
        return self.count * self.per_degree

    def to_json(self) -> dict:
        return {
            "label": self.label, "count": self.count, "per_degree": self.per_degree,
            "degree": self.degree, "dual_is_hypersurface": self.dual_is_hypersurface,
            "description": self.description,
        }


@dataclass
class Census:
    k: int
    entries: list[CensusEntry]
    expected_total: int

    @property
    def total(self) -> int:
        return sum(e.degree for e in self.entries)

    @property
    def consistent(self) -> bool:
        return self.total == self.expected_total

    def to_json(self) -> dict:
        return {"k": self.k, "entries": [e.to_json() for e in self.entries],
                "total": self.total, "expected_total": self.expected_total, "consistent": self.consistent}


def census(k: int) -> Census:
    """Components of X^[k] for a Del Pezzo surface of degree 4, with degrees as points of |D|."""
    c = chern_input(DEL_PEZZO)
    expected = count_nodal(k, c)
    per_point = count_nodal(1, chern_input(DEL_PEZZO_NODE))
    if k == 2:
        entries = [
            CensusEntry("A", 5, 1, False, "irreducible cubic with a node at one base point: a plane for each point"),
            CensusEntry("B", 1, 1, False, "conic through all 5 points plus any line: a plane"),
            CensusEntry("C", 10, 1, False, "line through 2 points plus a conic through the other 3: planes"),
            CensusEntry("D", 5, 2, True, "conic through 4 points plus a line through the fifth: dual to the singular quadrics"),
        ]
    elif k == 3:
        entries = [
            CensusEntry("A", 5 * 5, 1, False, "node at a base point plus one more node: five lines per base point"),
            CensusEntry("B", 15, 1, False, "three lines with the points split 2+2+1"),
        ]
        if per_point != 5:
            raise ArithmeticError(f"nodal count through a singular base point is {per_point}, expected 5")
    elif k == 4:
        entries = [
            CensusEntry("A", 10, 1, False, "conic through all 5 points plus the line through two of them"),
            CensusEntry("B", 5 * 6, 1, False, "three lines, two of them meeting at a base point"),
        ]
    else:
        raise ValueError("k must be 2, 3 or 4")
    return Census(k, entries, expected)


# -- full analysis ------------------------------------------------------------------------------

@dataclass
class PencilReport:
    pencil: QuadricPencil
    members: list[SingularMember]
    real_count: int
    complex_count: int
    real_type: str
    admissible_pairs: list[tuple[int, int]] = field(default_factory=list)
    chart: ChartCertificate | None = None

    @property
    def topology(self) -> str:
        return TOPOLOGY[self.real_type]

    def to_json(self) -> dict:
        return {
            "pencil": self.pencil.to_json(),
            "members": [m.to_json() for m in self.members],
            "real_count": self.real_count,
            "complex_count": self.complex_count,
            "real_type": self.real_type,
            "topology": self.topology,
            "admissible_pairs": [[self.members[a].label, self.members[b].label] for a, b in self.admissible_pairs],
            "chart": self.chart.to_json() if self.chart else None,
        }


def analyze(p: QuadricPencil) -> PencilReport:
    members = singular_members(p)
    rtype = classify_real_type(members)
    pairs: list = []
    chart = None
    if rtype != "Unclassified":
        pairs = candidate_boundary(p, members)
        chart = compact_chart(p, members)
    return PencilReport(p, members, len(members), 5 - len(members), rtype, pairs, chart)


def label_by_params(members: Sequence[SingularMember], labelled: Sequence[tuple[str, tuple[int, int]]]) -> dict[str, int]:
    """Attach external labels to members by matching projective parameters."""
    out = {}
    for name, (a, b) in labelled:
        key = _primitive_pair(Fraction(a), Fraction(b))
        idx = next((k for k, m in enumerate(members) if m.param == key), None)
        if idx is None:
            raise KeyError(f"no singular member at [{a}:{b}]")
        out[name] = idx
    return out

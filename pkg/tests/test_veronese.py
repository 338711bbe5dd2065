import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullatlas import catalog as CAT
from hullatlas import veronese as VE
from hullatlas.algebra import P, Poly, SymMatrix
from hullatlas.plane_curves import SpaceCurveData, tangent_developable_degree


@pytest.fixture(scope="module")
def ex1():
    c = VE.ProjectionCenter.from_point(CAT.VERONESE_EX1["point"], CAT.VERONESE_EX1["basis"])
    return c, VE.project_veronese(c)


@pytest.fixture(scope="module")
def ex2():
    c = VE.ProjectionCenter.from_point(CAT.VERONESE_EX2["point"], CAT.VERONESE_EX2["basis"])
    return c, VE.project_veronese(c)


def test_forms_reproduce_chart_basis(ex1, ex2):
    for (c, s), ex in ((ex1, CAT.VERONESE_EX1), (ex2, CAT.VERONESE_EX2)):
        assert list(s.forms) == CAT.polys(ex["basis"], CAT.T)
        for f in s.forms:
            G = VE.gram(f)
            assert sum(c.A[i, j] * G[i, j] for i in range(3) for j in range(3)) == 0


def test_identity_center_is_example_two(ex2):
    c, _ = ex2
    assert c.A == SymMatrix.identity(3)


def test_default_basis_annihilates_center():
    c = VE.ProjectionCenter.build(SymMatrix([[1, 2, 0], [2, -1, 1], [0, 1, 3]]))
    s = VE.project_veronese(c)
    assert len(s.forms) == 5 and all(f.is_form(2) for f in s.forms)
    for f in s.forms:
        G = VE.gram(f)
        assert sum(c.A[i, j] * G[i, j] for i in range(3) for j in range(3)) == 0


def test_bad_chart_basis_rejected():
    with pytest.raises(ValueError):
        VE.ProjectionCenter.from_point([1, 0, 0, 1, 0, 1], ["t0^2", "t0*t1", "t0*t2", "t1*t2", "t1^2"])


def test_ideal_generators(ex1, ex2):
    assert VE.verify_ideal(ex1[1], CAT.polys(CAT.VERONESE_EX1["generators"]))
    assert VE.verify_ideal(ex2[1], CAT.polys(CAT.VERONESE_EX2["generators"]))
    assert not VE.verify_ideal(ex1[1], [P("x0", CAT.X)])


def test_base_locus_finite(ex1):
    assert ex1[1].base_locus_is_finite()


def test_conic_types():
    assert VE.conic_of(SymMatrix.identity(3))[0] is VE.ConicType.SMOOTH_CONIC
    assert VE.conic_of(SymMatrix.diag([1, -1, 0]))[0] is VE.ConicType.TWO_LINES
    assert VE.conic_of(SymMatrix.diag([1, 0, 0]))[0] is VE.ConicType.DOUBLE_LINE


def test_classify_center(ex1):
    assert VE.classify_center(SymMatrix.identity(3)) is VE.HullType.FULL_SPACE
    assert VE.classify_center(SymMatrix.identity(3).scale(-1)) is VE.HullType.FULL_SPACE
    assert VE.classify_center(ex1[0].A) is VE.HullType.BOUNDED
    with pytest.raises(VE.SingularCenter):
        VE.classify_center(SymMatrix.diag([1, 1, 0]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.lists(st.integers(-3, 3), min_size=9, max_size=9),
       st.integers(1, 5))
def test_classification_invariant_under_scaling_and_congruence(vals, tvals, c):
    A = SymMatrix([[vals[0], vals[1], vals[2]], [vals[1], vals[3], vals[4]], [vals[2], vals[4], vals[5]]])
    T = [tvals[0:3], tvals[3:6], tvals[6:9]]
    if A.rank() < 3 or SymMatrix.identity(3).congruent(T).rank() < 3:
        return
    kind = VE.classify_center(A)
    assert VE.classify_center(A.scale(-c)) is kind
    assert VE.classify_center(A.congruent(T)) is kind


def test_x2_curve_example_one(ex1):
    cur = VE.x2_curve(ex1[0])
    assert not cur.real_locus_empty
    assert cur.parametrization.degree == 4
    for q in cur.quadrics:
        assert q.substitute(dict(zip(CAT.X, cur.parametrization.forms))).is_zero()


def test_x2_curve_example_two(ex2):
    cur = VE.x2_curve(ex2[0])
    assert cur.real_locus_empty
    listed = CAT.polys(CAT.VERONESE_EX2["curve_quadrics"])
    if cur.has_parametrization:
        for q in listed:
            assert q.substitute(dict(zip(CAT.X, cur.parametrization.forms))).is_zero()


def test_dual_of_rational_normal_curve():
    rnc = VE.ParametrizedCurve(tuple(Poly.parse(f, VE.S_VARS) for f in CAT.VERONESE_EX1["normal_curve"]))
    d = VE.dual_of_parametrized_curve(rnc)
    assert VE.equal_up_to_scalar(d, Poly.parse(CAT.VERONESE_EX1["sextic"], CAT.X))


def test_dual_of_twisted_cubic():
    cubic = VE.ParametrizedCurve(tuple(P(f, VE.S_VARS) for f in ("s0^3", "s0^2*s1", "s0*s1^2", "s1^3")))
    d = VE.dual_of_parametrized_curve(cubic, ["a", "b", "c", "d"])
    # pairing with (s0^3, s0^2 s1, ...) gives a s0^3 + b s0^2 s1 + ...: the cubic discriminant
    classical = P("b^2*c^2 - 4*a*c^3 - 4*b^3*d + 18*a*b*c*d - 27*a^2*d^2", ["a", "b", "c", "d"])
    assert d.is_form(4)
    assert VE.equal_up_to_scalar(d, classical)


def test_dual_sextics(ex1, ex2):
    for (c, _), ex in ((ex1, CAT.VERONESE_EX1), (ex2, CAT.VERONESE_EX2)):
        d = VE.dual_of_center(c)
        assert d.is_form(6)
        assert d.degree() == tangent_developable_degree(SpaceCurveData(4, 0, 0))
        assert VE.equal_up_to_scalar(d, Poly.parse(ex["sextic"], CAT.X))


def test_dual_via_curve_example_one(ex1):
    cur = VE.x2_curve(ex1[0])
    d = VE.dual_of_parametrized_curve(cur.parametrization)
    assert VE.equal_up_to_scalar(d, Poly.parse(CAT.VERONESE_EX1["sextic"], CAT.X))


def test_tangent_hyperplanes_lie_on_the_sextic(ex1):
    cur = VE.x2_curve(ex1[0]).parametrization
    sextic = Poly.parse(CAT.VERONESE_EX1["sextic"], CAT.X)
    rng = random.Random(7)
    for _ in range(20):
        tau = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        basis = VE.tangent_hyperplane_points(cur, tau)
        assert len(basis) == 3
        coeffs = [rng.randint(-5, 5) for _ in basis]
        x = [sum(a * b[k] for a, b in zip(coeffs, basis)) for k in range(5)]
        assert sextic.evaluate(x) == 0


def test_sos_certificates():
    ex2 = CAT.VERONESE_EX2
    s = Poly.parse(ex2["sextic"], CAT.X)
    assert VE.sos_verify(s, [(c, Poly.parse(g, CAT.X)) for c, g in ex2["sos"]])
    ex1 = CAT.VERONESE_EX1
    pull = Poly.parse(ex1["chart_pullback"], CAT.T)
    assert VE.sos_verify(pull, [(c, Poly.parse(g, CAT.T)) for c, g in ex1["chart_sos"]])
    x = P("x")
    assert VE.sos_verify(x * x, [(1, x)])
    assert not VE.sos_verify(x * x, [(-1, x)])


def test_certified_chart_matches_pullback(ex1):
    _, surf = ex1
    H = CAT.VERONESE_EX1["chart_certified"]
    pulled = sum((f * h for f, h in zip(surf.forms, H)), Poly.const(0, CAT.T))
    assert pulled == Poly.parse(CAT.VERONESE_EX1["chart_pullback"], CAT.T)


def test_full_hull_witness():
    w = VE.full_hull_witness(SymMatrix.identity(3), SymMatrix.diag([0, 0, 0]))
    assert w.lam == 1 and w.ok
    w = VE.full_hull_witness(SymMatrix.identity(3), SymMatrix.diag([-5, 0, 0]))
    assert w.lam > 5 and w.ok
    with pytest.raises(VE.NotPositiveDefinite):
        VE.full_hull_witness(SymMatrix.diag([1, -1, 1]), SymMatrix.identity(3))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_full_hull_witness_random(vals):
    M = SymMatrix([[vals[0], vals[1], vals[2]], [vals[1], vals[3], vals[4]], [vals[2], vals[4], vals[5]]])
    A = SymMatrix([[2, 1, 0], [1, 2, 0], [0, 0, 1]])
    w = VE.full_hull_witness(A, M)
    assert w.ok


def test_y4_empty_constant():
    assert VE.X4_EMPTY is True

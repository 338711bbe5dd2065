from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullatlas import bordiga as BO
from hullatlas import catalog as CAT
from hullatlas.algebra import P, Poly
from hullatlas.counts import count_cuspidal, count_nodal
from hullatlas.plane_curves import SpaceCurveData, riemann_hurwitz_sides, tangent_developable_degree

BF = CAT.BORDIGA_FINAL


@pytest.fixture(scope="module")
def f2():
    return BO.sos_quartic_with_nodes(BF["f2_nodes"], BF["f2_conics"])


@pytest.fixture(scope="module")
def f3():
    return BO.sos_quartic_with_nodes(BF["f3_nodes"], BF["f3_conics"])


# -- census ------------------------------------------------------------------------------------

@pytest.mark.parametrize("k,total", [(2, 235), (3, 875), (4, 1761)])
def test_census_totals_match_nodal_counts(k, total):
    c = BO.census(k)
    assert c.total == total == count_nodal(k, BO.BORDIGA)
    assert c.consistent
    assert all(a == b for _, a, b in c.cross_checks)


def test_census_cross_checks():
    c3 = {e.label: e for e in BO.census(3).entries}
    assert c3["B"].degree == 620 == count_nodal(3, BO.PLANE_QUARTICS) - 55
    assert c3["C"].degree == 200
    c4 = {e.label: e.degree for e in BO.census(4).entries}
    assert c4["A1"] == comb(10, 5) // 2 == 126
    assert c4["A2"] == comb(10, 8) * count_nodal(1, BO.PLANE_CUBICS) == 540
    assert c4["B"] == 10 * count_nodal(2, BO.BORDIGA_NODE) - 90 == 1050
    assert c4["C"] == 45
    with pytest.raises(ValueError):
        BO.census(1)


def test_k3_published_total_flagged():
    c = BO.census(3)
    assert c.flags and "675" in c.flags[0]
    assert count_nodal(3, BO.PLANE_QUARTICS) == BO.PRINTED_K3_TOTAL


# -- curve Y and the Severi dual -----------------------------------------------------------------

def test_y_curve_pipeline():
    y = BO.y_curve_pipeline()
    assert y.branch.as_tuple() == (8, 9, 0, 12)
    assert y.y_curve.as_tuple() == (20, 9, 114, 48)
    assert y.genus_paths == (9, 9)
    assert (y.kazarian_nodes, y.kazarian_cusps) == (114, 48)
    assert count_cuspidal(BO.BORDIGA_NODE) == 48
    assert y.cone_degree == 8 and y.total_cone_degree == 80


def test_severi_dual():
    s = BO.severi_dual_degree()
    assert s.degree == 384
    assert s.rh_left == s.rh_right == 2 * 725 - 2
    assert 620 * -2 + 2304 + 384 == s.rh_right
    assert s.hypersurface_total == 464


def test_severi_dual_without_cusps():
    c = SpaceCurveData(620, 725, 0)
    d = tangent_developable_degree(c)
    assert d == 2688 == 2 * 725 - 2 + 1240
    assert riemann_hurwitz_sides(c, d)[0] == riemann_hurwitz_sides(c, d)[1]


# -- sums of squares -----------------------------------------------------------------------------

def test_printed_quartics(f2, f3):
    for q in (f2, f3):
        assert q.verify()
        assert q.certificate.holds
        assert q.certificate.gcd_degree >= len(q.prescribed_nodes)
    assert f2.quartic == sum((P(c, BO.P2) ** 2 for c in BF["f2_conics"]), Poly.const(0, BO.P2))


def test_sos_nodes_match_affine_points():
    pts = BO.parse_points("(-1,0);(0,-1)")
    assert pts == [(1, -1, 0), (1, 0, -1)]
    assert BO.parse_points("(0,0);(1,0);(0,1)") == [tuple(Fraction(v) for v in p) for p in BF["f3_nodes"]]


def test_constructed_quartic_through_given_points():
    q = BO.sos_quartic_with_nodes([(1, 2, 0), (1, 0, 3)], seed=4)
    assert q.verify() and q.certificate.holds
    assert all(q.quartic.evaluate(p) == 0 for p in q.prescribed_nodes)
    assert q.quartic.evaluate([1, 1, 1]) > 0


@settings(max_examples=8, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=3, unique=True),
       st.integers(0, 1000))
def test_constructed_quartics_are_certified(pts, seed):
    P3 = [(1, a, b) for a, b in pts]
    if BO._collinear([tuple(Fraction(v) for v in p) for p in P3]):
        return
    q = BO.sos_quartic_with_nodes(P3, seed=seed)
    assert q.verify() and q.certificate.holds
    # nonnegative on a grid, zero only at the nodes
    for a in range(-4, 5):
        for b in range(-4, 5):
            v = q.quartic.evaluate([1, a, b])
            assert v >= 0
            assert (v == 0) == ((a, b) in pts)


def test_certificate_detects_extra_common_zero():
    conics = [P(t, BO.P2) for t in ("x0*x1 + 2*x0*x2 + 3*x1*x2", "2*x0*x1 - x0*x2 + x1*x2", "x0*x1 + x0*x2 - x1*x2")]
    assert BO.certify_common_zeros(conics, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]).holds
    assert not BO.certify_common_zeros(conics, [(1, 0, 0), (0, 1, 0)]).holds


def test_certificate_detects_complex_common_zero():
    base = P("x1^2 + x2^2", BO.P2)
    # conics x1^2+x2^2, x0*x1, x0*x2 share (1:0:0) and (0:1:i), (0:1:-i)
    cs = [base, P("x0*x1", BO.P2), P("x0*x2", BO.P2)]
    cert = BO.certify_common_zeros(cs, [(1, 0, 0)])
    assert not cert.holds


def test_sos_input_errors():
    with pytest.raises(ValueError):
        BO.sos_quartic_with_nodes([(1, 0, 0), (2, 0, 0)])
    with pytest.raises(ValueError):
        BO.sos_quartic_with_nodes([(1, 0, 0), (1, 1, 0), (1, 2, 0)])
    with pytest.raises(ValueError):
        BO.sos_quartic_with_nodes([(1, 0, 0)])


# -- base points ---------------------------------------------------------------------------------

def test_base_points_of_printed_pair(f2, f3):
    rep = BO.base_points(f2, f3)
    assert rep.degrees == {"x1": 16, "x2": 16}
    assert set(rep.real_roots.values()) == {0}
    assert rep.total == 16 and rep.real == 0 and rep.conjugate_pairs == 8
    assert rep.squarefree


def test_base_points_common_component(f2):
    with pytest.raises(BO.CommonComponent):
        BO.base_points(f2, f2)


def test_complex_base_points_pair_up(f2, f3):
    pts = BO.complex_base_points(f2, f3)
    assert len(pts) == 16
    for p in pts:
        for q in (f2.quartic, f3.quartic):
            assert abs(q.evaluate_float(p) if hasattr(q, "evaluate_float") else _evalc(q, p)) < 1e-6
    pairs = BO.conjugate_pairs(pts)
    assert len(pairs) == 8
    assert BO.general_position([p for pr in pairs for p in pr])["no_three_collinear"]
    subsets = BO.admissible_subsets(pairs, 5)
    assert len(subsets) == comb(8, 5)


def _evalc(q, p):
    total = 0j
    for mono, c in q.terms.items():
        v = complex(float(c))
        for x, e in zip(p, mono):
            v *= complex(x) ** e
        total += v
    return total / max(1.0, np.linalg.norm(p) ** 4)


def test_general_position_detects_collinear():
    pts = [np.array([1, t, 2 * t], dtype=complex) for t in range(10)]
    gp = BO.general_position(pts)
    assert not gp["no_three_collinear"]


# -- classification ------------------------------------------------------------------------------

def test_supporting_classification(f2, f3):
    verdicts = {c: BO.supporting_classification(c, f2, f3) for c in BO.CASES}
    assert {c: v.realizable for c, v in verdicts.items()} == {
        "X2_B": True, "X3_B": True, "X3_C": False, "X4_A": False, "X4_B": False, "X4_C": True}
    assert verdicts["X2_B"].certificate is not None and verdicts["X3_B"].certificate is not None
    assert verdicts["X4_A"].certificate is None and verdicts["X4_A"].reason
    assert verdicts["X4_C"].certificate.certificate.holds
    with pytest.raises(ValueError):
        BO.supporting_classification("X5_A")

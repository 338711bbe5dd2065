import warnings
from fractions import Fraction

import numpy as np
import pytest

from hullatlas import catalog as CAT
from hullatlas import convexity as CV
from hullatlas import delpezzo as DP
from hullatlas import veronese as VE
from hullatlas.algebra import Poly, Signature, SymMatrix

EXAMPLES = CAT.delpezzo_examples()


def pencil(key):
    ex = EXAMPLES[key]
    return DP.QuadricPencil.from_forms(ex["f0"], ex["finf"])


@pytest.fixture(scope="module")
def ex37():
    p = pencil("delpezzo_ex37")
    members = DP.singular_members(p)
    chart = [float(v) for v in DP.compact_chart(p, members).hyperplane]
    s = CV.SurfaceSampler.from_pencil(p, chart, seed=0)
    return p, members, s, CV.sample(s, 600)


# -- sampling ------------------------------------------------------------------------------------

def test_sphere_sampler_residual():
    s = CV.SurfaceSampler.complete_intersection([np.diag([1.0, 1.0, 1.0, -1.0])], [0, 0, 0, 1], seed=2)
    rep = CV.sample(s, 200)
    assert rep.count >= 200
    X = rep.points
    assert np.max(np.abs(X[:, 0] ** 2 + X[:, 1] ** 2 + X[:, 2] ** 2 - X[:, 3] ** 2)) < 1e-12


def test_empty_real_locus_gives_zero_yield():
    p = DP.QuadricPencil(SymMatrix.identity(5), SymMatrix.diag([1, 2, 3, 4, 5]))
    rep = CV.sample(CV.SurfaceSampler.from_pencil(p, [1, 0, 0, 0, 0]), 20, budget_factor=10)
    assert rep.empty and rep.attempts == 200


def test_example_37_samples(ex37):
    p, _, s, rep = ex37
    assert rep.count >= 500
    for x in rep.points:
        assert s.residual(x) < 1e-10
        assert abs(np.dot(s.chart, x) - 1) < 1e-12


def test_sample_requires_positive_count(ex37):
    with pytest.raises(ValueError):
        CV.sample(ex37[2], 0)


def test_sampling_deterministic(ex37):
    p, _, s, rep = ex37
    again = CV.sample(CV.SurfaceSampler.from_pencil(p, s.chart, seed=0), 600)
    assert np.array_equal(rep.points, again.points)
    other = CV.sample(CV.SurfaceSampler.from_pencil(p, s.chart, seed=1), 600)
    assert not np.array_equal(rep.points, other.points)


# -- supports ------------------------------------------------------------------------------------

def _tangent_hyperplane(members, rep):
    # tangent hyperplane of a (3,1,1) boundary cone at a real point of X
    cone = next(m for m in members if m.normalized_signature == DP.S311)
    V = cone.oriented_matrix().to_float()
    return V @ rep.points[len(rep.points) // 3]


def test_tangent_hyperplane_supports(ex37):
    _, members, s, rep = ex37
    u = _tangent_hyperplane(members, rep)
    v = CV.supports(s, u, samples=rep)
    assert v.status is CV.SupportStatus.SUPPORTS
    assert min(v.positive, v.negative) == 0
    scaled = CV.supports(s, 3.5 * u, samples=rep)
    assert scaled.status is CV.SupportStatus.SUPPORTS and scaled.side == v.side
    flipped = CV.supports(s, -u, samples=rep)
    assert flipped.status is CV.SupportStatus.SUPPORTS and flipped.side == -v.side


def test_verdict_json(ex37):
    _, members, s, rep = ex37
    js = CV.supports(s, _tangent_hyperplane(members, rep), samples=rep).to_json()
    assert js["status"] == "Supports" and js["n_samples"] == rep.count


def test_random_hyperplanes_through_hull_points_cut(ex37):
    _, _, s, rep = ex37
    hull = CV.hull_samples(rep, 1000, seed=4)
    rng = np.random.default_rng(9)
    cuts = 0
    for h in hull:
        u = rng.normal(size=5)
        u = u - (u @ h) * s.chart  # chart . h = 1, so u . h = 0
        if CV.supports(s, u, samples=rep).status is CV.SupportStatus.CUTS:
            cuts += 1
    assert cuts >= 990


def test_empty_surface_has_no_contact():
    p = DP.QuadricPencil(SymMatrix.identity(5), SymMatrix.diag([1, 2, 3, 4, 5]))
    s = CV.SurfaceSampler.from_pencil(p, [1, 0, 0, 0, 0])
    v = CV.supports(s, [1, 0, 0, 0, 0], n=5)
    assert v.status is CV.SupportStatus.NO_REAL_CONTACT


def test_contact_dimension():
    assert CV.contact_dimension([]) is None
    assert CV.contact_dimension([np.zeros(3), np.zeros(3)]) == 0
    assert CV.contact_dimension([np.array([t, 0.0, 0.0]) for t in range(5)]) == 1
    assert CV.contact_dimension([np.array([a, b, 0.0]) for a in range(3) for b in range(3)]) == 2


def test_x4_points_support_edges_only():
    p = pencil("delpezzo_ex39")
    members = DP.singular_members(p)
    x4 = DP.x4_points(p, members)
    real = x4.real_points
    assert real
    s = CV.SurfaceSampler.from_pencil(p, EXAMPLES["delpezzo_ex39"]["chart"], seed=0)
    rep = CV.sample(s, 400)
    for u in real:
        v = CV.supports(s, np.real(u), samples=rep)
        assert not (v.status is CV.SupportStatus.STRICTLY_SEPARATES and v.contact_dimension == 2)
        if v.status is CV.SupportStatus.SUPPORTS:
            assert v.contact_dimension is not None and v.contact_dimension <= 1


# -- curvature -----------------------------------------------------------------------------------

def test_curvature_obstruction():
    assert CV.curvature_obstruction(Signature(2, 2, 1))
    assert not CV.curvature_obstruction(Signature(3, 1, 1))
    assert not CV.curvature_obstruction(Signature(1, 3, 1))
    with pytest.raises(CV.NotApplicable):
        CV.curvature_obstruction(Signature(4, 1, 0))
    assert CV.curvature_verdict(Signature(4, 1, 0)) == "not applicable"


# -- charts --------------------------------------------------------------------------------------

def test_chart_compactness_example_38_sampled():
    p = pencil("delpezzo_ex38")
    s = CV.SurfaceSampler.from_pencil(p, [1, 0, 0, 0, 0])
    v = CV.chart_compactness(s, [1, 0, 0, 0, 0], attempts=300)
    assert v.compact and v.method == "sampled"
    v = CV.chart_compactness(s, [1, 0, 0, 0, 0], pencil=p)
    assert v.compact and v.method == "exact"


def test_chart_through_a_real_point_is_not_compact(ex37):
    p, _, s, rep = ex37
    x = rep.points[0]
    u = np.random.default_rng(1).normal(size=5)
    H = u - (u @ x) * s.chart
    v = CV.chart_compactness(s, H, attempts=2000)
    assert not v.compact and v.witness is not None
    assert abs(H @ v.witness) < 1e-8 and s.residual(v.witness) < 1e-10


def test_veronese_certified_chart():
    ex = CAT.VERONESE_EX1
    surf = VE.project_veronese(VE.ProjectionCenter.from_point(ex["point"], ex["basis"]))
    s = CV.SurfaceSampler.parametrized(surf.forms, ex["chart_certified"])
    v = CV.chart_compactness(s, ex["chart_certified"])
    assert v.compact and v.method == "exact"
    v = CV.chart_compactness(CV.SurfaceSampler.parametrized(surf.forms, ex["chart_printed"]), ex["chart_printed"])
    assert not v.compact


# -- boundary pairs ------------------------------------------------------------------------------

@pytest.mark.parametrize("key", ["delpezzo_ex37", "delpezzo_ex38"])
def test_boundary_pair_unique_cones(key):
    p = pencil(key)
    members = DP.singular_members(p)
    sel = CV.boundary_pair_select(p, EXAMPLES[key]["chart"], members=members)
    assert all(members[k].normalized_signature == DP.S311 for k in sel.pair)
    assert sum(2 for _ in sel.pair) == 4


def test_boundary_pair_example_39():
    p = pencil("delpezzo_ex39")
    members = DP.singular_members(p)
    sel = CV.boundary_pair_select(p, EXAMPLES["delpezzo_ex39"]["chart"], members=members)
    assert len(sel.passing) == 1
    assert sel.pair in DP.d4_admissible_pairs(p, members).pairs
    again = CV.boundary_pair_select(p, EXAMPLES["delpezzo_ex39"]["chart"], members=members)
    assert again.pair == sel.pair and again.diagnostics == sel.diagnostics


# -- slices --------------------------------------------------------------------------------------

def _labels(members):
    return {m.label: m.oriented_matrix() for m in members if m.normalized_signature == DP.S311}


@pytest.mark.parametrize("key,clouds", [("delpezzo_ex37", 3), ("delpezzo_ex39", 5)])
def test_slice_clouds(key, clouds, tmp_path):
    p = pencil(key)
    members = DP.singular_members(p)
    ex = EXAMPLES[key]
    section = ex["section"] if key != "delpezzo_ex39" else [0, 1, 0, 0, 0]
    data = CV.slice_clouds(p, ex["chart"], section, _labels(members), seed=0, n_lines=800)
    assert len(data.clouds) == clouds
    assert all(len(v) > 0 for v in data.clouds.values())
    rows = CV.emit_slices(data, str(tmp_path / "s.csv"))
    assert rows == sum(len(v) for v in data.clouds.values())
    lines = (tmp_path / "s.csv").read_text().splitlines()
    assert lines[0] == "label,c1,c2,c3" and len(lines) == rows + 1


def test_empty_slices_warn(tmp_path):
    data = CV.SliceData({"X": np.zeros((0, 3))}, np.zeros((4, 5)))
    with pytest.warns(UserWarning):
        assert CV.emit_slices(data, str(tmp_path / "e.csv")) == 0


# -- Veronese hull -------------------------------------------------------------------------------

def test_veronese_hull_respects_tangent_hyperplanes():
    ex = CAT.VERONESE_EX1
    center = VE.ProjectionCenter.from_point(ex["point"], ex["basis"])
    surf = VE.project_veronese(center)
    curve = VE.x2_curve(center).parametrization
    sextic = Poly.parse(ex["sextic"], CAT.X)
    s = CV.SurfaceSampler.parametrized(surf.forms, ex["chart_certified"], seed=0)
    rep = CV.sample(s, 400)
    hull = CV.hull_samples(rep, 2000, seed=1)
    rng = np.random.default_rng(2)
    for _ in range(100):
        tau = Fraction(int(rng.integers(-40, 40)), int(rng.integers(1, 10)))
        u = [f.substitute({"s0": tau, "s1": 1}).constant_value() for f in curve.forms]
        uf = np.array([float(v) for v in u])
        on_surface = rep.points @ uf
        side = 1.0 if np.max(on_surface) > -np.min(on_surface) else -1.0
        tol = 1e-9 * np.max(np.abs(on_surface))
        assert np.all(side * on_surface >= -tol)
        assert np.all(side * (hull @ uf) >= -tol)
    # the sextic keeps one sign on the hull and changes sign off it
    inside = [float(sextic.evaluate([float(t) for t in h])) for h in hull[:500]]
    assert all(v > 0 for v in inside) or all(v < 0 for v in inside)
    far = rng.normal(size=(300, 5)) * 10
    far = far / (far @ s.chart)[:, None]
    outside = [float(sextic.evaluate(list(x))) for x in far]
    assert any(v > 0 for v in outside) and any(v < 0 for v in outside)

"""End-to-end acceptance criteria.  Each test records a PASS/FAIL line via ``record``."""

import random

import numpy as np
import pytest

from conftest import record
from hullatlas import bordiga as BO
from hullatlas import catalog as CAT
from hullatlas import convexity as CV
from hullatlas import counts as CN
from hullatlas import delpezzo as DP
from hullatlas import kazarian_fit as KF
from hullatlas import veronese as VE
from hullatlas.algebra import Poly
from hullatlas.plane_curves import (
    InvalidInvariants,
    PlaneCurveInvariants,
    SpaceCurveData,
    plucker_dual,
    riemann_hurwitz_sides,
    tangent_developable_degree,
)

SEED = 0
EXAMPLES = CAT.delpezzo_examples()
LABELS_39 = [("V1", (1, 0)), ("V2", (0, 1)), ("V3", (1, -2)), ("V4", (1, -1)), ("W", (2, -1))]


def _pencil(key):
    ex = EXAMPLES[key]
    return DP.QuadricPencil.from_forms(ex["f0"], ex["finf"])


def test_01_degree_table():
    rows = {"delpezzo": (12, 26, 40, 40), "bordiga": (27, 235, 875, 1761), "k3": (42, 672, 5460, 25650)}
    got = {name: tuple(CN.count_nodal(k, CN.chern_input(CN.SurfaceSystem.parse(name))) for k in range(1, 5))
           for name in rows}
    ver = CN.chern_input(CN.SurfaceSystem.veronese())
    refused = []
    for k in (2, 3, 4):
        try:
            CN.count_nodal(k, ver)
            refused.append(False)
        except CN.FormulaInapplicable:
            refused.append(True)
    ok = got == rows and all(refused) and CN.count_nodal(1, ver) == 3
    assert record(1, "degree table: 12 entries exact, Veronese row refused", ok, f"{got}")


def test_02_scattered_counts():
    pq = BO.PLANE_QUARTICS
    got = (
        CN.count_nodal(1, CN.chern_input(DP.DEL_PEZZO_NODE)),
        CN.count_nodal(1, BO.PLANE_CUBICS),
        CN.count_nodal(1, BO.BORDIGA_NODE),
        CN.count_nodal(2, BO.BORDIGA_NODE),
        CN.count_cuspidal(BO.BORDIGA_NODE),
        tuple(CN.count_nodal(k, pq) for k in (1, 2, 3, 4)),
    )
    ok = got == (5, 12, 20, 114, 48, (27, 225, 675, 666))
    assert record(2, "quoted counts 5, 12, 20, 114, 48 and 27/225/675/666", ok, f"{got}")


def test_03_plucker_pipeline():
    dual = plucker_dual(PlaneCurveInvariants(8, 9, 0, 12)).as_tuple()
    rng = random.Random(SEED)
    checked = 0
    involution = True
    while checked < 100:
        d = rng.randint(2, 14)
        top = (d - 1) * (d - 2) // 2
        delta = rng.randint(0, top)
        kappa = rng.randint(0, top - delta)
        inv = PlaneCurveInvariants.from_singularities(d, delta, kappa)
        try:
            once = plucker_dual(inv)
            twice = plucker_dual(once)
        except InvalidInvariants:
            continue
        involution = involution and twice == inv
        checked += 1
    ok = dual == (20, 9, 114, 48) and involution
    assert record(3, "Pluecker dual (8,9,0,12) -> (20,9,114,48), double dual on 100 tuples", ok, f"{dual}")


def test_04_riemann_hurwitz():
    c = SpaceCurveData(620, 725, 2304)
    deg = tangent_developable_degree(c)
    left, right = riemann_hurwitz_sides(c, deg)
    rnc = tangent_developable_degree(SpaceCurveData(4, 0, 0))
    ok = deg == 384 and left == right == 2 * 725 - 2 == 620 * -2 + 2304 + 384 and rnc == 6
    assert record(4, "tangent developable degree 384, identity replayed, normal quartic gives 6", ok,
                  f"deg={deg}, rnc={rnc}")


def test_05_veronese_examples():
    results = {}
    for key, ex in (("ex1", CAT.VERONESE_EX1), ("ex2", CAT.VERONESE_EX2)):
        center = VE.ProjectionCenter.from_point(ex["point"], ex["basis"])
        surf = VE.project_veronese(center)
        gens = CAT.polys(ex["generators"])
        results[f"{key} ideal"] = len(gens) == 7 and VE.verify_ideal(surf, gens)
        results[f"{key} sextic"] = VE.equal_up_to_scalar(VE.dual_of_center(center), Poly.parse(ex["sextic"], CAT.X))
    ex2 = CAT.VERONESE_EX2
    results["ex2 sos"] = VE.sos_verify(Poly.parse(ex2["sextic"], CAT.X),
                                       [(c, Poly.parse(g, CAT.X)) for c, g in ex2["sos"]])
    ex1 = CAT.VERONESE_EX1
    results["ex1 chart sos"] = VE.sos_verify(Poly.parse(ex1["chart_pullback"], CAT.T),
                                             [(c, Poly.parse(g, CAT.T)) for c, g in ex1["chart_sos"]])
    ok = all(results.values())
    assert record(5, "Veronese ideals, dual sextics, sum-of-squares identities", ok,
                  ", ".join(k for k, v in results.items() if not v))


def test_06_pencil_classification():
    expect = {"delpezzo_ex37": ("Q31", {"(3,1,1)": 2, "(2,2,1)": 1}),
              "delpezzo_ex38": ("Q22", {"(3,1,1)": 2, "(2,2,1)": 3}),
              "delpezzo_ex39": ("D4", {"(3,1,1)": 4, "(2,2,1)": 1})}
    ok = True
    for key, (rtype, multiset) in expect.items():
        ex = EXAMPLES[key]
        p = _pencil(key)
        members = DP.singular_members(p)
        ok = ok and DP.classify_real_type(members) == rtype
        ok = ok and {str(k): v for k, v in DP.signature_multiset(members).items()} == multiset
        # the printed parameters refer to the printed pencil when it is stated so, else to (f0, finf)
        source = DP.QuadricPencil(*ex["printed_pencil"]) if ex.get("params_for") == "printed_pencil" else p
        roots = {m.param for m in DP.singular_members(source)}
        ok = ok and roots == {DP._primitive_pair(a, b) for a, b in ex["printed_params"]}
    p = _pencil("delpezzo_ex39")
    members = DP.singular_members(p)
    inv = {v: k for k, v in DP.label_by_params(members, LABELS_39).items()}
    pairs = {frozenset((inv[a], inv[b])) for a, b in DP.d4_admissible_pairs(p, members).pairs}
    ok = ok and pairs == {frozenset(("V1", "V2")), frozenset(("V3", "V4"))}
    assert record(6, "pencils classify as Q31/Q22/D4, root sets and admissible pairs match", ok)


def test_07_x4_structure():
    p = _pencil("delpezzo_ex39")
    rep = DP.x4_points(p, seed=SEED)
    sizes = [len(g.points) for g in rep.groups]
    ok = sizes == [4] * 10 and rep.total == 40 and rep.disjoint and rep.disjoint_certified
    assert record(7, "X^[4] of the D4 example: 10 x 4 disjoint points", ok, f"total={rep.total}")


def test_08_bordiga_census():
    totals = {}
    ok = True
    for k, total, parts in ((2, 235, (10, 225)), (3, 875, (55, 620, 200)), (4, 1761, (666, 1050, 45))):
        c = BO.census(k)
        totals[k] = c.total
        deg = {e.label: e.degree for e in c.entries}
        grouped = (deg["A"], deg["B"]) if k == 2 else (deg["A1"] + deg["A2"], deg["B"], deg["C"])
        ok = ok and c.total == total == CN.count_nodal(k, BO.BORDIGA) and grouped == parts and c.consistent
    flagged = bool(BO.census(3).flags) and BO.PRINTED_K3_TOTAL == 675
    ok = ok and flagged
    assert record(8, "Bordiga censuses 235/875/1761 with the 675 discrepancy reported", ok, f"{totals}")


def test_09_bordiga_final_example():
    bf = CAT.BORDIGA_FINAL
    f2 = BO.sos_quartic_with_nodes(bf["f2_nodes"], bf["f2_conics"], seed=SEED)
    f3 = BO.sos_quartic_with_nodes(bf["f3_nodes"], bf["f3_conics"], seed=SEED)
    rep = BO.base_points(f2, f3)
    ok = (f2.verify() and f3.verify() and f2.certificate.holds and f3.certificate.holds
          and len(f2.prescribed_nodes) == 2 and len(f3.prescribed_nodes) == 3
          and rep.total == 16 and rep.real == 0 and all(v == 0 for v in rep.real_roots.values())
          and all(v == 16 for v in rep.degrees.values()))
    assert record(9, "f2, f3 reconstructed and certified; 16 common zeros, none real", ok,
                  f"total={rep.total}, real={rep.real}")


def test_10_sampling_properties():
    details = {}
    for key in ("delpezzo_ex37", "delpezzo_ex38"):
        p = _pencil(key)
        members = DP.singular_members(p)
        sel = CV.boundary_pair_select(p, EXAMPLES[key]["chart"], SEED, members=members)
        cones = {k for k, m in enumerate(members) if m.normalized_signature == DP.S311}
        details[key] = set(sel.pair) == cones
    p = _pencil("delpezzo_ex39")
    members = DP.singular_members(p)
    sel = CV.boundary_pair_select(p, EXAMPLES["delpezzo_ex39"]["chart"], SEED, members=members)
    details["ex39 one pair"] = len(sel.passing) == 1 and sel.pair in DP.d4_admissible_pairs(p, members).pairs
    p38 = _pencil("delpezzo_ex38")
    s38 = CV.SurfaceSampler.from_pencil(p38, EXAMPLES["delpezzo_ex38"]["chart"], SEED)
    details["ex38 chart"] = CV.chart_compactness(s38, EXAMPLES["delpezzo_ex38"]["chart"], 500).compact
    ex1 = CAT.VERONESE_EX1
    surf = VE.project_veronese(VE.ProjectionCenter.from_point(ex1["point"], ex1["basis"]))
    s1 = CV.SurfaceSampler.parametrized(surf.forms, ex1["chart_certified"], SEED)
    details["ex1 chart"] = CV.chart_compactness(s1, ex1["chart_certified"]).compact
    p37 = _pencil("delpezzo_ex37")
    chart = [float(v) for v in DP.compact_chart(p37).hyperplane]
    s37 = CV.SurfaceSampler.from_pencil(p37, chart, SEED)
    rep = CV.sample(s37, 600)
    hull = CV.hull_samples(rep, 1000, SEED)
    rng = np.random.default_rng(SEED)
    cuts = 0
    for h in hull:
        u = rng.normal(size=5)
        u = u - (u @ h) * s37.chart
        cuts += CV.supports(s37, u, samples=rep).status is CV.SupportStatus.CUTS
    details["cuts"] = cuts >= 990
    ok = all(details.values())
    assert record(10, "boundary pairs, compact charts, >= 99% of random hyperplanes cut", ok,
                  f"cuts={cuts}/1000" + ("" if ok else f", failed: {[k for k, v in details.items() if not v]}"))


@pytest.mark.xfail(strict=True, raises=(KF.Underdetermined, AssertionError),
                   reason="the published counts determine the cuspidal form only up to a rank-1 system")
def test_11_derivation_from_published_corpus():
    nodal, _ = KF.fit_nodal_forms(KF.PUBLISHED)
    try:
        cusp = KF.fit_cuspidal_form(KF.PUBLISHED)
    except KF.Underdetermined as e:
        record(11, "coefficient table re-derived from the published counts alone", False,
               f"nodal forms {'match' if nodal == CN.NODAL_FORMS else 'differ'}; cuspidal form: {e}")
        raise
    ok = nodal == CN.NODAL_FORMS and cusp == CN.CUSPIDAL_FORM
    assert record(11, "coefficient table re-derived from the published counts alone", ok)

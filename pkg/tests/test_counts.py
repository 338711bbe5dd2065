from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullatlas import kazarian_fit as KF
from hullatlas.counts import (
    CUSPIDAL_FORM,
    NODAL_FORMS,
    ChernInput,
    FormulaInapplicable,
    SurfaceSystem,
    bell_numerator,
    chern_input,
    count_cuspidal,
    count_nodal,
    cumulants,
    parse_class,
    stored_constant,
)


def ci(text):
    return chern_input(SurfaceSystem.parse(text))


@pytest.mark.parametrize("text, quad", [
    ("delpezzo", (4, -4, 4, 8)),
    ("blowup:4:2,1,1,1,1,1,1,1,1,1", (3, -1, -1, 13)),
    ("plane:4", (16, -12, 9, 3)),
    ("bordiga", (6, -2, -1, 13)),
    ("k3", (6, 0, 0, 24)),
    ('{"kind": "blowup_plane", "degree": 3, "multiplicities": [2, 1, 1, 1, 1]}', (1, -3, 4, 8)),
    ("raw:1,2,3,4", (1, 2, 3, 4)),
])
def test_chern_input(text, quad):
    assert ci(text).as_tuple() == quad


def test_unknown_descriptor():
    with pytest.raises(ValueError):
        SurfaceSystem.parse("torus")


@pytest.mark.parametrize("name, values", [
    ("delpezzo", (12, 26, 40, 40)),
    ("bordiga", (27, 235, 875, 1761)),
    ("k3", (42, 672, 5460, 25650)),
])
def test_degree_table(name, values):
    c = ci(name)
    assert tuple(count_nodal(k, c) for k in range(1, 5)) == values


def test_quoted_counts():
    assert count_nodal(1, ci("blowup:3:2,1,1,1,1")) == 5
    assert count_nodal(1, ci("plane:3")) == 12
    node = ci("blowup:4:2,1,1,1,1,1,1,1,1,1")
    assert (count_nodal(1, node), count_nodal(2, node), count_cuspidal(node)) == (20, 114, 48)
    assert [count_nodal(k, ci("plane:4")) for k in range(1, 5)] == [27, 225, 675, 666]


def test_cuspidal_classical_values():
    assert count_cuspidal(ci("plane:4")) == 72
    assert count_cuspidal(ci("plane:3")) == 24


def test_veronese_refused():
    v = ci("veronese")
    assert count_nodal(1, v) == 3
    for k in (2, 3, 4):
        with pytest.raises(FormulaInapplicable):
            count_nodal(k, v)


def test_delta_range():
    with pytest.raises(ValueError):
        count_nodal(5, ci("bordiga"))
    with pytest.raises(ValueError):
        count_nodal(0, ci("bordiga"))


def test_corrupted_table_detected():
    bad = (NODAL_FORMS[0], NODAL_FORMS[1][:3] + (NODAL_FORMS[1][3] + 1,)) + NODAL_FORMS[2:]
    with pytest.raises(ArithmeticError):
        count_nodal(2, ci("bordiga"), bad)


def test_stored_constants():
    assert stored_constant("N_A1A1A2_quartics").value == 2304
    assert stored_constant("branch_cusps").value == 12
    assert stored_constant("severi_geom_genus").value == 725
    with pytest.raises(KeyError):
        stored_constant("nope")


def test_parse_class():
    assert parse_class("A1^3") == ("nodal", 3)
    assert parse_class("a2") == ("cuspidal", 1)
    with pytest.raises(ValueError):
        parse_class("D4")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 7), st.lists(st.integers(1, 3), max_size=12))
def test_bell_numerators_divisible(a, mults):
    c = chern_input(SurfaceSystem.blowup_plane(a, mults))
    q = cumulants(c)
    for delta in range(1, 5):
        assert bell_numerator(delta, q) % factorial(delta) == 0


def test_bell_polynomials_explicit():
    q1, q2, q3, q4 = 2, 3, 5, 7
    assert bell_numerator(2, [q1, q2]) == q1**2 + q2
    assert bell_numerator(3, [q1, q2, q3]) == q1**3 + 3 * q1 * q2 + q3
    assert bell_numerator(4, [q1, q2, q3, q4]) == q1**4 + 6 * q1**2 * q2 + 4 * q1 * q3 + 3 * q2**2 + q4


# -- re-deriving the coefficient table ---------------------------------------------------------------

def test_nodal_forms_rederived_from_published_counts():
    forms, used = KF.fit_nodal_forms(KF.PUBLISHED)
    assert forms == NODAL_FORMS
    assert len(used[3]) >= 4 and len(used[4]) >= 4


def test_cuspidal_form_with_classical_counts():
    assert KF.fit_cuspidal_form(list(KF.PUBLISHED) + list(KF.CLASSICAL_CUSPIDAL)) == CUSPIDAL_FORM


def test_cuspidal_form_underdetermined_by_published_counts():
    assert KF.cusp_rank(KF.PUBLISHED) == 1
    with pytest.raises(KF.Underdetermined):
        KF.fit_cuspidal_form(KF.PUBLISHED)


def test_inconsistent_corpus_detected():
    bad = list(KF.PUBLISHED) + [KF.CorpusPoint(KF.PLANE_QUARTICS, 1, 28, "wrong")]
    with pytest.raises(KF.InconsistentCorpus):
        KF.fit_nodal_forms(bad)


def test_derive_table_report():
    rep = KF.derive_table()
    assert rep.matches_shipped()
    assert rep.cusp_rank_from_published == 1

"""Reference data for the worked examples replayed by ``atlas replay``.

Polynomials are kept as text exactly as published and parsed on demand.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra.matrix import SymMatrix
from .algebra.poly import Poly

X = ("x0", "x1", "x2", "x3", "x4")
T = ("t0", "t1", "t2")


def polys(lines, vars=X) -> list[Poly]:
    return [Poly.parse(s, vars) for s in lines]


# -- Veronese projection, signature (2,1) -------------------------------------------------

VERONESE_EX1 = {
    "point": [0, 0, -1, 2, 0, 0],
    # matrix printed next to the point; it does not pair to zero with the chart forms
    "printed_matrix": [[0, 0, Fraction(-1, 2)], [0, 2, 0], [Fraction(-1, 2), 0, 0]],
    "basis": ["t0^2", "-2*t0*t1", "2*t0*t2 + t1^2", "-2*t1*t2", "t2^2"],
    "generators": [
        "x3^3 - 4*x2*x3*x4 + 8*x1*x4^2",
        "x2*x3^2 - 4*x2^2*x4 + 2*x1*x3*x4 + 16*x0*x4^2",
        "x1*x3^2 - 4*x1*x2*x4 + 8*x0*x3*x4",
        "x0*x3^2 - x1^2*x4",
        "x1^2*x3 - 4*x0*x2*x3 + 8*x0*x1*x4",
        "x1^2*x2 - 4*x0*x2^2 + 2*x0*x1*x3 + 16*x0^2*x4",
        "x1^3 - 4*x0*x1*x2 + 8*x0^2*x3",
    ],
    # hyperplane at infinity as printed, and the one the printed sum-of-squares identity certifies
    "chart_printed": [2, 1, 2, 4, 0],
    "chart_certified": [2, 1, 2, 0, 4],
    "chart_pullback": "2*t0^2 - 2*t0*t1 + 2*(2*t0*t2 + t1^2) + 4*t2^2",
    "chart_sos": [(1, "t0 - t1"), (1, "t0 + 2*t2"), (1, "t1")],
    "sextic": (
        "x1^2*x2^2*x3^2 - 4*x0*x2^3*x3^2 - 4*x1^3*x3^3 + 18*x0*x1*x2*x3^3 - 27*x0^2*x3^4"
        " - 4*x1^2*x2^3*x4 + 16*x0*x2^4*x4 + 18*x1^3*x2*x3*x4 - 80*x0*x1*x2^2*x3*x4"
        " - 6*x0*x1^2*x3^2*x4 + 144*x0^2*x2*x3^2*x4 - 27*x1^4*x4^2 + 144*x0*x1^2*x2*x4^2"
        " - 128*x0^2*x2^2*x4^2 - 192*x0^2*x1*x3*x4^2 + 256*x0^3*x4^3"
    ),
    "normal_curve": ["s0^4", "s0^3*s1", "s0^2*s1^2", "s0*s1^3", "s1^4"],
}

# -- Veronese projection, signature (3,0) -------------------------------------------------

VERONESE_EX2 = {
    "point": [1, 0, 0, 1, 0, 1],
    "basis": ["t0^2 - t1^2", "t0^2 - t2^2", "t0*t1", "t0*t2", "t1*t2"],
    "generators": [
        "x2*x3^2 - x0*x3*x4 - x2*x4^2",
        "x2^2*x3 - x1*x2*x4 - x3*x4^2",
        "x1*x2*x3 - x0*x1*x4 - x2^2*x4 + x4^3",
        "x0*x2*x3 - x0*x1*x4 - x3^2*x4 + x4^3",
        "x0^2*x3 - x0*x1*x3 - x3^3 + x0*x2*x4 + x3*x4^2",
        "x0*x1*x2 - x1^2*x2 + x2^3 - x1*x3*x4 - x2*x4^2",
        "x0^2*x1 - x0*x1^2 + x0*x2^2 - x1*x3^2 - x0*x4^2 + x1*x4^2",
    ],
    "curve_quadrics": [
        "x2*x3 - 2*x0*x4 - 2*x1*x4",
        "2*x0*x3 + x2*x4",
        "2*x1*x2 + x3*x4",
        "4*x1^2 + x3^2 + x4^2",
        "4*x0*x1 - x4^2",
        "4*x0^2 + x2^2 + x4^2",
    ],
    "sextic": (
        "x0^4*x1^2 - 2*x0^3*x1^3 + x0^2*x1^4 + 2*x0^3*x1*x2^2 + 2*x0^2*x1^2*x2^2 - 8*x0*x1^3*x2^2"
        " + 4*x1^4*x2^2 + x0^2*x2^4 + 8*x0*x1*x2^4 - 8*x1^2*x2^4 + 4*x2^6 + 4*x0^4*x3^2"
        " - 8*x0^3*x1*x3^2 + 2*x0^2*x1^2*x3^2 + 2*x0*x1^3*x3^2 + 20*x0^2*x2^2*x3^2"
        " - 38*x0*x1*x2^2*x3^2 + 20*x1^2*x2^2*x3^2 + 12*x2^4*x3^2 - 8*x0^2*x3^4 + 8*x0*x1*x3^4"
        " + x1^2*x3^4 + 12*x2^2*x3^4 + 4*x3^6 + 8*x0^3*x2*x3*x4 - 12*x0^2*x1*x2*x3*x4"
        " - 12*x0*x1^2*x2*x3*x4 + 8*x1^3*x2*x3*x4 + 36*x0*x2^3*x3*x4 - 72*x1*x2^3*x3*x4"
        " - 72*x0*x2*x3^3*x4 + 36*x1*x2*x3^3*x4 - 2*x0^3*x1*x4^2 + 8*x0^2*x1^2*x4^2"
        " - 2*x0*x1^3*x4^2 + 2*x0^2*x2^2*x4^2 - 2*x0*x1*x2^2*x4^2 + 20*x1^2*x2^2*x4^2"
        " + 12*x2^4*x4^2 + 20*x0^2*x3^2*x4^2 - 2*x0*x1*x3^2*x4^2 + 2*x1^2*x3^2*x4^2"
        " - 84*x2^2*x3^2*x4^2 + 12*x3^4*x4^2 + 36*x0*x2*x3*x4^3 + 36*x1*x2*x3*x4^3"
        " + x0^2*x4^4 - 10*x0*x1*x4^4 + x1^2*x4^4 + 12*x2^2*x4^4 + 12*x3^2*x4^4 + 4*x4^6"
    ),
    "sos": [
        (4, "-x1^2*x2 + x0*x1*x2 - 2*x2*x3^2 + x2^3 - x1*x3*x4 + 2*x0*x3*x4 + x2*x4^2"),
        (4, "x0^2*x3 - x0*x1*x3 + 2*x2^2*x3 - x3^3 + x0*x2*x4 - 2*x1*x2*x4 - x3*x4^2"),
        (1, "2*x0*x1*x4 - x0*x2*x3 - x1*x2*x3 + x2^2*x4 + x3^2*x4 - 2*x4^3"),
        (1, "x0^2*x1 - x0*x1^2 + x0*x2^2 - x0*x4^2 - x1*x3^2 + x1*x4^2"),
        (3, "x0*x2*x3 - x1*x2*x3 + x2^2*x4 - x3^2*x4"),
        (12, "x2*x3^2 - x0*x3*x4 - x2*x4^2"),
        (12, "x2^2*x3 - x1*x2*x4 - x3*x4^2"),
    ],
}


# -- Del Pezzo surfaces --------------------------------------------------------------------

def _pencil_pair(entries):
    """Split a printed pencil matrix with entries (a, b) = a*lam + b*mu into (V0, Vinf)."""
    V0 = SymMatrix([[e[0] for e in row] for row in entries])
    Vinf = SymMatrix([[e[1] for e in row] for row in entries])
    return V0, Vinf


_Z = (0, 0)

DELPEZZO_EX37 = {
    "name": "S^2 type",
    "f0": "x0^2 - x1^2 - x2^2 - x3^2 - x4^2",
    "finf": "2*x2^2 - 2*x1*x3 + 2*x0*x4",
    "printed_pencil": _pencil_pair([
        [(-1, 0), _Z, _Z, _Z, (0, 1)],
        [_Z, (1, 0), _Z, (0, -1), _Z],
        [_Z, _Z, (1, 2), _Z, _Z],
        [_Z, (0, -1), _Z, (1, 0), _Z],
        [(0, 1), _Z, _Z, _Z, (1, 0)],
    ]),
    "members": [
        ("(3,1,1)", "x0^2 - x1^2 - 3*x2^2 + 2*x1*x3 - x3^2 - 2*x0*x4 - x4^2"),
        ("(3,1,1)", "2*x0^2 - 2*x1^2 - 2*x1*x3 - 2*x3^2 + 2*x0*x4 - 2*x4^2"),
        ("(2,2,1)", "x0^2 - x1^2 + x2^2 - 2*x1*x3 - x3^2 + 2*x0*x4 - x4^2"),
    ],
    "printed_params": [(1, 1), (1, -1), (2, -1)],
    "params_for": "printed_pencil",  # the parameters refer to the printed matrix, i.e. -lam*f0 + mu*finf
    "real_type": "Q31",
    "real_count": 3,
    "chart": [1, 0, 0, 0, 0],
    "section": [-1, 2, 0, 0, 0],  # 2 x1 - x0 = 0, i.e. 2 x1 - 1 = 0 in the chart x0 = 1
}

DELPEZZO_EX38 = {
    "name": "S^1 x S^1 type",
    "f0": "2*x0^2 - 3*x1^2 - x2^2 + x4^2",
    "finf": "3*x0^2 - 2*x1^2 - x3^2 - x4^2",
    "printed_pencil": _pencil_pair([
        [(2, 3), _Z, _Z, _Z, _Z],
        [_Z, (-3, -2), _Z, _Z, _Z],
        [_Z, _Z, (-1, -1), _Z, _Z],
        [_Z, _Z, _Z, (0, -1), _Z],
        [_Z, _Z, _Z, _Z, (1, -1)],
    ]),
    "members": [
        ("(3,1,1)", "5*x0^2 - 5*x1^2 - x2^2 - x3^2"),
        ("(3,1,1)", "3*x0^2 - 2*x1^2 - x3^2 - x4^2"),
        ("(2,2,1)", "2*x0^2 - 3*x1^2 - x2^2 + x4^2"),
        ("(2,2,1)", "5*x1^2 + 3*x2^2 - 2*x3^2 - 5*x4^2"),
        ("(2,2,1)", "5*x0^2 + 2*x2^2 - 3*x3^2 - 5*x4^2"),
    ],
    "printed_params": [(1, 1), (0, 1), (1, 0), (-3, 2), (-2, 3)],
    "real_type": "Q22",
    "real_count": 5,
    "chart": [1, 0, 0, 0, 0],
    "section": [0, 0, 1, 0, 0],
}

DELPEZZO_EX39 = {
    "name": "two-sphere type",
    "f0": "2*x0^2 - x1^2 - x3^2 - x4^2",
    "finf": "x0^2 - 2*x1^2 - x2^2 - x4^2",
    "printed_pencil": _pencil_pair([
        [(2, 1), _Z, _Z, _Z, _Z],
        [_Z, (-1, -2), _Z, _Z, _Z],
        [_Z, _Z, (0, -1), _Z, _Z],
        [_Z, _Z, _Z, (-1, 0), _Z],
        [_Z, _Z, _Z, _Z, (-1, -1)],
    ]),
    "members": [
        ("V1", "2*x0^2 - x1^2 - x3^2 - x4^2"),
        ("V2", "x0^2 - 2*x1^2 - x2^2 - x4^2"),
        ("V3", "3*x1^2 + 2*x2^2 - x3^2 + x4^2"),
        ("V4", "x0^2 + x1^2 + x2^2 - x3^2"),
        ("(2,2,1)", "3*x0^2 + x2^2 - 2*x3^2 - x4^2"),
    ],
    "printed_params": [(0, 1), (1, 0), (1, -2), (1, -1), (2, -1)],
    "real_type": "D4",
    "real_count": 5,
    # signs of V_j at the vertex p_i: rows i, columns j, None on the diagonal
    "sign_table": [
        [None, 1, 1, 1],
        [1, None, -1, -1],
        [-1, -1, None, 1],
        [1, 1, 1, None],
    ],
    "pairs": [("V1", "V2"), ("V3", "V4")],
    "chart": [1, 0, 0, 0, 0],
    "second_chart": [0, 0, 0, 1, 0],
    "section": [0, 1, 0, 0, 0],
}

# -- Bordiga surface: sums of three squares of conics ----------------------------------------

BORDIGA_FINAL = {
    "f2_conics": [
        "2*x0^2 + x0*x1 + 2*x0*x2 - x1^2",
        "x0^2 - x1^2 - x2^2",
        "x0^2 - 2*x0*x2 - x1^2 - x1*x2 - 3*x2^2",
    ],
    "f2_nodes": [(1, -1, 0), (1, 0, -1)],
    "f3_conics": [
        "x0*x1 + x0*x2 - x1^2 - x2^2",
        "x0*x1 + 4*x0*x2 - x1^2 - 4*x1*x2 - 4*x2^2",
        "2*x0*x1 - 2*x0*x2 - 2*x1^2 - x1*x2 + 2*x2^2",
    ],
    "f3_nodes": [(1, 0, 0), (1, 1, 0), (1, 0, 1)],
    "conjugate_pairs": 8,
}


def delpezzo_examples() -> dict:
    return {"delpezzo_ex37": DELPEZZO_EX37, "delpezzo_ex38": DELPEZZO_EX38, "delpezzo_ex39": DELPEZZO_EX39}

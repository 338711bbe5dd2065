"""Re-derivation of the count coefficient table from tabulated counts.

This is a verification oracle, not a runtime path: it solves small exact
linear systems for the linear forms q_1..q_4 (and the cusp form) from
known counts and checks every redundant data point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra.matrix import rref
from .counts import CUSPIDAL_FORM, NODAL_FORMS, bell_numerator


@dataclass(frozen=True)
class CorpusPoint:
    quadruple: tuple[int, int, int, int]
    delta: int  # number of nodes; 0 marks a one-cusp count
    value: int
    citation: str


DEL_PEZZO = (4, -4, 4, 8)
BORDIGA = (6, -2, -1, 13)
K3 = (6, 0, 0, 24)
PLANE_QUARTICS = (16, -12, 9, 3)
PLANE_CUBICS = (9, -9, 9, 3)
VERONESE = (4, -6, 9, 3)
DEL_PEZZO_NODE = (1, -3, 4, 8)
BORDIGA_NODE = (3, -1, -1, 13)

# published counts
PUBLISHED: tuple[CorpusPoint, ...] = (
    CorpusPoint(DEL_PEZZO, 1, 12, "degree table, Del Pezzo, X^[1]"),
    CorpusPoint(DEL_PEZZO, 2, 26, "degree table, Del Pezzo, X^[2]"),
    CorpusPoint(DEL_PEZZO, 3, 40, "degree table, Del Pezzo, X^[3]"),
    CorpusPoint(DEL_PEZZO, 4, 40, "degree table, Del Pezzo, X^[4]"),
    CorpusPoint(BORDIGA, 1, 27, "degree table, Bordiga, X^[1]"),
    CorpusPoint(BORDIGA, 2, 235, "degree table, Bordiga, X^[2]"),
    CorpusPoint(BORDIGA, 3, 875, "degree table, Bordiga, X^[3]"),
    CorpusPoint(BORDIGA, 4, 1761, "degree table, Bordiga, X^[4]"),
    CorpusPoint(K3, 1, 42, "degree table, K3, X^[1]"),
    CorpusPoint(K3, 2, 672, "degree table, K3, X^[2]"),
    CorpusPoint(K3, 3, 5460, "degree table, K3, X^[3]"),
    CorpusPoint(K3, 4, 25650, "degree table, K3, X^[4]"),
    CorpusPoint(VERONESE, 1, 3, "degree table, Veronese, X^[1]"),
    CorpusPoint(PLANE_QUARTICS, 1, 27, "one-nodal plane quartics through 13 points"),
    CorpusPoint(PLANE_QUARTICS, 2, 225, "two-nodal plane quartics through 12 points"),
    CorpusPoint(PLANE_QUARTICS, 3, 675, "three-nodal plane quartics through 11 points (printed with subscript A_1^4)"),
    CorpusPoint(PLANE_QUARTICS, 4, 666, "four-nodal plane quartics through 10 points"),
    CorpusPoint(DEL_PEZZO_NODE, 1, 5, "cubics with a node at a base point through the other 4 points"),
    CorpusPoint(PLANE_CUBICS, 1, 12, "nodal plane cubics through 8 points (discriminant degree)"),
    CorpusPoint(BORDIGA_NODE, 1, 20, "quartics with a node at p_i, one further node"),
    CorpusPoint(BORDIGA_NODE, 2, 114, "quartics with a node at p_i, two further nodes"),
    CorpusPoint(BORDIGA_NODE, 0, 48, "quartics with a node at p_i and a cusp"),
)

# classical cuspidal counts 12(n-1)(n-2) for plane curves of degree n = 2, 3, 4;
# not among the published counts; needed because one cusp count cannot fix four coefficients
CLASSICAL_CUSPIDAL: tuple[CorpusPoint, ...] = (
    CorpusPoint(VERONESE, 0, 0, "classical: no cuspidal conics"),
    CorpusPoint(PLANE_CUBICS, 0, 24, "classical: 24 cuspidal cubics through 7 points"),
    CorpusPoint(PLANE_QUARTICS, 0, 72, "classical: 72 cuspidal quartics through 13 points"),
)


class Underdetermined(ValueError):
    def __init__(self, rank: int, message: str):
        super().__init__(message)
        self.rank = rank


class InconsistentCorpus(ValueError):
    pass


def solve_linear_form(rows: Sequence[tuple[Sequence[int], Fraction]]) -> tuple[int, ...]:
    """Exact solution c of c . v = value over all rows; requires full rank 4 and consistency."""
    aug = [[Fraction(a) for a in v] + [Fraction(val)] for v, val in rows]
    m, pivots = rref(aug)
    if 4 in pivots:
        raise InconsistentCorpus("the data points admit no common linear form")
    if len(pivots) < 4:
        raise Underdetermined(len(pivots), f"rank {len(pivots)} data for 4 unknowns")
    sol = [m[i][4] for i in range(4)]
    if any(x.denominator != 1 for x in sol):
        raise InconsistentCorpus(f"non-integral coefficients {sol}")
    return tuple(int(x) for x in sol)


def _lin(c, quad):
    return sum(a * b for a, b in zip(c, quad))


@dataclass
class FitReport:
    nodal: tuple[tuple[int, int, int, int], ...]
    cuspidal: tuple[int, int, int, int] | None
    rows_used: dict
    cusp_rank_from_published: int

    def matches_shipped(self) -> bool:
        return self.nodal == NODAL_FORMS and self.cuspidal == CUSPIDAL_FORM


def fit_nodal_forms(corpus: Sequence[CorpusPoint] = PUBLISHED):
    """Fit q_1..q_4 in turn; q_i at a point is recovered from N_i and the lower q's."""
    by_point: dict = {}
    for p in corpus:
        if p.delta >= 1:
            by_point.setdefault(p.quadruple, {})[p.delta] = p.value
    forms: list[tuple[int, ...]] = []
    used = {}
    for delta in range(1, 5):
        rows = []
        for quad, vals in by_point.items():
            if not all(j in vals for j in range(1, delta + 1)):
                continue
            lower = [_lin(f, quad) for f in forms]
            # delta! N_delta = B_delta(q_1..q_delta); B is linear in q_delta with coefficient 1
            known = bell_numerator(delta, lower + [0])
            rows.append((quad, factorial(delta) * vals[delta] - known))
        forms.append(solve_linear_form(rows))
        used[delta] = [r[0] for r in rows]
    return tuple(forms), used


def fit_cuspidal_form(corpus: Sequence[CorpusPoint]) -> tuple[int, int, int, int]:
    rows = [(p.quadruple, p.value) for p in corpus if p.delta == 0]
    return solve_linear_form(rows)


def cusp_rank(corpus: Sequence[CorpusPoint]) -> int:
    rows = [[Fraction(a) for a in p.quadruple] for p in corpus if p.delta == 0]
    return len(rref(rows)[1]) if rows else 0


def derive_table(include_classical: bool = True) -> FitReport:
    nodal, used = fit_nodal_forms(PUBLISHED)
    corpus = list(PUBLISHED) + (list(CLASSICAL_CUSPIDAL) if include_classical else [])
    try:
        cusp = fit_cuspidal_form(corpus)
    except Underdetermined:
        cusp = None
    return FitReport(nodal, cusp, used, cusp_rank(PUBLISHED))

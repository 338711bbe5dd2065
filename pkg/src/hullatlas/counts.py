"""Universal node/cusp counts for linear systems on surfaces.

A linear system |D| on a smooth surface X is summarized by the quadruple
(d, k, s, x) = (D.D, D.K, K.K, euler characteristic of X).  The number of
members with delta nodes is the coefficient of t^delta in
exp(sum_i q_i t^i / i!), each q_i a fixed linear form in the quadruple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

# coefficient vectors on (d, k, s, x); provenance and re-derivation in kazarian_fit
NODAL_FORMS: tuple[tuple[int, int, int, int], ...] = (
    (3, 2, 0, 1),
    (-42, -39, -6, -7),
    (1380, 1576, 376, 138),
    (-72360, -95670, -28842, -3888),
)
CUSPIDAL_FORM: tuple[int, int, int, int] = (12, 12, 2, 2)

MAX_DELTA = 4


class FormulaInapplicable(ValueError):
    """The universal formula does not apply to this input (the Veronese case)."""

    flag = "formula inapplicable"


@dataclass(frozen=True)
class ChernInput:
    d: int
    k: int
    s: int
    x: int
    provenance: str = field(default="raw", compare=False)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.d, self.k, self.s, self.x)

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k, "s": self.s, "x": self.x, "provenance": self.provenance}


# the plane with |2L|: conics, i.e. the Veronese embedding, where the formula fails
VERONESE_QUADRUPLE = (4, -6, 9, 3)


@dataclass(frozen=True)
class SurfaceSystem:
    """Descriptor of a surface with a linear system.

    ``kind`` is one of ``blowup_plane``, ``complete_intersection_K3``,
    ``veronese`` or ``raw``.
    """

    kind: str
    degree: int = 0
    multiplicities: tuple[int, ...] = ()
    raw: tuple[int, int, int, int] | None = None
    description: str = ""

    @classmethod
    def blowup_plane(cls, degree: int, multiplicities: Sequence[int] = (), description: str = "") -> "SurfaceSystem":
        mult = tuple(int(m) for m in multiplicities)
        desc = description or f"plane curves of degree {degree} with multiplicities {list(mult)}"
        return cls("blowup_plane", int(degree), mult, None, desc)

    @classmethod
    def k3(cls) -> "SurfaceSystem":
        return cls("complete_intersection_K3", description="K3 surface, complete intersection of a quadric and a cubic in P^4")

    @classmethod
    def veronese(cls) -> "SurfaceSystem":
        return cls("veronese", description="Veronese surface: conics on the plane")

    @classmethod
    def from_raw(cls, d: int, k: int, s: int, x: int, description: str = "raw quadruple") -> "SurfaceSystem":
        return cls("raw", raw=(int(d), int(k), int(s), int(x)), description=description)

    @classmethod
    def parse(cls, text: str) -> "SurfaceSystem":
        """Parse ``delpezzo``, ``bordiga``, ``k3``, ``veronese``, ``plane:a`` or
        ``blowup:a:m1,m2,...`` or ``raw:d,k,s,x`` (also a JSON object with the same fields)."""
        text = text.strip()
        if text.startswith("{"):
            import json
            data = json.loads(text)
            kind = data["kind"]
            if kind == "blowup_plane":
                return cls.blowup_plane(data["degree"], data.get("multiplicities", ()))
            if kind == "raw":
                return cls.from_raw(*data["raw"])
            return cls.parse(kind)
        low = text.lower()
        named = {
            "delpezzo": lambda: cls.blowup_plane(3, [1] * 5, "Del Pezzo surface: cubics through 5 points"),
            "bordiga": lambda: cls.blowup_plane(4, [1] * 10, "Bordiga surface: quartics through 10 points"),
            "k3": cls.k3,
            "veronese": cls.veronese,
        }
        if low in named:
            return named[low]()
        head, _, rest = low.partition(":")
        if head == "plane":
            return cls.blowup_plane(int(rest))
        if head == "blowup":
            a, _, ms = rest.partition(":")
            mults = [int(m) for m in ms.split(",") if m.strip()] if ms else []
            return cls.blowup_plane(int(a), mults)
        if head == "raw":
            return cls.from_raw(*[int(v) for v in rest.split(",")])
        raise ValueError(f"unknown surface descriptor {text!r}")


def chern_input(sys: SurfaceSystem) -> ChernInput:
    if sys.kind == "blowup_plane":
        a, m = sys.degree, sys.multiplicities
        r = len(m)
        return ChernInput(a * a - sum(v * v for v in m), -3 * a + sum(m), 9 - r, 3 + r, sys.description)
    if sys.kind == "complete_intersection_K3":
        return ChernInput(6, 0, 0, 24, sys.description)
    if sys.kind == "veronese":
        return ChernInput(*VERONESE_QUADRUPLE, sys.description)
    if sys.kind == "raw":
        return ChernInput(*sys.raw, sys.description)
    raise ValueError(f"unknown surface kind {sys.kind!r}")


def _linear(coeffs, c: ChernInput) -> int:
    return sum(a * b for a, b in zip(coeffs, c.as_tuple()))


def cumulants(c: ChernInput, forms=NODAL_FORMS) -> list[int]:
    return [_linear(q, c) for q in forms]


def bell_numerator(delta: int, q: Sequence[int]) -> int:
    """delta! times the coefficient of t^delta in exp(sum q_i t^i / i!)."""
    # complete Bell polynomial recursion: B_n = sum_{i=1}^n C(n-1, i-1) q_i B_{n-i}
    from math import comb
    B = [1]
    for n in range(1, delta + 1):
        B.append(sum(comb(n - 1, i - 1) * q[i - 1] * B[n - i] for i in range(1, n + 1)))
    return B[delta]


def count_nodal(delta: int, c: ChernInput, forms=NODAL_FORMS) -> int:
    """Number of delta-nodal members of the system (delta = 1..4)."""
    if not 1 <= delta <= MAX_DELTA:
        raise ValueError(f"delta must be between 1 and {MAX_DELTA}")
    if delta >= 2 and c.as_tuple() == VERONESE_QUADRUPLE:
        raise FormulaInapplicable(
            "the universal nodal formula does not apply to conics on the plane (Veronese surface) for delta >= 2"
        )
    num = bell_numerator(delta, cumulants(c, forms))
    den = factorial(delta)
    if num % den:
        raise ArithmeticError(f"non-integral count {Fraction(num, den)}: coefficient table is corrupted")
    return num // den


def count_cuspidal(c: ChernInput, form=CUSPIDAL_FORM) -> int:
    """Number of one-cusp members of the system."""
    return _linear(form, c)


@dataclass(frozen=True)
class StoredConstant:
    name: str
    value: int
    citation: str


_STORED = {
    "N_A1A1A2_quartics": (2304, "number of plane quartics through 8 general points with two nodes and a cusp"),
    "severi_arith_genus": (5447, "arithmetic genus of the curve cut on the 3-nodal quartic Severi variety"),
    "severi_geom_genus": (725, "geometric genus of the same curve"),
    "branch_degree": (8, "branch curve of the triple cover: degree"),
    "branch_cusps": (12, "branch curve of the triple cover: number of cusps"),
}


def stored_constant(name: str) -> StoredConstant:
    if name not in _STORED:
        raise KeyError(f"unknown stored constant {name!r}; known: {sorted(_STORED)}")
    value, cite = _STORED[name]
    return StoredConstant(name, value, cite)


def stored_constant_names() -> list[str]:
    return sorted(_STORED)


def parse_class(text: str) -> tuple[str, int]:
    """``A1``, ``A1^3`` -> ("nodal", delta); ``A2`` -> ("cuspidal", 1)."""
    t = text.strip().upper().replace(" ", "")
    if t == "A2":
        return "cuspidal", 1
    if t == "A1":
        return "nodal", 1
    if t.startswith("A1^"):
        return "nodal", int(t[3:])
    raise ValueError(f"unsupported singularity class {text!r}")

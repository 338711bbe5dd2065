"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
coefficients, together with an ordered tuple of variable names.  Arithmetic
between polynomials over different variable lists aligns them by name.
Coefficients are ``Fraction`` by default; ``GaussianRational`` also works.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .numbers import GaussianRational, as_rational, rational_str


def _coeff(c):
    if isinstance(c, (Fraction, GaussianRational)):
        return c
    return as_rational(c)


def _natural_key(name: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


def grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping | None = None, vars: Sequence[str] = ()):
        self.vars = tuple(vars)
        n = len(self.vars)
        if len(set(self.vars)) != n:
            raise ValueError(f"duplicate variable names in {self.vars}")
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match variables {self.vars}")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent")
                c = _coeff(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def const(cls, c, vars: Sequence[str] = ()) -> "Poly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> "Poly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            vars = vars + (name,)
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {exp: Fraction(1)})

    @classmethod
    def gens(cls, names: Iterable[str]) -> list["Poly"]:
        names = tuple(names)
        return [cls.var(n, names) for n in names]

    @classmethod
    def linear(cls, coeffs: Sequence, vars: Sequence[str]) -> "Poly":
        n = len(vars)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, vars)

    @classmethod
    def quadratic_form(cls, matrix, vars: Sequence[str]) -> "Poly":
        """x^T M x for a symmetric matrix given as nested rows."""
        n = len(vars)
        terms = {}
        for i in range(n):
            for j in range(i, n):
                c = _coeff(matrix[i][j])
                if i != j:
                    c = 2 * c
                if c:
                    e = [0] * n
                    e[i] += 1
                    e[j] += 1
                    terms[tuple(e)] = c
        return cls(terms, vars)

    # basic predicates
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_form(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        if degree is None or not degs:
            return True
        return degs == {degree}

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def coefficient(self, monomial: Mapping[str, int] | Sequence[int]):
        if isinstance(monomial, Mapping):
            exp = tuple(int(monomial.get(v, 0)) for v in self.vars)
            extra = set(monomial) - set(self.vars)
            if any(monomial[v] for v in extra):
                return Fraction(0)
        else:
            exp = tuple(monomial)
        return self.terms.get(exp, Fraction(0))

    # alignment
    def with_vars(self, vars: Sequence[str]) -> "Poly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for i, v in enumerate(self.vars):
            if v in vars:
                idx.append(vars.index(v))
            else:
                if any(e[i] for e in self.terms):
                    raise ValueError(f"variable {v} occurs but is dropped")
                idx.append(None)
        n = len(vars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(idx):
                if k is not None:
                    ne[k] = e[i]
            terms[tuple(ne)] = c
        return Poly._raw(vars, terms)

    def _align(self, other: "Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return vars, self.with_vars(vars).terms, other.with_vars(vars).terms

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational, str)):
            return Poly.const(other, self.vars)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vars, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c0 = _coeff(other)
            if not c0:
                return Poly._raw(self.vars, {})
            return Poly._raw(self.vars, {e: c * c0 for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vars, a, b = self._align(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                return self.divexact(other)
            other = other.constant_value()
        c0 = _coeff(other)
        return Poly._raw(self.vars, {e: c / c0 for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Poly.const(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        _, a, b = self._align(other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            self._hash = hash((used, frozenset(self.with_vars(used).terms.items())))
        return self._hash

    # ordering helpers
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def divexact(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises ``ValueError`` if not exact."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        vars, rem, div = self._align(other)
        rem = dict(rem)
        if len(div) == 1:
            (de, dc), = div.items()
            out = {}
            for e, c in rem.items():
                q = tuple(x - y for x, y in zip(e, de))
                if min(q, default=0) < 0:
                    raise ValueError("inexact polynomial division")
                out[q] = c / dc
            return Poly._raw(vars, out)
        lead_e = max(div, key=grlex_key)
        lead_c = div[lead_e]
        rest = [(e, c) for e, c in div.items() if e != lead_e]
        quot = {}
        while rem:
            e = max(rem, key=grlex_key)
            c = rem.pop(e)
            q = tuple(x - y for x, y in zip(e, lead_e))
            if min(q, default=0) < 0:
                raise ValueError("inexact polynomial division")
            f = c / lead_c
            quot[q] = f
            for e2, c2 in rest:
                t = tuple(x + y for x, y in zip(q, e2))
                v = rem.get(t, 0) - f * c2
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Poly._raw(vars, quot)

    # calculus / structure
    def diff(self, var: str) -> "Poly":
        if var not in self.vars:
            return Poly._raw(self.vars, {})
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly._raw(self.vars, out)

    def coeffs_in(self, var: str) -> list["Poly"]:
        """Coefficients of powers of ``var`` (index = power), as polynomials in the other variables."""
        others = tuple(v for v in self.vars if v != var)
        if var not in self.vars:
            return [self.with_vars(others)] if self.terms else []
        i = self.vars.index(var)
        d = self.degree(var)
        buckets = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        return [Poly._raw(others, b) for b in buckets]

    @classmethod
    def from_coeffs_in(cls, var: str, coeffs: Sequence["Poly"], vars: Sequence[str] | None = None) -> "Poly":
        t = cls.var(var, vars)
        out = cls.const(0, t.vars)
        for k, c in enumerate(coeffs):
            if isinstance(c, Poly):
                if c:
                    out = out + c * t ** k
            elif c:
                out = out + t ** k * c
        return out

    def univariate_coeffs(self, var: str | None = None) -> list:
        """Dense coefficient list (low degree first) of a polynomial in one variable."""
        used = self.used_vars()
        if var is None:
            if len(used) > 1:
                raise ValueError(f"not univariate: {used}")
            var = used[0] if used else (self.vars[0] if self.vars else "t")
        elif set(used) - {var}:
            raise ValueError(f"not univariate in {var}: {used}")
        if not self.terms:
            return []
        if var not in self.vars:
            return [self.constant_value()]
        i = self.vars.index(var)
        out = [Fraction(0)] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    @classmethod
    def from_univariate(cls, coeffs: Sequence, var: str = "t") -> "Poly":
        return cls({(k,): c for k, c in enumerate(coeffs)}, (var,))

    def homogenize(self, var: str, degree: int | None = None) -> "Poly":
        d = self.degree() if degree is None else degree
        h = Poly.var(var, self.vars)
        vars = h.vars
        base = self.with_vars(vars)
        i = vars.index(var)
        out = {}
        for e, c in base.terms.items():
            ne = list(e)
            ne[i] += d - sum(e)
            if ne[i] < 0:
                raise ValueError("degree too small to homogenize")
            out[tuple(ne)] = c
        return Poly._raw(vars, out)

    # evaluation
    def substitute(self, bindings: Mapping[str, object]) -> "Poly":
        """Compose: replace each bound variable by a polynomial or scalar."""
        targets: list[str] = []
        for v in self.vars:
            if v in bindings:
                b = bindings[v]
                if isinstance(b, Poly):
                    targets.extend(w for w in b.vars if w not in targets)
            elif v not in targets:
                targets.append(v)
        targets_t = tuple(targets)
        images = []
        for v in self.vars:
            b = bindings[v] if v in bindings else Poly.var(v, targets_t)
            if isinstance(b, Poly):
                images.append(b.with_vars(targets_t))
            else:
                images.append(Poly.const(b, targets_t))
        powers: list[dict[int, Poly]] = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        out = Poly._raw(targets_t, {})
        for e, c in self.terms.items():
            term = Poly.const(c, targets_t)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a point given as a mapping or a sequence aligned with ``vars``."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.vars]
        else:
            vals = list(point)
            if len(vals) != len(self.vars):
                raise ValueError("point has wrong length")
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x ** k
            total = total + t
        return total

    def evaluate_float(self, points: np.ndarray) -> np.ndarray:
        """Vectorized floating-point evaluation at rows of ``points``."""
        pts = np.atleast_2d(np.asarray(points))
        out = np.zeros(pts.shape[0], dtype=np.result_type(pts.dtype, float))
        for e, c in self.terms.items():
            cf = complex(c) if isinstance(c, GaussianRational) else float(c)
            term = np.full(pts.shape[0], cf, dtype=np.result_type(out.dtype, type(cf)))
            for i, k in enumerate(e):
                if k:
                    term = term * pts[:, i] ** k
            out = out + term
        return out

    # normalization
    def map_coeffs(self, fn) -> "Poly":
        return Poly(dict((e, fn(c)) for e, c in self.terms.items()), self.vars)

    def is_rational(self) -> bool:
        return all(not isinstance(c, GaussianRational) or c.im == 0 for c in self.terms.values())

    def to_rational(self) -> "Poly":
        def demote(c):
            if isinstance(c, GaussianRational):
                if c.im != 0:
                    raise ValueError("coefficient is not rational")
                return c.re
            return c
        return Poly._raw(self.vars, {e: demote(c) for e, c in self.terms.items()})

    def monic(self) -> "Poly":
        """Divide by the grlex-leading coefficient."""
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self / c

    def primitive(self) -> "Poly":
        """Rational multiple with coprime integer coefficients and positive leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm
        p = self.monic()
        if not p.is_rational():
            raise ValueError("primitive part needs rational coefficients")
        p = p.to_rational()
        den = 1
        for c in p.terms.values():
            den = lcm(den, c.denominator)
        nums = [int(c * den) for c in p.terms.values()]
        g = 0
        for k in nums:
            g = gcd(g, k)
        return p * Fraction(den, g)

    # text / json
    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Poly({self.to_text()!r}, vars={self.vars!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            if isinstance(c, GaussianRational):
                cs, neg = str(c), False
            else:
                neg = c < 0
                cs = rational_str(abs(c))
            if mon:
                body = mon if cs == "1" else f"{cs}*{mon}"
            else:
                body = cs
            parts.append(("-", body) if neg else ("+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            if isinstance(c, GaussianRational):
                raise ValueError("JSON form is defined for rational coefficients only")
            terms.append({"exp": list(e), "coeff": rational_str(c)})
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        vars = tuple(data["vars"])
        return cls({tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]}, vars)

    @classmethod
    def parse(cls, text: str, vars: Sequence[str] | None = None) -> "Poly":
        return _Parser(text).parse(vars)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class _Parser:
    """Recursive-descent parser for polynomial text.

    Accepts ``+ - * / ^ **``, parentheses, integer literals and implicit
    multiplication.  Underscores in names are dropped, so ``x_0`` is ``x0``.
    """

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 12]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("var", name.replace("_", "")))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def parse(self, vars):
        names = [t[1] for t in self.tokens if t[0] == "var"]
        if vars is None:
            vars = sorted(set(names), key=_natural_key)
        else:
            vars = list(vars) + sorted(set(names) - set(vars), key=_natural_key)
        self.vars = tuple(vars)
        if not self.tokens:
            raise ValueError("empty polynomial text")
        out = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.tokens[self.i][1]!r}")
        return out

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                out = out * self.unary()
            elif (kind, val) == ("op", "/"):
                self.take()
                den = self.unary()
                if not den.is_constant() or not den:
                    raise ValueError("division only by nonzero constants")
                out = out / den.constant_value()
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                out = out * self.power()
            else:
                return out

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val, self.vars)
        if kind == "var":
            return Poly.var(val, self.vars)
        if (kind, val) == ("op", "("):
            out = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return out
        raise ValueError(f"unexpected token {val!r}")


def P(text: str, vars: Sequence[str] | None = None) -> Poly:
    """Shorthand for :meth:`Poly.parse`."""
    return Poly.parse(text, vars)

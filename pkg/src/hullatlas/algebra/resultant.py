"""Sylvester resultants and discriminants via fraction-free Bareiss elimination."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly


def _exact_div(a, b):
    if isinstance(a, Poly):
        return a.divexact(b) if isinstance(b, Poly) else a / b
    return a / b


def _is_zero(a) -> bool:
    return not a


def bareiss_det(rows):
    """Determinant of a square matrix over an integral domain.

    Entries may be Fractions, Gaussian rationals or :class:`Poly`; every
    division performed is exact.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else _exact_div(v, prev)
            m[i][k] = m[i][k] * 0
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(f_coeffs, g_coeffs):
    """Sylvester matrix from coefficient lists given lowest degree first."""
    m = len(f_coeffs) - 1
    n = len(g_coeffs) - 1
    size = m + n
    zero = f_coeffs[0] * 0
    rows = []
    fh = list(reversed(f_coeffs))
    gh = list(reversed(g_coeffs))
    for i in range(n):
        rows.append([zero] * i + fh + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gh + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Classical resultant res_var(f, g) = lc(f)^deg g * prod g(roots of f).

    If one argument has degree 0 in ``var`` the result is that argument
    raised to the degree of the other one (both constant gives 1).
    """
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    vars = f.vars + tuple(v for v in g.vars if v not in f.vars)
    if var not in vars:
        vars = vars + (var,)
    f, g = f.with_vars(vars), g.with_vars(vars)
    others = tuple(v for v in vars if v != var)
    fc, gc = f.coeffs_in(var), g.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0 and n == 0:
        return Poly.const(1, others)
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    return bareiss_det(sylvester_matrix(fc, gc))


def discriminant(f: Poly, var: str) -> Poly:
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f), with n = deg_var f."""
    if not f:
        raise ValueError("discriminant of the zero polynomial")
    n = f.degree(var)
    if n < 1:
        raise ValueError(f"degree in {var} must be at least 1")
    if n == 1:
        return Poly.const(1, tuple(v for v in f.vars if v != var))
    r = resultant(f, f.diff(var), var)
    lc = f.coeffs_in(var)[-1]
    d = r.divexact(lc.with_vars(r.vars)) if not lc.is_constant() else r / lc.constant_value()
    return -d if (n * (n - 1) // 2) % 2 else d


def binary_form_discriminant(form: Poly, s0: str, s1: str) -> Poly:
    """Discriminant of a binary form of degree n, via dehomogenizing s1 = 1.

    The coefficient of s0^n is kept as a formal leading coefficient, so the
    result is the discriminant of the binary form itself.
    """
    i0, i1 = form.vars.index(s0), form.vars.index(s1)
    degs = {e[i0] + e[i1] for e in form.terms}
    if len(degs) != 1:
        raise ValueError("expected a form in the binary variables")
    n = degs.pop()
    deh = form.substitute({s1: 1})
    deg = deh.degree(s0)
    if deg < n:
        raise ValueError("the binary form vanishes at [1:0] identically; swap variables")
    return discriminant(deh, s0)

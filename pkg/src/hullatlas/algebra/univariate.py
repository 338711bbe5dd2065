"""Dense univariate polynomials over Q and exact real-root isolation.

Polynomials are plain lists of Fractions, lowest degree first.  The Sturm
machinery works on the square-free part and reports multiplicities
through Yun's square-free decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

Q = Fraction


def trim(p: Sequence) -> list:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def scale(a, c):
    return trim([x * c for x in a])


def divmod_poly(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i in range(db + 1):
            r[i + k] -= f * b[i]
        r = trim(r)
    return trim(q), r


def monic(a):
    a = trim(a)
    return [c / a[-1] for c in a] if a else []


def gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def sign(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_part(a):
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial")
    if len(a) == 1:
        return [Fraction(1)]
    g = gcd(a, derivative(a))
    return monic(divmod_poly(a, g)[0])


def yun(a) -> list[list]:
    """Square-free decomposition: factors g_1, g_2, ... with a ~ prod g_i^i."""
    a = trim(a)
    if len(a) <= 1:
        return []
    d = derivative(a)
    g = gcd(a, d)
    b = divmod_poly(a, g)[0]
    c = divmod_poly(d, g)[0]
    dd = sub(c, derivative(b))
    out = []
    while degree(b) > 0:
        f = gcd(b, dd)
        out.append(monic(f))
        b = divmod_poly(b, f)[0]
        c = divmod_poly(dd, f)[0]
        dd = sub(c, derivative(b))
    while out and degree(out[-1]) == 0:
        out.pop()
    return out


def integer_coeffs(a):
    """Positive rational multiple with integer coefficients."""
    a = trim(a)
    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in a]


def sturm_chain(a):
    a = trim(a)
    if degree(a) < 1:
        return [a]
    chain = [a, derivative(a)]
    while True:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if not r:
            break
        r = [-c / abs(r[-1]) for c in r]  # positive rescaling keeps the sign pattern
        chain.append(r)
    return chain


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def variations_at(chain, x) -> int:
    return _variations([sign(evaluate(p, x)) for p in chain])


def variations_at_infinity(chain, positive: bool) -> int:
    signs = []
    for p in chain:
        s = sign(p[-1])
        if not positive and (len(p) - 1) % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def root_bound(a) -> Fraction:
    """Cauchy bound: every complex root has modulus below it."""
    a = trim(a)
    lead = abs(a[-1])
    return 1 + max((abs(c) / lead for c in a[:-1]), default=Fraction(0))


def count_roots(a, lo=None, hi=None, chain=None) -> int:
    """Distinct real roots of ``a`` in (lo, hi]; ``None`` means infinite."""
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial")
    if len(a) == 1:
        return 0
    sq = squarefree_part(a) if chain is None else None
    chain = chain if chain is not None else sturm_chain(sq)
    vlo = variations_at_infinity(chain, False) if lo is None else variations_at(chain, lo)
    vhi = variations_at_infinity(chain, True) if hi is None else variations_at(chain, hi)
    return vlo - vhi


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval [lo, hi] of a real root; lo == hi marks an exact rational root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint())


@dataclass
class RealRoots:
    count: int
    intervals: list[RootInterval] = field(default_factory=list)

    def multiplicities(self) -> list[int]:
        return [iv.multiplicity for iv in self.intervals]


def _isolate_squarefree(sq, lo=None, hi=None) -> list[tuple[Fraction, Fraction]]:
    chain = sturm_chain(sq)
    bound = root_bound(sq)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    out = []
    if evaluate(sq, lo) == 0:
        out.append((lo, lo))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = variations_at(chain, a) - variations_at(chain, b)
        if n == 0:
            continue
        if n == 1:
            if evaluate(sq, b) == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            continue
        m = (a + b) / 2
        if evaluate(sq, m) == 0:
            # keep endpoints off roots: peel an exact root out of the middle
            out.append((m, m))
            eps = (b - a) / 4
            while variations_at(chain, m - eps) - variations_at(chain, m + eps) != 1:
                eps /= 2
            stack.append((a, m - eps))
            stack.append((m + eps, b))
            continue
        stack.append((a, m))
        stack.append((m, b))
    out.sort()
    return out


def sturm_real_roots(a, lo=None, hi=None) -> RealRoots:
    """Count and isolate the distinct real roots of ``a`` in [lo, hi] (whole line by default).

    Intervals are half-open (lo, hi] pieces unless exact; each carries the
    root's multiplicity in ``a``.
    """
    a = trim(a)
    if not a:
        raise ValueError("zero polynomial")
    if len(a) == 1:
        return RealRoots(0, [])
    sq = squarefree_part(a)
    raw = _isolate_squarefree(sq, lo, hi)
    factors = yun(a)
    intervals = []
    for x, y in raw:
        mult = 0
        for i, g in enumerate(factors, start=1):
            if degree(g) < 1:
                continue
            if x == y:
                hit = evaluate(g, x) == 0
            else:
                hit = count_roots(g, x, y) == 1
            if hit:
                mult = i
                break
        intervals.append(RootInterval(x, y, mult))
    return RealRoots(len(intervals), intervals)


def refine(a, iv: RootInterval, width) -> RootInterval:
    """Bisect an isolating interval of a root of square-free ``a`` below ``width``."""
    if iv.exact:
        return iv
    a = trim(a)
    lo, hi = iv.lo, iv.hi
    slo = sign(evaluate(a, lo))
    width = Fraction(width)
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sign(evaluate(a, m))
        if sm == 0:
            return RootInterval(m, m, iv.multiplicity)
        if sm == slo:
            lo = m
        else:
            hi = m
    return RootInterval(lo, hi, iv.multiplicity)


def rational_roots(a) -> list[Fraction]:
    """All rational roots of ``a`` (distinct, ascending)."""
    a = trim(a)
    if len(a) <= 1:
        return []
    sq = squarefree_part(a)
    ints = integer_coeffs(sq)
    lead = abs(ints[-1])
    out = []
    for iv in sturm_real_roots(sq).intervals:
        if iv.exact:
            out.append(iv.lo)
            continue
        # two distinct rationals with denominators dividing ``lead`` are 1/lead^2 apart
        iv = refine(sq, iv, Fraction(1, 4 * lead * lead))
        if iv.exact:
            out.append(iv.lo)
            continue
        cand = iv.midpoint().limit_denominator(lead)
        if evaluate(sq, cand) == 0:
            out.append(cand)
    return sorted(out)


def sign_at_root(f, root_poly, iv: RootInterval) -> int:
    """Sign of ``f`` at the unique root of square-free ``root_poly`` isolated by ``iv``."""
    f = trim(f)
    if not f:
        return 0
    if iv.exact or degree(f) == 0:
        return sign(evaluate(f, iv.lo))
    g = gcd(f, root_poly)
    if degree(g) > 0 and count_roots(g, iv.lo, iv.hi) == 1:
        return 0
    fchain = sturm_chain(squarefree_part(f))
    cur = iv
    while True:
        if count_roots(f, cur.lo, cur.hi, chain=fchain) == 0 and evaluate(f, cur.hi) != 0:
            return sign(evaluate(f, cur.midpoint()))
        cur = refine(root_poly, cur, (cur.hi - cur.lo) / 4)
        if cur.exact:
            return sign(evaluate(f, cur.lo))

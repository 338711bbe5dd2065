"""Exact symmetric matrices, signatures and congruence diagonalization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numbers import as_rational, rational_str
from .poly import Poly
from .resultant import bareiss_det


class CorankError(ValueError):
    """Raised when a kernel vector is requested from a matrix of corank >= 2."""

    def __init__(self, corank: int):
        super().__init__(f"kernel has dimension {corank}, expected at most 1")
        self.corank = corank


@dataclass(frozen=True, order=True)
class Signature:
    positive: int
    negative: int
    zero: int

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    def normalized(self) -> "Signature":
        """Representative up to global sign: positive >= negative."""
        if self.negative > self.positive:
            return Signature(self.negative, self.positive, self.zero)
        return self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    def __str__(self):
        return f"({self.positive},{self.negative},{self.zero})"


class SymMatrix:
    """Immutable symmetric matrix with Fraction entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(as_rational(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("symmetric matrix must be square and nonempty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        self.n = n
        self.rows = rows

    @classmethod
    def diag(cls, entries: Sequence) -> "SymMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls.diag([1] * n)

    @classmethod
    def from_quadratic_form(cls, f: Poly, vars: Sequence[str]) -> "SymMatrix":
        """Gram matrix: x^T M x = f, off-diagonal entries halved."""
        f = f.with_vars(tuple(vars))
        if not f.is_form(2) and f:
            raise ValueError("not a quadratic form")
        n = len(vars)
        m = [[Fraction(0)] * n for _ in range(n)]
        for e, c in f.terms.items():
            idx = [i for i, k in enumerate(e) for _ in range(k)]
            i, j = idx
            if i == j:
                m[i][i] = c
            else:
                m[i][j] = m[j][i] = c / 2
        return cls(m)

    @classmethod
    def from_json(cls, data) -> "SymMatrix":
        return cls([[Fraction(str(x)) for x in r] for r in data])

    def to_json(self) -> list[list[str]]:
        return [[rational_str(x) for x in r] for r in self.rows]

    def quadratic_form(self, vars: Sequence[str]) -> Poly:
        return Poly.quadratic_form(self.rows, vars)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SymMatrix":
        c = as_rational(c)
        return SymMatrix([[c * x for x in r] for r in self.rows])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def congruent(self, T: Sequence[Sequence]) -> "SymMatrix":
        """T^T M T."""
        return SymMatrix(matmul(transpose(T), matmul(self.rows, T)))

    def bilinear(self, x, y):
        return sum(x[i] * self.rows[i][j] * y[j] for i in range(self.n) for j in range(self.n))

    def value(self, x):
        return self.bilinear(x, x)

    def apply(self, x):
        return [sum(a * b for a, b in zip(r, x)) for r in self.rows]

    def det(self) -> Fraction:
        return bareiss_det(self.rows)

    def rank(self) -> int:
        return rank(self.rows)

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    def diagonal(self) -> list[Fraction]:
        return [self.rows[i][i] for i in range(self.n)]

    def to_float(self):
        import numpy as np
        return np.array([[float(x) for x in r] for r in self.rows])

    def __repr__(self):
        return f"SymMatrix({[[rational_str(x) for x in r] for r in self.rows]})"


# plain-list linear algebra over Q

def transpose(A):
    return [list(c) for c in zip(*A)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(r, c)) for c in Bt] for r in A]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rref(A):
    """Reduced row echelon form and pivot columns."""
    m = [[as_rational(x) for x in r] for r in A]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(A) -> int:
    if not A:
        return 0
    return len(rref(A)[1])


def nullspace(A, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    m, pivots = rref(A)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [bv] for r, bv in zip(A, b)]
    m, pivots = rref(aug)
    n = len(A[0])
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = m[r][n]
    return x


def inverse(A):
    n = len(A)
    aug = [list(r) + e for r, e in zip(A, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in m]


def congruence_diagonalize(M: SymMatrix):
    """Return (T, D) with T invertible and T^T M T = D diagonal (D as a list)."""
    n = M.n
    A = [list(r) for r in M.rows]
    T = identity(n)

    def col_op(j, i, f):
        # column/row j += f * column/row i, on A and on T
        for r in range(n):
            A[r][j] += f * A[r][i]
        for c in range(n):
            A[j][c] += f * A[i][c]
        for r in range(n):
            T[r][j] += f * T[r][i]

    def swap(i, j):
        if i == j:
            return
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        A[i], A[j] = A[j], A[i]
        for r in range(n):
            T[r][i], T[r][j] = T[r][j], T[r][i]

    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            col_op(i, j, Fraction(1))  # new diagonal entry 2*A[i][j] != 0
            piv = i
        swap(k, piv)
        p = A[k][k]
        for i in range(k + 1, n):
            if A[i][k] != 0:
                col_op(i, k, -A[i][k] / p)
    D = [A[i][i] for i in range(n)]
    return T, D


def signature_congruence(M: SymMatrix) -> Signature:
    _, D = congruence_diagonalize(M)
    return Signature(sum(1 for d in D if d > 0), sum(1 for d in D if d < 0), sum(1 for d in D if d == 0))


def charpoly(rows) -> list:
    """Characteristic polynomial det(zI - A), coefficients lowest degree first.

    Faddeev-LeVerrier; entries may be Fractions or polynomials in a parameter.
    """
    n = len(rows)
    A = [list(r) for r in rows]
    zero = A[0][0] * 0
    one = zero + 1
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    Mk = [[zero] * n for _ in range(n)]
    c = one
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = Mk
        Mk = matmul(A, prev) if k > 1 else [[zero] * n for _ in range(n)]
        for i in range(n):
            Mk[i][i] = Mk[i][i] + c
        AM = matmul(A, Mk)
        tr = sum((AM[i][i] for i in range(n)), zero)
        c = tr * Fraction(-1, k)
        coeffs[n - k] = c
    return coeffs


def signature_from_charpoly(coeffs) -> Signature:
    """Signature from the characteristic polynomial of a symmetric matrix.

    All roots are real, so Descartes' rule of signs is exact.
    """
    n = len(coeffs) - 1
    z = next(i for i, c in enumerate(coeffs) if c != 0) if any(c != 0 for c in coeffs) else n

    def variations(seq):
        s = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    pos = variations(list(reversed(coeffs)))
    neg = variations([c if i % 2 == 0 else -c for i, c in reversed(list(enumerate(coeffs)))])
    return Signature(pos, neg, z)


def signature_charpoly(M: SymMatrix) -> Signature:
    return signature_from_charpoly(charpoly(M.rows))


def signature(M: SymMatrix, method: str = "congruence") -> Signature:
    if method == "congruence":
        return signature_congruence(M)
    if method == "charpoly":
        return signature_charpoly(M)
    raise ValueError(f"unknown signature method {method!r}")


def kernel_vector(M: SymMatrix):
    """Spanning vector of ker M when the corank is 1; None when M is nonsingular."""
    basis = nullspace(M.rows)
    if not basis:
        return None
    if len(basis) > 1:
        raise CorankError(len(basis))
    v = basis[0]
    # scale to coprime integers for readability
    from math import gcd, lcm
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for k in ints:
        g = gcd(g, k)
    lead = next(k for k in ints if k)
    if lead < 0:
        g = -g
    return [Fraction(k, g) for k in ints]


def generalized_inverse(M: SymMatrix) -> SymMatrix:
    """Symmetric M+ with M M+ M = M, built as T D+ T^T from a congruence diagonalization."""
    T, D = congruence_diagonalize(M)
    Dp = [1 / d if d != 0 else Fraction(0) for d in D]
    n = M.n
    rows = [[sum(T[i][k] * Dp[k] * T[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    return SymMatrix(rows)

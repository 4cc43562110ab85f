"""Exact arithmetic kernel: rational polynomials, sign-based real-root
counting, and integer matrix normal forms.

Nothing in this module touches floating point.  Every decision made
elsewhere in the package that matters for a classification (CL / real /
strip verdicts, lattice indices, box points) bottoms out in the routines
here, so they are kept exact on `fractions.Fraction` and Python integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

BigRational = Fraction
RatLike = Union[int, Fraction]

NEG_INF = float("-inf")
POS_INF = float("inf")


class SingularMatrixError(ValueError):
    """Raised when an exact linear solve meets a singular matrix."""


def _as_fraction(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


# ----------------------------------------------------------------------
# Dense rational polynomials
# ----------------------------------------------------------------------

class RatPoly:
    """Dense univariate polynomial over Q, constant coefficient first.

    Immutable; trailing zero coefficients are stripped on construction.
    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RatPoly is immutable")

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "RatPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}*z^{k}" if k else f"{c}")
        return "RatPoly(" + " + ".join(terms) + ")"

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power")
        result = RatPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        den = other.coeffs
        lead = den[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(den) - 1] / lead
            quo[k] = c
            if c:
                for j, dcoef in enumerate(den):
                    rem[k + j] -= c * dcoef
        return RatPoly(quo), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    # -- calculus and evaluation ------------------------------------------

    def derivative(self) -> "RatPoly":
        return RatPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, approximate for
        float/complex arguments."""
        acc = 0 if not isinstance(x, (float, complex)) else type(x)(0)
        for c in reversed(self.coeffs):
            if isinstance(x, (float, complex)):
                acc = acc * x + float(c)
            else:
                acc = acc * x + c
        return acc

    def compose_linear(self, a: RatLike, b: RatLike) -> "RatPoly":
        """Return p(a*z + b), computed by Horner over RatPoly."""
        lin = RatPoly([_as_fraction(b), _as_fraction(a)])
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + RatPoly([c])
        return acc

    def shift(self, c: RatLike) -> "RatPoly":
        """Taylor shift: return p(z + c)."""
        return self.compose_linear(1, c)

    def reflect(self) -> "RatPoly":
        """Return p(-z)."""
        return RatPoly([(-1) ** k * c for k, c in enumerate(self.coeffs)])

    # -- gcd / square-free machinery ---------------------------------------

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a.monic()

    def squarefree_part(self) -> "RatPoly":
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self.exact_div(g)

    def squarefree_decomposition(self) -> list[tuple["RatPoly", int]]:
        """Yun's algorithm: return [(f_i, i)] with the f_i square-free,
        pairwise coprime, and prod f_i^i = self up to a scalar."""
        if self.degree <= 0:
            return []
        out: list[tuple[RatPoly, int]] = []
        dp = self.derivative()
        a0 = self.gcd(dp)
        b = self.exact_div(a0)
        c = dp.exact_div(a0)
        d = c - b.derivative()
        i = 1
        while b.degree > 0:
            ai = b.gcd(d)
            if ai.degree > 0:
                out.append((ai, i))
            b = b.exact_div(ai) if ai.degree > 0 else b
            c = d.exact_div(ai) if ai.degree > 0 else d
            d = c - b.derivative()
            i += 1
        return out

    def content_and_primitive(self) -> tuple[Fraction, "RatPoly"]:
        """Write p = content * primitive with primitive having coprime
        integer coefficients and positive leading coefficient."""
        if self.is_zero:
            return Fraction(0), self
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        if ints[-1] < 0:
            g = -g
        prim = RatPoly([v // g for v in ints])
        return Fraction(g, den), prim

    def primitive(self) -> "RatPoly":
        return self.content_and_primitive()[1]


def binomial_poly(offset: int, d: int) -> RatPoly:
    """The degree-d polynomial binom(z + offset, d) in z.

    At integer arguments this agrees with the usual binomial coefficient,
    e.g. binomial_poly(0, 3)(5) == comb(5, 3).
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    p = RatPoly([1])
    for j in range(d):
        p = p * RatPoly([Fraction(offset - j), Fraction(1)])
    return p * Fraction(1, math.factorial(d))


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple[int, ...]:
    if d == 1:
        return (1,)
    prev = _eulerian_row(d - 1)
    row = []
    for j in range(d):
        left = (j + 1) * prev[j] if j < d - 1 else 0
        right = (d - j) * prev[j - 1] if j >= 1 else 0
        row.append(left + right)
    return tuple(row)


def eulerian(d: int, j: int) -> int:
    """Eulerian number A(d, j): permutations of {1..d} with j descents.

    Out-of-range j gives 0 so the number can be used freely in sums.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if j < 0 or j > d - 1:
        return 0
    return _eulerian_row(d)[j]


# ----------------------------------------------------------------------
# Sign-based real root counting
# ----------------------------------------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_changes(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _chain_signs_at(chain: Sequence[RatPoly], x) -> list[int]:
    if x == POS_INF:
        return [_sign(p.leading) for p in chain if not p.is_zero]
    if x == NEG_INF:
        return [_sign(p.leading) * (-1) ** p.degree for p in chain if not p.is_zero]
    xf = _as_fraction(x)
    return [_sign(p(xf)) for p in chain if not p.is_zero]


def _sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def sturm_distinct_real_roots(p: RatPoly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoints may be Fractions, ints, or +/-math.inf.  The count is taken
    on the square-free part of p, so multiplicities are ignored.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if not _endpoint_lt(lo, hi):
        raise ValueError("need lo < hi")
    s = p.squarefree_part()
    if s.degree <= 0:
        return 0
    chain = _sturm_chain(s)
    return _sign_changes(_chain_signs_at(chain, lo)) - _sign_changes(
        _chain_signs_at(chain, hi)
    )


def _endpoint_lt(lo, hi) -> bool:
    lo_inf = lo == NEG_INF
    hi_inf = hi == POS_INF
    if lo_inf or hi_inf:
        return not (lo == hi)
    return _as_fraction(lo) < _as_fraction(hi)


def descartes_positive_bound(p: RatPoly) -> int:
    """Descartes bound on the number of positive real roots (sign changes
    of the coefficient sequence)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    return _sign_changes([_sign(c) for c in p.coeffs])


def all_roots_real_nonneg(p: RatPoly) -> bool:
    """True iff every complex root of p is real and >= 0.

    Decided exactly: the square-free part must have as many distinct real
    roots in [0, oo) as its degree.  A Descartes check on p(-z) guards the
    positive answer.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    s = p.squarefree_part()
    if s.degree <= 0:
        return True
    count = sturm_distinct_real_roots(s, 0, POS_INF)
    if s(Fraction(0)) == 0:
        count += 1
    ok = count == s.degree
    if ok and descartes_positive_bound(p.reflect()) != 0:
        raise AssertionError("Sturm and Descartes disagree; exact kernel bug")
    return ok


def routh_right_halfplane_count(p: RatPoly) -> int | None:
    """Number of roots of p with strictly positive real part, via an exact
    rational Routh array.

    Returns None (degenerate) whenever a leading array entry vanishes; in
    that case roots may lie on the imaginary axis and callers must fall
    back to other evidence.  When an integer is returned it is exact and
    certifies that no root lies on the imaginary axis.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    n = p.degree
    if n == 0:
        return 0
    a = list(reversed(p.coeffs))  # highest degree first
    rows: list[list[Fraction]] = [a[0::2], a[1::2]]
    if not rows[1] or rows[1][0] == 0:
        return None
    for k in range(2, n + 1):
        prev, prev2 = rows[k - 1], rows[k - 2]
        pivot = prev[0]
        if pivot == 0:
            return None
        width = len(prev2) - 1
        new = []
        for j in range(width):
            b = prev2[j + 1]
            c = prev[j + 1] if j + 1 < len(prev) else Fraction(0)
            new.append((pivot * b - prev2[0] * c) / pivot)
        if not new:
            return None
        rows.append(new)
    first_col = [row[0] for row in rows]
    if any(v == 0 for v in first_col):
        return None
    return _sign_changes([_sign(v) for v in first_col])


# ----------------------------------------------------------------------
# Resultants and discriminants
# ----------------------------------------------------------------------

def resultant(p: RatPoly, q: RatPoly) -> Fraction:
    """Resultant of p and q via the Sylvester determinant."""
    if p.is_zero or q.is_zero:
        return Fraction(0)
    n, m = p.degree, q.degree
    if n == 0:
        return p.leading ** m
    if m == 0:
        return q.leading ** n
    size = n + m
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(m):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - m - 1 - i))
    return _fraction_det(rows)


def discriminant(p: RatPoly) -> Fraction:
    """Disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lead(p)."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.leading


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    mat = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        pv = mat[col][col]
        det *= pv
        for i in range(col + 1, n):
            f = mat[i][col] / pv
            if f:
                for j in range(col, n):
                    mat[i][j] -= f * mat[col][j]
    return det


# ----------------------------------------------------------------------
# Integer matrices and normal forms
# ----------------------------------------------------------------------

class IntMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise ValueError("rows must be nonempty and of equal length")
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("IntMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.data]})"

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.data))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.data]
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.data)))

    def det(self) -> int:
        """Fraction-free Bareiss determinant (square matrices)."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        mat = [list(r) for r in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if mat[k][k] == 0:
                piv = next((i for i in range(k + 1, n) if mat[i][k] != 0), None)
                if piv is None:
                    return 0
                mat[k], mat[piv] = mat[piv], mat[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
                mat[i][k] = 0
            prev = mat[k][k]
        return sign * mat[n - 1][n - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.data]


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms: U * M * V == S, U and V
    unimodular, S diagonal with nonnegative entries d1 | d2 | ...
    """
    r, c = M.rows, M.cols
    a = M.to_lists()
    u = IntMatrix.identity(r).to_lists()
    v = IntMatrix.identity(c).to_lists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(r, c):
        # locate a pivot of minimal magnitude in the trailing block
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t below the pivot
            progressed = False
            for i in range(t + 1, r):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        progressed = True
            if progressed:
                continue
            for j in range(t + 1, c):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        progressed = True
            if progressed:
                continue
            # pivot must divide the remaining block for the divisor chain
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return IntMatrix(u), IntMatrix(a), IntMatrix(v)


def elementary_divisors(M: IntMatrix) -> tuple[int, ...]:
    _, s, _ = smith_normal_form(M)
    return tuple(s.data[i][i] for i in range(min(M.rows, M.cols)))


def hermite_normal_form(M: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form H = M * V (V unimodular).

    Convention: rows are processed bottom-up, giving an upper-triangular H
    for square nonsingular M with positive diagonal and, within each pivot
    row, entries to the right of the pivot reduced modulo it
    (0 <= H[i][j] < H[i][i] for j > i).  |det| is preserved.
    """
    r, c = M.rows, M.cols
    h = M.to_lists()

    def col_addmul(dst, src, f):
        for row in h:
            row[dst] += f * row[src]

    def col_neg(j):
        for row in h:
            row[j] = -row[j]

    unpivoted = list(range(c))
    pivots: list[tuple[int, int]] = []  # (row, col) in processing order
    for row in range(r - 1, -1, -1):
        while True:
            nz = [j for j in unpivoted if h[row][j] != 0]
            if len(nz) <= 1:
                break
            jmin = min(nz, key=lambda j: abs(h[row][j]))
            for j in nz:
                if j == jmin:
                    continue
                q = h[row][j] // h[row][jmin]
                col_addmul(j, jmin, -q)
        nz = [j for j in unpivoted if h[row][j] != 0]
        if not nz:
            continue
        j = nz[0]
        if h[row][j] < 0:
            col_neg(j)
        g = h[row][j]
        for _, pj in pivots:
            q = h[row][pj] // g
            if q:
                col_addmul(pj, j, -q)
        pivots.append((row, j))
        unpivoted.remove(j)
    if unpivoted:
        raise ValueError("matrix does not have full column rank")
    # place the pivot of the i-th processed row (from the bottom) at column
    # c-1-i so that square matrices come out upper triangular
    perm = [0] * c
    for k, (_, j) in enumerate(pivots):
        perm[c - 1 - k] = j
    return IntMatrix([[row[perm[j]] for j in range(c)] for row in h])


def row_hermite_basis(rows: Iterable[Iterable[int]]) -> list[list[int]]:
    """Basis (as reduced rows) of the lattice generated by the given rows.

    Row-style HNF: pivots move left to right down the returned rows, each
    pivot is positive, and entries above a pivot are reduced modulo it.
    Zero rows are dropped, so the result has one row per lattice rank.
    """
    mat = [list(map(int, row)) for row in rows]
    if not mat:
        return []
    n_cols = len(mat[0])
    pr = 0
    for col in range(n_cols):
        while True:
            nz = [i for i in range(pr, len(mat)) if mat[i][col] != 0]
            if not nz:
                break
            imin = min(nz, key=lambda i: abs(mat[i][col]))
            mat[pr], mat[imin] = mat[imin], mat[pr]
            done = True
            for i in range(pr + 1, len(mat)):
                if mat[i][col] != 0:
                    q = mat[i][col] // mat[pr][col]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[pr])]
                    if mat[i][col] != 0:
                        done = False
            if done:
                break
        if pr < len(mat) and mat[pr][col] != 0:
            if mat[pr][col] < 0:
                mat[pr] = [-x for x in mat[pr]]
            for i in range(pr):
                q = mat[i][col] // mat[pr][col]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[pr])]
            pr += 1
            if pr == len(mat):
                break
    return [row for row in mat[:pr]]


def solve_linear_exact(
    A: IntMatrix | Sequence[Sequence[RatLike]], b: Sequence[RatLike]
) -> list[Fraction]:
    """Exact solution x of A x = b (A square nonsingular)."""
    rows = A.to_lists() if isinstance(A, IntMatrix) else [list(r) for r in A]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("A must be square")
    if len(b) != n:
        raise ValueError("dimension mismatch")
    mat = [[_as_fraction(v) for v in row] + [_as_fraction(bv)]
           for row, bv in zip(rows, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular matrix")
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [v / pv for v in mat[col]]
        for i in range(n):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[col])]
    return [mat[i][n] for i in range(n)]


def fraction_matrix_inverse(
    rows: Sequence[Sequence[RatLike]],
) -> list[list[Fraction]]:
    """Exact inverse of a square matrix over Q."""
    n = len(rows)
    mat = [[_as_fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    if any(len(r) != 2 * n for r in mat):
        raise ValueError("matrix must be square")
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("singular matrix")
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [v / pv for v in mat[col]]
        for i in range(n):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[col])]
    return [row[n:] for row in mat]

"""Root location for counting polynomials.

Two layers coexist on purpose:

* a numerical layer (`find_roots`) — simultaneous Aberth iteration at
  double precision, polished by Newton steps in capped-denominator
  rational arithmetic, with residual-based error radii; and
* an exact layer — the substitutions z = -1/2 + beta*i and z = -1/2 + alpha
  turn the critical-line and real-root questions for a palindromic vector
  into sign questions about a real polynomial in u = beta^2 (resp. alpha^2),
  which Sturm counts decide exactly in any dimension.

Strip verdicts try the exact route first (a rational Routh array on a
shifted polynomial) and fall back to numerical roots with error radii only
when the array degenerates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .delta import DeltaVector, ehrhart_polynomial
from .exact import (
    NEG_INF,
    POS_INF,
    RatPoly,
    all_roots_real_nonneg,
    routh_right_halfplane_count,
    sturm_distinct_real_roots,
)

HOLDS_EXACT = "holds-exact"
HOLDS_NUMERIC = "holds-numeric"
FAILS_EXACT = "fails-exact"
FAILS_NUMERIC = "fails-numeric"
BOUNDARY_INDETERMINATE = "boundary-indeterminate"

HYPOTHESES = ("CL", "Real", "NCS", "CS", "HS", "S")


class NumericalFailure(RuntimeError):
    """The iterative solver did not converge; retry at higher precision."""


class RequiresReflexiveError(ValueError):
    """Operation needs a palindromic (reflexive) delta-vector."""


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    multiplicity: int
    error_radius: float


@dataclass(frozen=True)
class RootSet:
    roots: tuple[ComplexRoot, ...]
    degree: int

    def csv_rows(self) -> list[tuple[float, float, int, float]]:
        return [(r.re, r.im, r.multiplicity, r.error_radius) for r in self.roots]


@dataclass(frozen=True)
class HypothesisVerdict:
    verdict: str
    witness: tuple[float, float] | None = None

    @property
    def holds(self) -> bool:
        return self.verdict in (HOLDS_EXACT, HOLDS_NUMERIC)

    def to_json(self):
        w = None if self.witness is None else {"re": self.witness[0], "im": self.witness[1]}
        return {"verdict": self.verdict, "witness": w}


@dataclass(frozen=True)
class HypothesisReport:
    dimension: int
    verdicts: dict[str, HypothesisVerdict]

    def to_json(self):
        return {name: self.verdicts[name].to_json() for name in HYPOTHESES}


# ----------------------------------------------------------------------
# Numerical root finding
# ----------------------------------------------------------------------

_ABERTH_OFFSETS = (0.7390851332151607, 1.4142135623730951, 2.2360679774997896)
_ABERTH_MAX_ITER = 400
_POLISH_STEPS = 3
_POLISH_DENOM_CAP = 10 ** 50
_RADIUS_SAFETY = 10.0


def _float_coeffs(p: RatPoly) -> list[float]:
    scale = max(abs(c) for c in p.coeffs)
    return [float(c / scale) for c in p.coeffs]


def _initial_radius(cs: list[float]) -> float:
    """Root magnitude bound in the style of Fujiwara: the k-th roots keep
    the estimate overflow-safe even when coefficient ratios are huge."""
    n = len(cs) - 1
    lead = abs(cs[-1])
    best = 0.0
    for k in range(1, n + 1):
        a = abs(cs[n - k])
        if a:
            best = max(best, (a / lead) ** (1.0 / k))
    return 2.0 * best + 1.0


def _aberth_roots(p: RatPoly) -> list[complex]:
    n = p.degree
    cs = _float_coeffs(p)
    if n == 1:
        return [-cs[0] / cs[1]]
    dcs = [k * c for k, c in enumerate(cs)][1:]

    def ev(coeffs, z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    def finite(z: complex) -> bool:
        return math.isfinite(z.real) and math.isfinite(z.imag)

    radius = _initial_radius(cs)
    # the attainable step size floors out somewhere between machine epsilon
    # and ~1e-6 depending on conditioning; anything at that level is ample
    # input for the rational Newton polish, whose error radii are computed
    # exactly afterwards in any case
    tol = 2e-14 * n
    for offset in _ABERTH_OFFSETS:
        zs = [
            radius * cmath.exp(1j * (2.0 * math.pi * k / n + offset))
            for k in range(n)
        ]
        best: list[complex] | None = None
        best_moved = math.inf
        for _ in range(_ABERTH_MAX_ITER):
            moved = 0.0
            for k in range(n):
                z = zs[k]
                pv = ev(cs, z)
                if pv == 0:
                    continue
                dv = ev(dcs, z)
                if not (finite(pv) and finite(dv)) or dv == 0:
                    # overflow or a stationary point: pull inward and retry
                    zs[k] = z * 0.5 + 1e-8 * (1 + 1j)
                    moved = math.inf
                    continue
                newton = pv / dv
                s = sum(1.0 / (z - zs[j]) for j in range(n) if j != k)
                denom = 1.0 - newton * s
                step = newton if denom == 0 else newton / denom
                if not finite(step):
                    zs[k] = z * 0.5 + 1e-8 * (1 - 1j)
                    moved = math.inf
                    continue
                zs[k] = z - step
                moved = max(moved, abs(step) / max(1.0, abs(zs[k])))
            if moved < best_moved and all(finite(z) for z in zs):
                best_moved = moved
                best = zs[:]
            if moved < tol and all(finite(z) for z in zs):
                return zs
        if best is not None and best_moved < 1e-6:
            return best  # stagnated at the conditioning floor; good enough
        # retry from a rotated starting circle
    raise NumericalFailure(f"Aberth iteration did not converge at degree {n}")


def _cx_eval(coeffs: tuple[Fraction, ...], re: Fraction, im: Fraction):
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def _polish_root(p: RatPoly, dp: RatPoly, z: complex, real_root: bool):
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericalFailure("non-finite iterate reached the polishing stage")
    re = Fraction(z.real)
    im = Fraction(0) if real_root else Fraction(z.imag)
    for _ in range(_POLISH_STEPS):
        pr, pi = _cx_eval(p.coeffs, re, im)
        dr, di = _cx_eval(dp.coeffs, re, im)
        dn = dr * dr + di * di
        if dn == 0:
            break
        qr = (pr * dr + pi * di) / dn
        qi = (pi * dr - pr * di) / dn
        re = (re - qr).limit_denominator(_POLISH_DENOM_CAP)
        im = Fraction(0) if real_root else (im - qi).limit_denominator(_POLISH_DENOM_CAP)
    pr, pi = _cx_eval(p.coeffs, re, im)
    dr, di = _cx_eval(dp.coeffs, re, im)
    resid = math.hypot(float(pr), float(pi))
    dmag = math.hypot(float(dr), float(di))
    radius = _RADIUS_SAFETY * resid / dmag if dmag > 0 else math.inf
    return float(re), float(im), radius


def _solve_squarefree(factor: RatPoly) -> list[tuple[float, float, float]]:
    """Roots of a square-free rational polynomial as (re, im, radius)."""
    n = factor.degree
    if n == 1:
        r = -factor.coeffs[0] / factor.coeffs[1]
        return [(float(r), 0.0, 1e-15 * (1.0 + abs(float(r))))]
    approx = _aberth_roots(factor)
    n_real = sturm_distinct_real_roots(factor, NEG_INF, POS_INF)
    order = sorted(range(n), key=lambda k: abs(approx[k].imag))
    real_idx = set(order[:n_real])
    dp = factor.derivative()
    polished = [
        _polish_root(factor, dp, approx[k], real_root=(k in real_idx))
        for k in range(n)
    ]
    # enforce conjugate symmetry on the nonreal part
    out = [polished[k] for k in range(n) if k in real_idx]
    nonreal = [polished[k] for k in range(n) if k not in real_idx]
    upper = sorted((r for r in nonreal if r[1] > 0), key=lambda r: (r[0], r[1]))
    lower = sorted((r for r in nonreal if r[1] <= 0), key=lambda r: (r[0], -r[1]))
    for up, lo in zip(upper, lower):
        re = 0.5 * (up[0] + lo[0])
        im = 0.5 * (up[1] - lo[1])
        rad = max(up[2], lo[2]) + abs(up[0] - lo[0]) + abs(up[1] + lo[1])
        out.append((re, im, rad))
        out.append((re, -im, rad))
    return out


@lru_cache(maxsize=512)
def find_roots(p: RatPoly) -> RootSet:
    """All complex roots of p with multiplicities and error radii.

    Multiplicities come from an exact square-free decomposition, so each
    numerical solve only ever sees simple roots; the number of real roots
    per factor is fixed by an exact Sturm count before any snapping to the
    real axis.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    roots: list[ComplexRoot] = []
    for factor, mult in p.squarefree_decomposition():
        for re, im, rad in _solve_squarefree(factor):
            roots.append(ComplexRoot(re, im, mult, rad))
    roots.sort(key=lambda r: (r.re, r.im))
    rs = RootSet(tuple(roots), p.degree)
    assert sum(r.multiplicity for r in rs.roots) == p.degree
    return rs


def root_sum_is_reflexive(p: RatPoly, d: int) -> bool:
    """Exact test that the roots sum to -d/2, i.e. coefficient ratio
    c_{d-1} / c_d equals d/2."""
    if p.degree != d:
        raise ValueError("degree mismatch")
    if d == 0:
        raise ValueError("need degree >= 1")
    return p.coefficient(d - 1) / p.coefficient(d) == Fraction(d, 2)


# ----------------------------------------------------------------------
# Exact transforms for palindromic vectors
# ----------------------------------------------------------------------

def _symmetric_half(dv: DeltaVector) -> RatPoly:
    """Coefficients e_k with L(w - 1/2) = sum_k e_k w^(2k + parity); the
    off-parity part must vanish for palindromic input."""
    if not dv.palindromic:
        raise RequiresReflexiveError("requires a palindromic delta-vector")
    poly = ehrhart_polynomial(dv).shift(Fraction(-1, 2))
    parity = dv.d % 2
    for k, c in enumerate(poly.coeffs):
        if k % 2 != parity and c != 0:
            raise AssertionError("symmetry failure on palindromic input")
    return RatPoly(poly.coeffs[parity::2])


def critical_line_polynomial(dv: DeltaVector) -> RatPoly:
    """Integer polynomial F with: roots of L on the line Re z = -1/2
    correspond exactly to real roots u >= 0 of F (u = beta^2 where
    z = -1/2 + beta*i).  For odd d the forced root at -1/2 is removed.
    Normalized primitive with positive leading coefficient."""
    half = _symmetric_half(dv)
    fcl = RatPoly([(-1) ** k * c for k, c in enumerate(half.coeffs)])
    return fcl.primitive()


def real_axis_polynomial(dv: DeltaVector) -> RatPoly:
    """Integer polynomial G with: real roots of L correspond exactly to
    real roots u >= 0 of G (u = alpha^2 where z = -1/2 + alpha); the forced
    odd-dimension root at -1/2 is removed.  Same normalization as the
    critical-line polynomial."""
    return _symmetric_half(dv).primitive()


def is_cl_exact(dv: DeltaVector) -> bool:
    """Exact decision: all roots of the counting polynomial on Re z = -1/2."""
    return all_roots_real_nonneg(critical_line_polynomial(dv))


def is_real_exact(dv: DeltaVector) -> bool:
    """Exact decision: all roots of the counting polynomial real."""
    return all_roots_real_nonneg(real_axis_polynomial(dv))


# ----------------------------------------------------------------------
# Strip verdicts
# ----------------------------------------------------------------------

def _deflate_root_at_zero(p: RatPoly) -> tuple[RatPoly, int]:
    k = 0
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    return RatPoly([Fraction(0)] * 0 + cs), k


def _count_right_of(p: RatPoly, bound: Fraction) -> tuple[int | None, int]:
    """(count of roots with Re > bound or None if degenerate,
    number of roots exactly at z = bound)."""
    q = p.shift(bound)
    q, at_bound = _deflate_root_at_zero(q)
    if q.degree < 1:
        return 0, at_bound
    return routh_right_halfplane_count(q), at_bound


def _count_left_of(p: RatPoly, bound: Fraction) -> tuple[int | None, int]:
    q = p.compose_linear(-1, bound)  # q(z) = p(bound - z)
    q, at_bound = _deflate_root_at_zero(q)
    if q.degree < 1:
        return 0, at_bound
    return routh_right_halfplane_count(q), at_bound


def strip_verdict(
    p: RatPoly, lower, upper, strict: bool = False
) -> HypothesisVerdict:
    """Decide whether every root z of p satisfies lower <= Re z <= upper
    (strict inequalities when strict=True).

    The exact path counts roots beyond each bound with a rational Routh
    array after an exact Taylor shift; roots landing exactly on a bound are
    deflated first, which settles most boundary cases without floating
    point.  A degenerate array falls back to numerical roots with error
    radii; a radius crossing the boundary yields boundary-indeterminate.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    lo = Fraction(lower)
    hi = Fraction(upper)
    right, at_hi = _count_right_of(p, hi)
    left, at_lo = _count_left_of(p, lo)
    if strict and (at_hi or at_lo):
        witness = (float(hi), 0.0) if at_hi else (float(lo), 0.0)
        return HypothesisVerdict(FAILS_EXACT, witness)
    if right is not None and left is not None:
        if right == 0 and left == 0:
            return HypothesisVerdict(HOLDS_EXACT)
        witness = _numeric_witness(p, lo, hi)
        return HypothesisVerdict(FAILS_EXACT, witness)
    # degenerate Routh array: numerical evidence with error radii
    rs = find_roots(p)
    flo, fhi = float(lo), float(hi)
    worst = None
    touching = False
    for r in rs.roots:
        if r.re - r.error_radius > fhi or r.re + r.error_radius < flo:
            excess = max(r.re - fhi, flo - r.re)
            if worst is None or excess > worst[0]:
                worst = (excess, (r.re, r.im))
        elif r.re + r.error_radius >= fhi or r.re - r.error_radius <= flo:
            touching = True
    if worst is not None:
        return HypothesisVerdict(FAILS_NUMERIC, worst[1])
    if touching:
        return HypothesisVerdict(BOUNDARY_INDETERMINATE)
    return HypothesisVerdict(HOLDS_NUMERIC)


def _numeric_witness(p: RatPoly, lo: Fraction, hi: Fraction) -> tuple[float, float] | None:
    try:
        rs = find_roots(p)
    except NumericalFailure:
        return None
    flo, fhi = float(lo), float(hi)
    best = None
    for r in rs.roots:
        excess = max(r.re - fhi, flo - r.re)
        if best is None or excess > best[0]:
            best = (excess, (r.re, r.im))
    return best[1] if best else None


# ----------------------------------------------------------------------
# The hypothesis hierarchy
# ----------------------------------------------------------------------

def hypothesis_report(dv: DeltaVector) -> HypothesisReport:
    """Verdicts for CL, Real, NCS, CS, HS, S on a palindromic vector.

    CL and Real are decided exactly through the u-substitution; the strip
    hypotheses use exact rational bounds (CS strict, the others closed)."""
    if not dv.palindromic:
        raise RequiresReflexiveError("requires a palindromic delta-vector")
    d = dv.d
    poly = ehrhart_polynomial(dv)
    verdicts: dict[str, HypothesisVerdict] = {}

    cl = is_cl_exact(dv)
    verdicts["CL"] = HypothesisVerdict(
        HOLDS_EXACT if cl else FAILS_EXACT,
        None if cl else _off_line_witness(poly),
    )
    real = is_real_exact(dv)
    verdicts["Real"] = HypothesisVerdict(
        HOLDS_EXACT if real else FAILS_EXACT,
        None if real else _off_axis_witness(poly),
    )
    verdicts["NCS"] = strip_verdict(
        poly, Fraction(-d, d + 1), Fraction(-1, d + 1), strict=False
    )
    verdicts["CS"] = strip_verdict(poly, -1, 0, strict=True)
    verdicts["HS"] = strip_verdict(
        poly, Fraction(-d, 2), Fraction(d, 2) - 1, strict=False
    )
    verdicts["S"] = strip_verdict(poly, -d, d - 1, strict=False)
    return HypothesisReport(dimension=d, verdicts=verdicts)


def _off_line_witness(poly: RatPoly) -> tuple[float, float] | None:
    try:
        rs = find_roots(poly)
    except NumericalFailure:
        return None
    worst = max(rs.roots, key=lambda r: abs(r.re + 0.5), default=None)
    return None if worst is None else (worst.re, worst.im)


def _off_axis_witness(poly: RatPoly) -> tuple[float, float] | None:
    try:
        rs = find_roots(poly)
    except NumericalFailure:
        return None
    worst = max(rs.roots, key=lambda r: abs(r.im), default=None)
    return None if worst is None else (worst.re, worst.im)


def braun_disc_check(p: RatPoly, d: int) -> bool:
    """All numerical roots lie in the disc centred at -1/2 with radius
    d(d - 1/2), up to error radii."""
    if d < 1 or p.degree < 1:
        raise ValueError("need degree >= 1")
    radius = d * (d - 0.5)
    rs = find_roots(p)
    return all(
        math.hypot(r.re + 0.5, r.im) <= radius + r.error_radius for r in rs.roots
    )


def real_root_window_check(dv: DeltaVector) -> bool:
    """Exact check that every real root of the counting polynomial lies in
    the open interval (-floor(d/2), floor(d/2) - 1).

    Stated for palindromic vectors with all interior entries positive; the
    window is checked on the counting polynomial itself (equivalently, on
    its symmetric shift against the half-integer window)."""
    if not dv.palindromic:
        raise RequiresReflexiveError("requires a palindromic delta-vector")
    if any(v < 1 for v in dv.entries):
        raise ValueError("requires all entries >= 1")
    d = dv.d
    poly = ehrhart_polynomial(dv)
    lo = Fraction(-(d // 2))
    hi = Fraction(d // 2 - 1)
    if poly(hi) == 0:
        return False
    left = sturm_distinct_real_roots(poly, NEG_INF, lo)
    right = sturm_distinct_real_roots(poly, hi, POS_INF)
    return left == 0 and right == 0

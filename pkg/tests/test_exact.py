import math
import random
from fractions import Fraction
from itertools import permutations

import pytest
from helpers import random_unimodular

from ehrhart_lab.exact import (
    NEG_INF,
    POS_INF,
    IntMatrix,
    RatPoly,
    SingularMatrixError,
    all_roots_real_nonneg,
    binomial_poly,
    descartes_positive_bound,
    discriminant,
    elementary_divisors,
    eulerian,
    fraction_matrix_inverse,
    hermite_normal_form,
    resultant,
    routh_right_halfplane_count,
    row_hermite_basis,
    smith_normal_form,
    solve_linear_exact,
    sturm_distinct_real_roots,
)


def poly_from_roots(roots) -> RatPoly:
    p = RatPoly([1])
    for r in roots:
        p = p * RatPoly([-Fraction(r), 1])
    return p


# ----------------------------------------------------------------------
# polynomials
# ----------------------------------------------------------------------

def test_ratpoly_arithmetic_roundtrip():
    p = RatPoly([1, 2, 3])
    q = RatPoly([Fraction(1, 2), 0, 0, 1])
    assert (p + q) - q == p
    assert (p * q) // q == p and (p * q) % q == RatPoly()
    assert p.derivative() == RatPoly([2, 6])
    assert (p ** 3) == p * p * p
    assert p.shift(2).shift(-2) == p
    assert p.reflect().reflect() == p


def test_ratpoly_zero_conventions():
    z = RatPoly()
    assert z.is_zero and z.degree == -1
    assert (z + RatPoly([1])) == RatPoly([1])
    with pytest.raises(ValueError):
        z.leading


def test_binomial_poly_matches_comb():
    for offset in range(-2, 6):
        for d in range(0, 7):
            p = binomial_poly(offset, d)
            assert p.degree == d
            for m in range(0, 9):
                if m + offset >= 0:
                    assert p(Fraction(m)) == math.comb(m + offset, d)
    assert binomial_poly(2, 2) == RatPoly([1, Fraction(3, 2), Fraction(1, 2)])
    assert binomial_poly(0, 3)(Fraction(5)) == 10
    for d in range(1, 6):
        assert binomial_poly(d, d)(Fraction(0)) == 1
    with pytest.raises(ValueError):
        binomial_poly(0, -1)


def brute_eulerian(d, j):
    count = 0
    for perm in permutations(range(1, d + 1)):
        descents = sum(1 for i in range(d - 1) if perm[i] > perm[i + 1])
        if descents == j:
            count += 1
    return count


def test_eulerian_against_descent_count():
    for d in range(1, 7):
        for j in range(-1, d + 1):
            expected = brute_eulerian(d, j) if 0 <= j <= d - 1 else 0
            assert eulerian(d, j) == expected
    assert eulerian(3, 1) == 4
    assert eulerian(4, 2) == 11
    assert all(eulerian(d, 0) == 1 for d in range(1, 9))


# ----------------------------------------------------------------------
# real root counting
# ----------------------------------------------------------------------

def test_sturm_examples():
    assert sturm_distinct_real_roots(RatPoly([-2, 0, 1])) == 2
    assert sturm_distinct_real_roots(RatPoly([1, 0, 1])) == 0
    zz = poly_from_roots([0, 1, 2])
    assert sturm_distinct_real_roots(zz, 0, POS_INF) == 2
    assert sturm_distinct_real_roots(zz, NEG_INF, 0) == 1  # (lo, hi] includes 0
    assert sturm_distinct_real_roots(zz, Fraction(1, 2), Fraction(3, 2)) == 1


def test_sturm_multiplicities_ignored():
    p = poly_from_roots([1, 1, 1, 4])
    assert sturm_distinct_real_roots(p) == 2


def test_sturm_extra_factor_property(rng):
    for _ in range(60):
        roots = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
        p = poly_from_roots(roots)
        r = Fraction(rng.randint(7, 20), 1)  # outside the existing roots
        expanded = p * RatPoly([-r, 1])
        assert (
            sturm_distinct_real_roots(expanded)
            == sturm_distinct_real_roots(p) + 1
        )


def test_all_roots_real_nonneg_examples():
    assert all_roots_real_nonneg(RatPoly([2, -3, 1]))       # roots 1, 2
    assert not all_roots_real_nonneg(RatPoly([1, 1, 1]))    # complex pair
    assert all_roots_real_nonneg(poly_from_roots([0, 1, 2]))
    assert all_roots_real_nonneg(RatPoly([5]))              # no roots at all
    assert not all_roots_real_nonneg(poly_from_roots([-1, 1]))
    assert all_roots_real_nonneg(poly_from_roots([0, 0, 3]))
    with pytest.raises(ValueError):
        all_roots_real_nonneg(RatPoly())


def test_all_roots_real_nonneg_random_agreement(rng):
    # compare against direct knowledge of the roots we planted
    for _ in range(300):
        kind = rng.random()
        roots = []
        n = rng.randint(1, 3)
        expected = True
        p = RatPoly([1])
        for _ in range(n):
            if kind < 0.4:
                r = Fraction(rng.randint(0, 8), rng.randint(1, 3))
                p = p * RatPoly([-r, 1])
            elif kind < 0.7:
                r = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
                p = p * RatPoly([-r, 1])
                expected = expected and r >= 0
            else:
                a, b = rng.randint(-3, 3), rng.randint(1, 3)
                p = p * RatPoly([a * a + b * b, -2 * a, 1])  # conjugate pair
                expected = False
        assert all_roots_real_nonneg(p) == expected


def test_descartes_bound():
    assert descartes_positive_bound(poly_from_roots([1, 2, 3])) == 3
    assert descartes_positive_bound(poly_from_roots([-1, -2])) == 0


def test_routh_examples():
    assert routh_right_halfplane_count(poly_from_roots([-1, -2])) == 0
    assert routh_right_halfplane_count(poly_from_roots([1, -2])) == 1
    assert routh_right_halfplane_count(RatPoly([1, 0, 1])) is None
    assert routh_right_halfplane_count(RatPoly([3, 2, 2, 1, 1])) is None
    assert routh_right_halfplane_count(RatPoly([7])) == 0
    assert routh_right_halfplane_count(RatPoly([0, 1])) is None  # root at 0


def test_routh_counts_random(rng):
    # plant roots with known half-plane counts; the array may degenerate
    # (e.g. for coefficient patterns with missing powers) but whenever it
    # returns a number that number must be the planted count
    decided = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        rights = 0
        p = RatPoly([1])
        for _ in range(n):
            re = rng.choice([1, 2, 3, -1, -2, -3])
            if rng.random() < 0.5:
                p = p * RatPoly([-re, 1])
                rights += re > 0
            else:
                im = rng.randint(1, 3)
                p = p * RatPoly([re * re + im * im, -2 * re, 1])
                rights += 2 * (re > 0)
        count = routh_right_halfplane_count(p)
        if count is not None:
            decided += 1
            assert count == rights
    assert decided > 100  # degeneracy is the exception, not the rule


def test_discriminant_examples():
    assert discriminant(RatPoly([1, 0, 1])) == -4
    # symbolic check on sampled rational quadratics: disc = b^2 - 4ac
    rng = random.Random(5)
    for _ in range(40):
        a = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert discriminant(RatPoly([c, b, a])) == b * b - 4 * a * c
    # cubic with a double root has discriminant zero
    assert discriminant(poly_from_roots([2, 2, 5])) == 0
    assert discriminant(poly_from_roots([1, 2, 3])) > 0
    assert discriminant(RatPoly([1, 1])) == 1
    with pytest.raises(ValueError):
        discriminant(RatPoly([3]))


def test_resultant_vanishes_iff_common_root():
    p = poly_from_roots([1, 3])
    q = poly_from_roots([3, 7])
    assert resultant(p, q) == 0
    assert resultant(p, poly_from_roots([2, 7])) != 0


# ----------------------------------------------------------------------
# integer matrices
# ----------------------------------------------------------------------

def test_smith_normal_form_examples():
    assert elementary_divisors(IntMatrix.identity(3)) == (1, 1, 1)
    assert elementary_divisors(IntMatrix([[2, 0], [0, 3]])) == (1, 6)
    assert elementary_divisors(IntMatrix([[2, 4], [6, 8]])) == (2, 4)


def test_smith_normal_form_random(rng):
    for _ in range(60):
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        u, s, v = smith_normal_form(m)
        assert u * m * v == s
        assert abs(u.det()) == 1 and abs(v.det()) == 1
        diag = [s.data[i][i] for i in range(min(r, c))]
        assert all(x >= 0 for x in diag)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0 or (a == 0 and b == 0)
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert s.data[i][j] == 0
        if r == c:
            assert math.prod(diag) == abs(m.det())


def test_hermite_normal_form_properties(rng):
    assert hermite_normal_form(IntMatrix.identity(4)) == IntMatrix.identity(4)
    h = hermite_normal_form(IntMatrix([[2, 0], [1, 1]]))
    assert abs(h.det()) == 2
    for _ in range(60):
        n = rng.randint(1, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        if m.det() == 0:
            continue
        h = hermite_normal_form(m)
        assert abs(h.det()) == abs(m.det())
        for i in range(n):
            assert h.data[i][i] > 0
            for j in range(n):
                if j < i:
                    assert h.data[i][j] == 0
                elif j > i:
                    assert 0 <= h.data[i][j] < h.data[i][i]
        # unimodular matrices normalize to the identity
        assert hermite_normal_form(IntMatrix(random_unimodular(rng, n))) == (
            IntMatrix.identity(n)
        )


def test_row_hermite_basis():
    basis = row_hermite_basis([[2, 0], [1, 1], [0, 2]])
    assert IntMatrix(basis).det() in (-2, 2)
    assert basis == [[1, 1], [0, 2]]
    # the basis spans the same lattice: membership via integer solve
    assert row_hermite_basis([[0, 0], [0, 0]]) == []


def test_solve_linear_exact():
    assert solve_linear_exact(IntMatrix.identity(3), [5, -1, 2]) == [5, -1, 2]
    assert solve_linear_exact(IntMatrix([[2, 0], [0, 2]]), [1, 1]) == [
        Fraction(1, 2),
        Fraction(1, 2),
    ]
    # barycentric coordinates of the origin in a symmetric triangle
    a = [[1, 0, 1], [0, 1, 1], [-1, -1, 1]]
    x = solve_linear_exact([[row[i] for row in a] for i in range(3)], [0, 0, 1])
    assert x == [Fraction(1, 3)] * 3
    with pytest.raises(SingularMatrixError):
        solve_linear_exact(IntMatrix([[1, 1], [2, 2]]), [1, 1])


def test_fraction_matrix_inverse(rng):
    for _ in range(30):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        if IntMatrix(rows).det() == 0:
            continue
        inv = fraction_matrix_inverse(rows)
        for i in range(n):
            for j in range(n):
                acc = sum(Fraction(rows[i][k]) * inv[k][j] for k in range(n))
                assert acc == (1 if i == j else 0)


def test_routh_partitions_the_degree(rng):
    # right count of p plus right count of p(-z) must give the degree when
    # both arrays are regular (regularity certifies no imaginary-axis roots)
    decided = 0
    for _ in range(200):
        n = rng.randint(1, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(n)] + [rng.randint(1, 9)]
        p = RatPoly(coeffs)
        right = routh_right_halfplane_count(p)
        left = routh_right_halfplane_count(p.reflect())
        if right is None or left is None:
            continue
        decided += 1
        assert right + left == p.degree
    assert decided > 100


def test_hermite_normal_form_is_column_canonical(rng):
    # right multiplication by any unimodular matrix preserves the column
    # lattice, so it must not change the normal form
    for _ in range(40):
        n = rng.randint(2, 4)
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        if m.det() == 0:
            continue
        v = IntMatrix(random_unimodular(rng, n))
        assert hermite_normal_form(m * v) == hermite_normal_form(m)

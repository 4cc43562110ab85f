"""Acceptance suite: one test per acceptance criterion, each printing a
pass/fail line (run with `pytest tests/test_acceptance.py -v -s` to see
them) and enforcing the stated runtime targets."""

import math
import time
from fractions import Fraction

from helpers import random_palindromic, random_reflexive_simplex

from ehrhart_lab.criteria import (
    classify,
    classify_dim4,
    cl_from_geometry,
    delta_for_pair,
    dim4_discriminant,
    parabola_point_dim4,
    real_from_geometry,
)
from ehrhart_lab.delta import (
    cube_delta,
    ehrhart_polynomial,
    product_delta,
    validate_delta,
)
from ehrhart_lab.lattice import (
    LatticeSimplex,
    count_points_brute,
    count_points_dilate,
    delta_of_simplex,
    dual_simplex,
    lattice_isomorphic,
    normalized_volume,
)
from ehrhart_lab.realize import realize
from ehrhart_lab.roots import (
    find_roots,
    hypothesis_report,
    is_cl_exact,
    is_real_exact,
    real_root_window_check,
    strip_verdict,
)

DIM10 = validate_delta([1, 1, 1, 1, 9, 28, 9, 1, 1, 1, 1])
DIM10_VERTICES = LatticeSimplex.of(
    [[1, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
     [0, 0, 1, 0, 0, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
     [0, 0, 0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
     [0, 0, 0, 0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
     [0, 0, 0, 0, 0, 0, 0, 0, 1, 0], [1, 2, 0, 1, 2, 0, 1, 1, 2, 3],
     [-4, -5, -2, -3, -4, -1, -2, -2, -3, -3]]
)


def report(n: int, text: str):
    print(f"acceptance criterion {n}: PASS - {text}")


def test_criterion_1_cube_deltas():
    t0 = time.monotonic()
    assert cube_delta(4).entries[1:3] == (76, 230)
    assert cube_delta(5).entries[1:3] == (237, 1682)
    assert cube_delta(6).entries[1:4] == (722, 10543, 23548)
    assert cube_delta(7).entries[1:4] == (2179, 60657, 259723)
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    report(1, f"cube delta-vectors for d=4..7 exact in {elapsed:.3f}s")


def test_criterion_2_parabola_table():
    t0 = time.monotonic()
    expected = {
        3: (4, 14), 4: (11, 30), 5: (20, 54), 6: (31, 86), 7: (44, 126),
        8: (59, 174), 9: (76, 230), 10: (95, 294), 11: (116, 366),
        12: (139, 446), 13: (164, 534),
    }
    for n in range(3, 14):
        pair = parabola_point_dim4(n, "lower")
        assert pair == expected[n]
        c = classify_dim4(*pair)
        assert c.is_cl == (n <= 9)
        assert c.is_real == (n >= 9)
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    report(2, f"all 11 parabola points and their split reproduced in {elapsed:.3f}s")


def test_criterion_3_dichotomy_thresholds():
    both2 = classify(validate_delta([1, 6, 1]))
    assert both2.is_cl and both2.is_real
    both3 = classify(validate_delta([1, 23, 23, 1]))
    assert both3.is_cl and both3.is_real
    assert classify(validate_delta([1, 5, 1])).is_cl
    assert not classify(validate_delta([1, 5, 1])).is_real
    assert classify(validate_delta([1, 7, 1])).is_real
    assert not classify(validate_delta([1, 7, 1])).is_cl
    assert classify(validate_delta([1, 22, 22, 1])).is_cl
    assert not classify(validate_delta([1, 22, 22, 1])).is_real
    assert classify(validate_delta([1, 24, 24, 1])).is_real
    assert not classify(validate_delta([1, 24, 24, 1])).is_cl
    # the exact transform decisions agree on all six
    for entries in ([1, 5, 1], [1, 6, 1], [1, 7, 1],
                    [1, 22, 22, 1], [1, 23, 23, 1], [1, 24, 24, 1]):
        dv = validate_delta(entries)
        assert classify(dv).is_cl == is_cl_exact(dv)
        assert classify(dv).is_real == is_real_exact(dv)
    report(3, "threshold vectors split into CL-only / both / real-only exactly")


def test_criterion_4_dimension10_end_to_end():
    t0 = time.monotonic()
    result = realize(DIM10)
    log = result.log
    assert log.multiplicity_candidates == (1, 2, 3, 6, 9, 18, 27, 54)
    assert log.weights_enumerated == 24
    from test_wps import TABLE_D10_SUM54
    assert log.weight_rows == TABLE_D10_SUM54
    assert log.weights_after_dominance == 1
    assert log.weights_enumerated - log.weights_after_dominance == 23
    assert log.actions_enumerated == 215
    assert log.actions_after_age_bound == 58
    assert log.actions_after_chart_closure == 1
    assert len(result.realizations) == 1
    simplex = result.realizations[0].simplex
    assert lattice_isomorphic(simplex, DIM10_VERTICES)
    assert delta_of_simplex(simplex) == DIM10

    rep = hypothesis_report(DIM10)
    assert rep.verdicts["HS"].verdict.startswith("fails")
    roots = find_roots(ehrhart_polynomial(DIM10))
    assert min(r.re for r in roots.roots) < -5
    assert max(r.re for r in roots.roots) > 4
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    report(4, f"dimension-10 realization with full stage log in {elapsed:.1f}s")


def test_criterion_5_nonexistence_certificates():
    for entries, budget in ([1, 1, 68, 1, 1], 60.0), ([1, 1, 190, 190, 1, 1], 60.0):
        t0 = time.monotonic()
        result = realize(validate_delta(entries))
        elapsed = time.monotonic() - t0
        assert result.realizations == ()
        assert not result.undecided
        assert elapsed < budget
    report(5, "both non-existence certificates returned empty with no undecided entries")


def test_criterion_6_worked_examples():
    t0 = time.monotonic()
    p12333 = LatticeSimplex.of(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-2, -3, -3, -3]]
    )
    dual = dual_simplex(p12333).as_lattice_simplex()
    assert normalized_volume(dual) == 384
    assert count_points_dilate(dual, 1) == 81
    assert delta_of_simplex(dual).entries == (1, 76, 230, 76, 1)

    p12234 = LatticeSimplex.of(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-2, -2, -3, -4]]
    )
    assert normalized_volume(p12234) == 12
    assert count_points_dilate(p12234, 1) == 7
    assert cl_from_geometry(4, 12, 7)
    dual2 = dual_simplex(p12234).as_lattice_simplex()
    assert normalized_volume(dual2) == 432
    assert count_points_dilate(dual2, 1) == 89
    assert not cl_from_geometry(4, 432, 89)
    assert not real_from_geometry(4, 432, 89)

    p4 = LatticeSimplex.of(
        [[4, -1, -1, -1], [-1, 4, -1, -1], [-1, -1, 4, -1], [-1, -1, -1, 4],
         [-1, -1, -1, -1]]
    )
    assert count_points_dilate(p4, 1) == 126
    assert real_from_geometry(4, normalized_volume(p4), 126)

    q = validate_delta([1, 7, 1])
    qq = product_delta(q, q)
    assert qq.entries == (1, 95, 294, 95, 1)
    assert dim4_discriminant(95, 294) == 0
    elapsed = time.monotonic() - t0
    assert elapsed < 5.0
    report(6, f"all four worked examples exact in {elapsed:.2f}s")


def test_criterion_7_oracle_equivalence(rng):
    count = 0
    for d in (4, 5, 6, 7):
        for _ in range(1000):
            if d in (4, 5):
                dv = delta_for_pair(d, rng.randint(1, 3000), rng.randint(1, 3000))
            else:
                dv = delta_for_pair(d, rng.randint(1, 3000),
                                    rng.randint(1, 3000), rng.randint(1, 3000))
            c = classify(dv)
            assert c.is_cl == is_cl_exact(dv), dv
            assert c.is_real == is_real_exact(dv), dv
            count += 1
    report(7, f"closed-form and transform verdicts agree on {count} random vectors")


def test_criterion_8_property_suites(rng):
    # (a) root symmetry z -> -1-z within numerical error radii
    for _ in range(1000):
        dv = random_palindromic(rng, rng.randint(1, 8), hi=2000)
        rs = find_roots(ehrhart_polynomial(dv))
        for r in rs.roots:
            tol = 2 * max(r.error_radius, 1e-9)
            assert any(
                math.hypot(s.re - (-1 - r.re), abs(s.im) - abs(r.im))
                <= tol + 2 * s.error_radius
                for s in rs.roots
            )

    # (b) hierarchy monotonicity
    chain = ["CL", "NCS", "CS", "HS", "S"]
    for _ in range(250):
        dv = random_palindromic(rng, rng.randint(1, 8), hi=2000)
        rep = hypothesis_report(dv)
        holding = [rep.verdicts[name].holds for name in chain]
        for a, b in zip(holding, holding[1:]):
            assert (not a) or b

    # (c) real roots confined to the open window (-floor(d/2), floor(d/2)-1)
    for _ in range(1000):
        dv = random_palindromic(rng, rng.randint(2, 10), hi=3000)
        assert real_root_window_check(dv)

    # (d) volume bounds forced by root locations
    checked_cl = checked_real = 0
    for _ in range(400):
        d = rng.randint(2, 7)
        dv = random_palindromic(rng, d, hi=60)
        vol = Fraction(dv.total, math.factorial(d))
        if is_cl_exact(dv):
            checked_cl += 1
            assert vol <= 2 ** d
        if is_real_exact(dv) and strip_verdict(
            ehrhart_polynomial(dv), -1, 0, strict=True
        ).holds:
            checked_real += 1
            assert vol >= 2 ** d
    assert checked_cl > 0 and checked_real > 0

    # (e) box-point delta against brute-force counting
    for _ in range(50):
        s = random_reflexive_simplex(rng, d_max=5)
        for m in (1, 2, 3):
            assert count_points_dilate(s, m) == count_points_brute(s, m)

    report(8, "symmetry, hierarchy, window, volume, and counting properties all hold")


def test_criterion_9_scale_claims_substituted():
    # The census-scale claim (every real reflexive 4-polytope satisfies the
    # open strip (-1,0)) is not reproducible here; it is spot-checked on
    # every realizable real vector these tests encounter, and criterion 7
    # covers the classifier equivalence at desk scale.
    encountered_real = [
        (95, 294), (116, 366), (139, 446), (164, 534),  # parabola points
        (76, 230),                                      # cube vector
        (121, 381),                                     # degree-625 simplex
        (84, 230 + 32),                                 # dual-type data point
    ]
    for d1, d2 in encountered_real:
        dv = delta_for_pair(4, d1, d2)
        if not is_real_exact(dv):
            continue
        assert strip_verdict(ehrhart_polynomial(dv), -1, 0, strict=True).holds
    report(9, "census-scale claim spot-checked on encountered real vectors")

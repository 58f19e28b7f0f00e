import random
from itertools import combinations
from math import comb

import pytest

from gradus.errors import GeneralPositionError
from gradus.field import PrimeField, rank
from gradus.groebner import equal_ideals, normal_form
from gradus.hilbert import hilbert_function, standard_monomials
from gradus.points import (
    PointSet,
    evaluation_matrix,
    is_nonzerodivisor,
    normalize_point,
    random_general_points,
    vanishing_ideal,
    vanishing_ideal_oracle,
)
F = PrimeField(32003)


def test_normalize_point():
    assert normalize_point(F, [0, 5, 10]) == (0, 1, F.div(10, 5))
    with pytest.raises(ValueError):
        normalize_point(F, [0, 0, 0])


def test_pointset_rejects_duplicates():
    with pytest.raises(ValueError):
        PointSet(2, F, [[1, 2, 3], [2, 4, 6]])  # same projective point


def test_sampler_deterministic_and_distinct():
    X1 = random_general_points(6, 2, seed=42)
    X2 = random_general_points(6, 2, seed=42)
    assert X1 == X2
    assert X1.to_json() == X2.to_json()
    assert len(set(X1.points)) == 6
    X3 = random_general_points(6, 2, seed=43)
    assert X1 != X3


def test_sampler_certificate_and_tiny_field_exhaustion():
    X = random_general_points(1, 2, seed=0)
    assert X.is_general_position()
    # F_5 has only 31 points in P^2 and collinearity is unavoidable for 30
    with pytest.raises(GeneralPositionError):
        random_general_points(30, 2, seed=0, field=PrimeField(5), max_tries=3)


def test_four_points_no_three_collinear_determinant_oracle():
    X = random_general_points(4, 2, seed=9)
    f = X.field
    for a, b, c in combinations(X.points, 3):
        det = f.zero
        for sgn, (i, j, k) in [(1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
                               (-1, (0, 2, 1)), (-1, (2, 1, 0)), (-1, (1, 0, 2))]:
            prod = f.mul(f.mul(a[i], b[j]), c[k])
            det = f.add(det, prod if sgn > 0 else f.neg(prod))
        assert not f.is_zero(det)


def test_evaluation_matrix_examples():
    X = random_general_points(5, 2, seed=3)
    col = evaluation_matrix(X, 0)
    assert col == [[1]] * 5
    single = PointSet(2, F, [[1, 0, 0]])
    assert evaluation_matrix(single, 1) == [[1, 0, 0]]
    # rank = min(C(n+d, n), s) in every degree for certified sets
    for d in range(1, 6):
        assert rank(F, evaluation_matrix(X, d)) == min(comb(2 + d, 2), 5)


def test_vanishing_ideal_single_point():
    X = PointSet(2, F, [[1, 0, 0]])
    I = vanishing_ideal(X)
    assert [str(g) for g in I.groebner()] == ["x2", "x1"]


def test_vanishing_ideal_generator_degrees():
    # 2 general points: one linear and one quadric minimal generator
    X2 = random_general_points(2, 2, seed=5)
    assert sorted(g.degree() for g in vanishing_ideal(X2).groebner()) == [1, 2]
    # 3 general points: three quadrics
    X3 = random_general_points(3, 2, seed=5)
    assert sorted(g.degree() for g in vanishing_ideal(X3).groebner()) == [2, 2, 2]


def test_vanishing_ideal_generators_vanish():
    X = random_general_points(6, 2, seed=1)
    I = vanishing_ideal(X)
    for g in I.generators:
        for p in X.points:
            assert X.field.is_zero(g.evaluate(p))


def test_hilbert_law_small():
    for s in (1, 4, 8):
        X = random_general_points(s, 2, seed=17)
        I = vanishing_ideal(X)
        for d in range(s + 3):
            assert hilbert_function(I, d) == min(comb(2 + d, 2), s)


def test_oracle_equivalence_small():
    for s, seed in [(1, 4), (2, 8), (7, 15)]:
        X = random_general_points(s, 2, seed=seed)
        assert equal_ideals(vanishing_ideal(X), vanishing_ideal_oracle(X))


def _mult_injective_all_degrees(g, X, top):
    """Rank oracle: multiplication by g on (R_X)_d is injective for d <= top."""
    I = vanishing_ideal(X)
    ring = I.ring
    fld = ring.field
    gb = I.groebner()
    for d in range(top + 1):
        src = standard_monomials(I, d)
        dst = standard_monomials(I, d + g.degree())
        index = {e: i for i, e in enumerate(dst)}
        rows = []
        for b in src:
            prod = g.mul_term(b, fld.one)
            nf = normal_form(prod, gb)
            row = [fld.zero] * len(dst)
            for e, c in nf.terms.items():
                row[index[e]] = c
            rows.append(row)
        if rows and rank(fld, rows, len(dst)) < len(src):
            return False
    return True


def test_nonzerodivisor_examples_and_rank_oracle():
    X = random_general_points(5, 2, seed=23)
    ring = X.ring()
    rng = random.Random(1)
    ell = ring.random_form(1, rng)
    assert is_nonzerodivisor(ell, X)  # random over F_32003: nonvanishing whp
    # a separator through exactly the first point is a zero divisor
    sep = vanishing_ideal(PointSet(2, F, [X.points[0]])).generators[0]
    assert not is_nonzerodivisor(sep, X)
    assert not is_nonzerodivisor(ring.zero(), X)
    delta = X.delta()
    assert _mult_injective_all_degrees(ell, X, delta + 2)
    assert not _mult_injective_all_degrees(sep, X, delta + 2)


def test_pointset_json_roundtrip():
    X = random_general_points(3, 2, seed=77)
    Y = PointSet.from_json(X.to_json())
    assert X == Y
    assert Y.to_json()["field"] == "32003"


def test_rational_mode_cross_check():
    from gradus.field import RationalField

    X = random_general_points(3, 2, seed=2, field=RationalField())
    I = vanishing_ideal(X)
    for d in range(5):
        assert hilbert_function(I, d) == min(comb(2 + d, 2), 3)
    assert equal_ideals(I, vanishing_ideal_oracle(X))

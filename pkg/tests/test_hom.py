import random

import pytest

from gradus.errors import GradusError
from gradus.groebner import Ideal
from gradus.hilbert import hilbert_values
from gradus.hom import find_nzd_generator, hom_graded_dims, theta_kernel_dims
from gradus.points import PointSet, is_nonzerodivisor, random_general_points, vanishing_ideal


def _separator(X, k=0):
    """A form vanishing at exactly the k-th point (a zero divisor on R_X)."""
    return vanishing_ideal(PointSet(X.n, X.field, [X.points[k]])).generators[0]


def test_principal_ideal_dims_are_shifted_hilbert():
    X = random_general_points(4, 2, seed=50)
    ring = X.ring()
    rng = random.Random(0)
    ell = ring.random_form(1, rng)
    assert is_nonzerodivisor(ell, X)
    prof = hom_graded_dims(Ideal(ring, [ell]), X, range(0, 6))
    hf = hilbert_values(vanishing_ideal(X), 7)
    assert prof.dims == {i: hf[i + 1] for i in range(6)}
    assert prof.dims[2] == 4 == prof.s
    assert prof.delta == 2
    assert prof.witness_degree == 1


def test_witness_independence():
    X = random_general_points(6, 2, seed=51)
    ring = X.ring()
    rng = random.Random(1)
    q, c = ring.random_form(2, rng), ring.random_form(3, rng)
    J = Ideal(ring, [q, c])
    prof_q = hom_graded_dims(J, X, range(0, 7), witness=q)
    prof_c = hom_graded_dims(J, X, range(0, 7), witness=c)
    assert prof_q.dims == prof_c.dims
    assert prof_q.witness != prof_c.witness


def test_dims_reach_s_at_delta():
    X = random_general_points(5, 2, seed=52)
    ring = X.ring()
    rng = random.Random(2)
    I_X = vanishing_ideal(X)
    m = min(g.degree() for g in I_X.groebner())
    J = Ideal(ring, [ring.random_form(m, rng), ring.random_form(m + 1, rng)])
    prof = hom_graded_dims(J, X, range(0, X.delta() + 4))
    for i in range(X.delta(), X.delta() + 4):
        assert prof.dims[i] == X.s


def test_no_nzd_generator_errors():
    X = random_general_points(3, 2, seed=53)
    ring = X.ring()
    sep = _separator(X)
    J = Ideal(ring, [sep, sep * sep])
    with pytest.raises(GradusError):
        find_nzd_generator(J, X)
    with pytest.raises(GradusError):
        hom_graded_dims(J, X, range(0, 3))


def test_zero_divisor_witness_rejected():
    X = random_general_points(3, 2, seed=54)
    ring = X.ring()
    rng = random.Random(3)
    q = ring.random_form(2, rng)
    J = Ideal(ring, [q])
    with pytest.raises(GradusError):
        hom_graded_dims(J, X, range(0, 3), witness=_separator(X))


def test_witness_outside_J_rejected():
    X = random_general_points(3, 2, seed=54)
    ring = X.ring()
    rng = random.Random(8)
    J = Ideal(ring, [ring.random_form(2, rng)])
    stray = ring.random_form(1, rng)  # NZD, but not in I_X + J
    with pytest.raises(GradusError):
        hom_graded_dims(J, X, range(0, 3), witness=stray)


def test_theta_injective_for_nzd():
    X = random_general_points(5, 2, seed=55)
    ring = X.ring()
    rng = random.Random(4)
    q, c = ring.random_form(2, rng), ring.random_form(3, rng)
    J = Ideal(ring, [q, c])
    kd = theta_kernel_dims(J, q, X, range(0, X.delta() + 4))
    assert all(v == 0 for v in kd.values())
    # principal J generated by an NZD: theta_g injective
    Jp = Ideal(ring, [q])
    kdp = theta_kernel_dims(Jp, q, X, range(0, X.delta() + 4))
    assert all(v == 0 for v in kdp.values())


def test_theta_kernel_for_zero_divisor():
    X = random_general_points(5, 2, seed=56)
    ring = X.ring()
    rng = random.Random(5)
    q = ring.random_form(2, rng)
    sep = _separator(X)
    assert not is_nonzerodivisor(sep, X)
    J = Ideal(ring, [q, sep])
    kd = theta_kernel_dims(J, sep, X, range(0, X.delta() + 4))
    assert any(v > 0 for v in kd.values())


def test_theta_g_must_lie_in_J():
    X = random_general_points(4, 2, seed=57)
    ring = X.ring()
    rng = random.Random(6)
    q = ring.random_form(2, rng)
    other = ring.random_form(1, rng)
    with pytest.raises(GradusError):
        theta_kernel_dims(Ideal(ring, [q]), other, X, range(0, 3))


def test_profile_json():
    X = random_general_points(3, 2, seed=58)
    ring = X.ring()
    rng = random.Random(7)
    J = Ideal(ring, [ring.random_form(1, rng)])
    data = hom_graded_dims(J, X, range(0, 4)).to_json()
    assert set(data) == {"dims", "witness", "witness_degree", "delta", "s", "convention"}
    assert data["s"] == 3

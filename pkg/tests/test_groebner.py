import random

import pytest

from gradus.field import RationalField
from gradus.groebner import (
    Ideal,
    equal_ideals,
    ideal_intersection,
    ideal_membership,
    ideal_quotient,
    ideal_sum,
    is_groebner_basis,
    leading_term_ideal,
    normal_form,
    reduced_groebner,
    s_polynomial,
)
from gradus.hilbert import hilbert_function
from gradus.ring import RingSpec, parse_poly

R = RingSpec(3)


def P(s, ring=R):
    return parse_poly(ring, s)


def I(*gens, ring=R):
    return Ideal(ring, [P(g, ring) for g in gens])


def test_normal_form_examples():
    assert normal_form(P("x0^2"), [P("x0")]).is_zero()
    assert normal_form(P("x1"), [P("x0")]) == P("x1")
    # oracle: reducing by (x0-x2, x1-x2) substitutes x0 -> x2, x1 -> x2
    assert normal_form(P("x0*x1+x2^2"), [P("x0-x2"), P("x1-x2")]) == P("2*x2^2")


def test_normal_form_division_identity():
    rng = random.Random(2)
    G = [P("x0^2-x1*x2"), P("x1^2-x0*x2")]
    for _ in range(10):
        f = R.random_form(rng.randrange(1, 5), rng)
        r, qs = normal_form(f, G, with_quotients=True)
        # f = sum q_i g_i + r, exactly
        acc = r
        for q, g in zip(qs, G):
            acc = acc + q * g
        assert acc == f
        # idempotence
        assert normal_form(r, G) == r


def test_normal_form_no_lead_divisible():
    G = [P("x0^2-x1*x2"), P("x1^3")]
    r = normal_form(P("x0^4+x1^4+x2^4"), G)
    leads = [g.leading()[0] for g in G]
    from gradus.ring import mono_divides
    for e in r.terms:
        assert not any(mono_divides(le, e) for le in leads)


def test_reduced_groebner_examples():
    gb = reduced_groebner(I("x0-x1", "x1-x2"))
    # same ideal as {x0-x2, x1-x2}: mutual normal forms vanish
    other = [P("x0-x2"), P("x1-x2")]
    assert all(normal_form(g, other).is_zero() for g in gb)
    assert all(normal_form(g, gb).is_zero() for g in other)
    assert I("x0", "x0^2").groebner() == [P("x0")]
    assert I("3*x0^2-3*x1*x2").groebner() == [P("x0^2-x1*x2")]


def test_reduced_groebner_unique_under_permutation():
    rng = random.Random(5)
    gens = [R.random_form(2, rng) for _ in range(3)]
    base = Ideal(R, gens).groebner()
    for _ in range(4):
        perm = gens[:]
        rng.shuffle(perm)
        dup = perm + [perm[0]]
        assert Ideal(R, dup).groebner() == base


def test_buchberger_certificate():
    rng = random.Random(9)
    for _ in range(5):
        gens = [R.random_form(rng.randrange(1, 3), rng) for _ in range(rng.randrange(2, 4))]
        gb = Ideal(R, gens).groebner()
        assert is_groebner_basis(gb)
        # every input generator reduces to zero against the output
        assert all(normal_form(g, gb).is_zero() for g in gens)


def test_reduced_property():
    # no term of any element is divisible by another element's lead; all monic
    from gradus.ring import mono_divides
    gb = I("x0^2-x1^2", "x0*x1-x2^2", "x1^3-x0*x2^2").groebner()
    for k, g in enumerate(gb):
        assert g.leading()[1] == R.field.one
        for e in g.terms:
            for j, h in enumerate(gb):
                if j != k:
                    assert not mono_divides(h.leading()[0], e)


def test_membership_examples():
    assert ideal_membership(P("x0^2"), I("x0"))
    assert not ideal_membership(P("x1"), I("x0"))
    rng = random.Random(1)
    J = I("x0^2-x1*x2", "x1^2-x0*x2")
    for _ in range(5):
        g = J.generators[rng.randrange(2)]
        h = R.random_form(rng.randrange(1, 3), rng)
        assert ideal_membership(g * h, J)


def test_ideal_sum():
    assert equal_ideals(ideal_sum(I("x0"), I("x1")), I("x0", "x1"))
    A = I("x0^2-x1*x2")
    assert equal_ideals(ideal_sum(A, Ideal(R, [])), A)
    assert equal_ideals(ideal_sum(A, A), A)


def test_intersection_examples():
    assert equal_ideals(ideal_intersection(I("x0"), I("x1")), I("x0*x1"))
    A = I("x0^2-x1*x2", "x1^2")
    assert equal_ideals(ideal_intersection(A, A), A)


def test_intersection_soundness():
    rng = random.Random(3)
    A = I("x0^2-x1*x2")
    B = I("x1^2-x0*x2", "x0*x1")
    M = ideal_intersection(A, B)
    probes = [R.random_form(d, rng) for d in (2, 3, 4) for _ in range(4)]
    probes += [A.generators[0] * R.random_form(1, rng), B.generators[0] * R.random_form(2, rng)]
    probes += [g for g in M.groebner()]
    for f in probes:
        if f.is_zero():
            continue
        assert M.contains(f) == (A.contains(f) and B.contains(f))


def test_quotient_examples():
    assert equal_ideals(ideal_quotient(I("x0*x1"), I("x1")), I("x0"))
    A = I("x0^2-x1*x2", "x1^3")
    unit = Ideal(R, [R.one()], check=False)
    assert equal_ideals(ideal_quotient(A, unit), A)
    Q = ideal_quotient(I("x0^2", "x0*x1"), I("x0"))
    # both inclusions, by membership
    assert Q.contains(P("x0")) and Q.contains(P("x1"))
    assert equal_ideals(Q, I("x0", "x1"))


def test_quotient_soundness():
    A = I("x0^2-x1*x2", "x1^3")
    B = I("x0*x1", "x2^2")
    Q = ideal_quotient(A, B)
    for q in Q.groebner():
        for g in B.generators:
            assert A.contains(q * g)


def test_leading_term_ideal():
    A = I("x0^2-x1*x2", "x1^2-x0*x2")
    L = leading_term_ideal(A)
    for g in L.generators:
        assert len(g.terms) == 1
    # a monomial ideal is its own leading-term ideal
    assert equal_ideals(leading_term_ideal(L), L)
    # source=given_generators uses the generators as written
    L2 = leading_term_ideal(A, source="given_generators")
    assert equal_ideals(L2, I("x0^2", "x1^2"))


def test_macaulay_hilbert_invariance():
    # HF(R/I) = HF(R/in(I)) degree by degree
    A = I("x0^2-x1*x2", "x1^3-x2^3", "x0*x1^2-x2^3")
    L = leading_term_ideal(A)
    for d in range(13):
        assert hilbert_function(A, d) == hilbert_function(L, d)


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        I("x0^2+x1")
    with pytest.raises(ValueError):
        Ideal(R, [R.zero()])


def test_ideal_json_roundtrip():
    A = I("x0^2-x1*x2", "x1^2-x0*x2")
    data = A.to_json()
    B = Ideal.from_json(data)
    assert equal_ideals(A, B)
    assert data["ring"]["order"] == "grevlex"


def test_spoly_reduces_for_gb():
    gb = I("x0^2-x1*x2", "x1^2-x0*x2").groebner()
    for i in range(len(gb)):
        for j in range(i):
            assert normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero()


def test_rational_field_gb():
    RQ = RingSpec(3, RationalField())
    A = Ideal(RQ, [parse_poly(RQ, "x0^2-x1*x2"), parse_poly(RQ, "3*x1^2-x0*x2")])
    gb = A.groebner()
    assert is_groebner_basis(gb)
    assert all(g.leading()[1] == 1 for g in gb)

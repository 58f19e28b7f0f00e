"""Division algorithm, Buchberger's algorithm, and the ideal algebra.

Reduction keeps the working polynomial in a dict and drives it with a lazy
max-heap of monomials: corrections only ever touch monomials strictly below
the one being cancelled, so each heap entry is popped at most once with its
final coefficient. Among divisors of the current lead, the one with the
smallest index in the basis wins, which makes division deterministic.

Ideal intersections and colons go through the auxiliary-variable
elimination trick (t*I + (1-t)*J, eliminate t) with t prepended as the
greatest variable under a block order.
"""
from __future__ import annotations

import heapq

from .ring import (
    ELIM,
    GREVLEX,
    Exponents,
    Poly,
    RingSpec,
    TermOrder,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_poly,
    poly_to_str,
)


def _neg_key(order: TermOrder, e: Exponents):
    """Order-reversing key, so heapq's min-heap pops the largest monomial."""
    if order.kind == GREVLEX:
        return (-sum(e), tuple(reversed(e)))
    if order.kind == ELIM:
        return (-sum(e[: order.block]), -sum(e), tuple(reversed(e)))
    return tuple(-x for x in e)


def _nf_terms(terms: dict, basis: list, order: TermOrder, field, quotients=None):
    """Normal form of a term dict against basis = [(lead_exps, terms_dict), ...].

    Basis polynomials must be monic with `lead_exps` maximal under `order`.
    If `quotients` is a list of dicts it accumulates the cofactors.
    """
    work = dict(terms)
    heap = [(_neg_key(order, e), e) for e in work]
    heapq.heapify(heap)
    remainder: dict = {}
    nbasis = len(basis)
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None or field.is_zero(c):
            continue
        hit = -1
        for i in range(nbasis):
            if mono_divides(basis[i][0], e):
                hit = i
                break
        if hit < 0:
            remainder[e] = c
            continue
        lead, gterms = basis[hit]
        q = mono_div(e, lead)
        if quotients is not None:
            qd = quotients[hit]
            qd[q] = field.add(qd.get(q, field.zero), c)
        for me, mc in gterms.items():
            if me == lead:
                continue
            x = mono_mul(q, me)
            delta = field.mul(c, mc)
            cur = work.get(x)
            if cur is None:
                if not field.is_zero(delta):
                    work[x] = field.neg(delta)
                    heapq.heappush(heap, (_neg_key(order, x), x))
            else:
                work[x] = field.sub(cur, delta)
    return remainder


def normal_form(f: Poly, G: list[Poly], order: TermOrder | None = None,
                with_quotients: bool = False):
    """Remainder of f on division by G; no remainder term is divisible by a
    lead of G and f - remainder lies in (G)."""
    order = order or f.ring.order
    field = f.ring.field
    live = [g for g in G if not g.is_zero()]
    if not live:
        return (f, []) if with_quotients else f
    monic = [g.monic(order) for g in live]
    basis = [(g.leading(order)[0], g.terms) for g in monic]
    quotients = [{} for _ in monic] if with_quotients else None
    rem = _nf_terms(f.terms, basis, order, field, quotients)
    r = Poly(f.ring, rem)
    if not with_quotients:
        return r
    # cofactors are against the monic basis; rescale back to the given G
    qs = []
    for g, mono_g, qd in zip(live, monic, quotients):
        _, lc = g.leading(order)
        scale = field.inv(lc)
        qs.append(Poly(f.ring, {e: field.mul(c, scale) for e, c in qd.items()}))
    return r, qs


def _spoly_terms(gi, gj, order, field):
    """S-polynomial term dict for monic gi, gj given as (lead, terms)."""
    li, ti = gi
    lj, tj = gj
    lcm = mono_lcm(li, lj)
    qi, qj = mono_div(lcm, li), mono_div(lcm, lj)
    out: dict = {}
    for e, c in ti.items():
        out[mono_mul(qi, e)] = c
    for e, c in tj.items():
        x = mono_mul(qj, e)
        cur = out.get(x)
        out[x] = field.neg(c) if cur is None else field.sub(cur, c)
    return out


def s_polynomial(f: Poly, g: Poly, order: TermOrder | None = None) -> Poly:
    order = order or f.ring.order
    field = f.ring.field
    fm, gm = f.monic(order), g.monic(order)
    terms = _spoly_terms(
        (fm.leading(order)[0], fm.terms), (gm.leading(order)[0], gm.terms), order, field
    )
    return Poly(f.ring, terms)


def buchberger(gens: list[Poly], order: TermOrder | None = None) -> list[Poly]:
    """A (non-reduced) Groebner basis, normal pair selection, coprime-lcm and
    chain criteria applied."""
    live = [g for g in gens if not g.is_zero()]
    if not live:
        return []
    ring = live[0].ring
    order = order or ring.order
    field = ring.field
    G = [g.monic(order) for g in live]
    basis = [(g.leading(order)[0], g.terms) for g in G]

    heap: list = []
    pending: set[tuple[int, int]] = set()

    def push_pair(i: int, j: int):
        lcm = mono_lcm(basis[i][0], basis[j][0])
        heapq.heappush(heap, (sum(lcm), order.key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        lcm = mono_lcm(li, lj)
        if lcm == mono_mul(li, lj):  # coprime leads: S-pair reduces to 0
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(basis[k][0], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                chain = True
                break
        if chain:
            continue
        s_terms = _spoly_terms(basis[i], basis[j], order, field)
        rem = _nf_terms(s_terms, basis, order, field)
        if not rem:
            continue
        r = Poly(ring, rem).monic(order)
        G.append(r)
        basis.append((r.leading(order)[0], r.terms))
        new = len(G) - 1
        for k in range(new):
            push_pair(k, new)
    return G


def reduce_basis(G: list[Poly], order: TermOrder | None = None) -> list[Poly]:
    """The unique reduced Groebner basis equivalent to the given basis G."""
    if not G:
        return []
    ring = G[0].ring
    order = order or ring.order
    field = ring.field
    by_lead = sorted((g.monic(order) for g in G if not g.is_zero()),
                     key=lambda g: order.key(g.leading(order)[0]))
    kept: list[Poly] = []
    kept_leads: list[Exponents] = []
    for g in by_lead:
        lead = g.leading(order)[0]
        if any(mono_divides(le, lead) for le in kept_leads):
            continue
        kept.append(g)
        kept_leads.append(lead)
    basis = [(g.leading(order)[0], g.terms) for g in kept]
    reduced = []
    for lead in kept_leads:
        # canonical form: lead minus the normal form of the lead monomial
        rem = _nf_terms({lead: field.one}, basis, order, field)
        terms = {e: field.neg(c) for e, c in rem.items()}
        terms[lead] = field.add(terms.get(lead, field.zero), field.one)
        reduced.append(Poly(ring, terms))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return reduced


def reduced_groebner_from_gens(gens: list[Poly], order: TermOrder | None = None) -> list[Poly]:
    return reduce_basis(buchberger(gens, order), order)


class Ideal:
    """Homogeneous ideal: generator list plus cached reduced Groebner bases,
    one per term order actually used."""

    __slots__ = ("ring", "generators", "_gb", "hf_cache", "std_cache")

    def __init__(self, ring: RingSpec, generators, check: bool = True):
        gens = tuple(generators)
        if check:
            for g in gens:
                if not isinstance(g, Poly) or g.ring != ring:
                    raise ValueError("generator from a different ring")
                if g.is_zero():
                    raise ValueError("zero generator")
                if not g.is_homogeneous():
                    raise ValueError(f"non-homogeneous generator: {poly_to_str(g)}")
        self.ring = ring
        self.generators = gens
        self._gb: dict[str, list[Poly]] = {}
        self.hf_cache: dict[int, int] = {}
        self.std_cache: dict[int, list[Exponents]] = {}

    def groebner(self, order: TermOrder | None = None) -> list[Poly]:
        order = order or self.ring.order
        key = order.name()
        gb = self._gb.get(key)
        if gb is None:
            gb = reduced_groebner_from_gens(list(self.generators), order)
            self._gb[key] = gb
        return gb

    def leading_monomials(self, order: TermOrder | None = None) -> list[Exponents]:
        order = order or self.ring.order
        return [g.leading(order)[0] for g in self.groebner(order)]

    def contains(self, f: Poly, order: TermOrder | None = None) -> bool:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if f.is_zero():
            return True
        gb = self.groebner(order)
        if not gb:
            return False
        return normal_form(f, gb, order or self.ring.order).is_zero()

    def min_generator_degree(self) -> int:
        """Smallest degree among reduced-GB elements (the initial degree)."""
        gb = self.groebner()
        if not gb:
            raise ValueError("the zero ideal has no generators")
        return min(g.degree() for g in gb)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "generators": [poly_to_str(g) for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Ideal":
        ring = RingSpec.from_json(data["ring"])
        gens = [parse_poly(ring, s) for s in data["generators"]]
        return cls(ring, gens)

    def __repr__(self):
        inside = ", ".join(poly_to_str(g) for g in self.generators[:4])
        if len(self.generators) > 4:
            inside += ", ..."
        return f"Ideal({inside})"


def reduced_groebner(I: Ideal, order: TermOrder | None = None) -> list[Poly]:
    return I.groebner(order)


def ideal_membership(f: Poly, I: Ideal) -> bool:
    return I.contains(f)


def equal_ideals(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return I.groebner() == J.groebner()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return Ideal(I.ring, I.generators + J.generators, check=False)


def _extend_ring(ring: RingSpec) -> RingSpec:
    return RingSpec(ring.nvars + 1, ring.field, TermOrder(ELIM, 1))


def _shift_up(ext: RingSpec, f: Poly, t_degree: int = 0) -> Poly:
    return Poly(ext, {(t_degree,) + e: c for e, c in f.terms.items()})


def _project_down(ring: RingSpec, f: Poly) -> Poly:
    return Poly(ring, {e[1:]: c for e, c in f.terms.items()})


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t*I + (1-t)*J and elimination of t."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    ring = I.ring
    if not I.generators:
        return I
    if not J.generators:
        return J
    ext = _extend_ring(ring)
    t = ext.variable(0)
    one = ext.one()
    gens = [t * _shift_up(ext, f) for f in I.groebner()]
    gens += [(one - t) * _shift_up(ext, g) for g in J.groebner()]
    gb = reduced_groebner_from_gens(gens, ext.order)
    kept = [g for g in gb if g.leading(ext.order)[0][0] == 0]
    projected = [_project_down(ring, g) for g in kept]
    result = Ideal(ring, projected)  # re-verifies homogeneity
    if ring.order.kind == GREVLEX:
        # elimination theorem: the t-free part is already the reduced
        # grevlex basis of the contraction
        result._gb[ring.order.name()] = projected
    return result


def _exact_divide(f: Poly, g: Poly) -> Poly:
    r, qs = normal_form(f, [g], with_quotients=True)
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return qs[0]


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {f : f*J in I}, via (I : g) = (I ∩ (g)) / g over generators."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    if not J.generators:
        raise ValueError("colon by the zero ideal")
    ring = I.ring
    result: Ideal | None = None
    for g in J.generators:
        if I.contains(g):
            continue  # (I : g) is the unit ideal
        meet = ideal_intersection(I, Ideal(ring, [g], check=False))
        colon = Ideal(ring, [_exact_divide(f, g) for f in meet.groebner()], check=False)
        result = colon if result is None else ideal_intersection(result, colon)
    if result is None:
        return Ideal(ring, [ring.one()], check=False)  # J subset of I
    return result


def leading_term_ideal(I: Ideal, order: TermOrder | None = None,
                       source: str = "gb") -> Ideal:
    """Monomial ideal of leading monomials, from the reduced GB or from the
    generators as given."""
    order = order or I.ring.order
    if source == "gb":
        polys = I.groebner(order)
    elif source == "given_generators":
        polys = list(I.generators)
    else:
        raise ValueError(f"unknown source {source!r}")
    if not polys:
        return Ideal(I.ring, [], check=False)
    leads = sorted({g.leading(order)[0] for g in polys}, key=order.key)
    minimal: list[Exponents] = []
    for e in leads:
        if not any(mono_divides(m, e) for m in minimal):
            minimal.append(e)
    field = I.ring.field
    return Ideal(I.ring, [Poly(I.ring, {e: field.one}) for e in minimal], check=False)


def is_groebner_basis(G: list[Poly], order: TermOrder | None = None) -> bool:
    """Buchberger certificate: every S-polynomial reduces to zero."""
    live = [g for g in G if not g.is_zero()]
    if len(live) <= 1:
        return True
    order = order or live[0].ring.order
    for j in range(len(live)):
        for i in range(j):
            if not normal_form(s_polynomial(live[i], live[j], order), live, order).is_zero():
                return False
    return True

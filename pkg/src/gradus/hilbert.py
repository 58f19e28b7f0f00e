"""Hilbert functions and polynomials, Artinian detection, socle degree.

HF(R/I)_d is the number of degree-d standard monomials: monomials divisible
by no leading monomial of the reduced Groebner basis. The Hilbert polynomial
is recovered by exact interpolation on a sliding window of degrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GradusError
from .field import rank
from .groebner import Ideal
from .ring import mono_divides, monomials_of_degree


def standard_monomials(I: Ideal, d: int) -> list:
    """Degree-d monomials outside the leading-term ideal of I."""
    cached = I.std_cache.get(d)
    if cached is not None:
        return cached
    leads = I.leading_monomials()
    monos = monomials_of_degree(I.ring.nvars, d, I.ring.order)
    std = [e for e in monos if not any(mono_divides(le, e) for le in leads)]
    I.std_cache[d] = std
    return std


def hilbert_function(I: Ideal, d: int) -> int:
    """dim_k (R/I)_d."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    v = I.hf_cache.get(d)
    if v is None:
        v = len(standard_monomials(I, d))
        I.hf_cache[d] = v
    return v


def hilbert_values(I: Ideal, dmax: int) -> list[int]:
    return [hilbert_function(I, d) for d in range(dmax + 1)]


def ideal_dimension_by_rank(I: Ideal, d: int) -> int:
    """dim_k I_d by rank of the degree-d multiples of the reduced GB.

    Linear-algebra oracle for hilbert_function: HF = C(n+d, n) - this.
    """
    ring = I.ring
    monos = monomials_of_degree(ring.nvars, d, ring.order)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    f = ring.field
    for g in I.groebner():
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - dg, ring.order):
            row = [f.zero] * len(monos)
            for e, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, e))]] = c
            rows.append(row)
    if not rows:
        return 0
    return rank(f, rows)


@dataclass
class HilbertPolynomial:
    """Polynomial in the degree variable d, coefficients exact rationals,
    constant term first."""

    coeffs: tuple
    stable_from: int

    def degree(self) -> int:
        return max((i for i, c in enumerate(self.coeffs) if c != 0), default=-1)

    def __call__(self, d: int) -> Fraction:
        return sum((c * d**i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __str__(self):
        if all(c == 0 for c in self.coeffs):
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else "-" + body
        for sign, body in parts[1:]:
            out += sign + body
        return out


class StabilizationError(GradusError):
    """HF never matched a degree-<= n interpolant inside the probe window."""

    def __init__(self, message, values):
        super().__init__(message)
        self.values = values


def _interpolate(points: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the unique polynomial through points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for xi, yi in points:
        # Lagrange basis polynomial for xi, expanded incrementally
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return tuple(coeffs)


def hilbert_polynomial(I: Ideal, probe_limit: int = 40) -> HilbertPolynomial:
    """The polynomial HF agrees with for large d, plus the first degree of
    agreement. Interpolates n+2 consecutive values, requires degree <= n,
    and confirms on 3 further degrees before accepting."""
    n = I.ring.nvars - 1
    window = n + 2
    values: list[int] = []

    def val(d: int) -> int:
        while len(values) <= d:
            values.append(hilbert_function(I, len(values)))
        return values[d]

    start = 0
    while start + window + 2 <= probe_limit:
        pts = [(start + k, val(start + k)) for k in range(window)]
        coeffs = _interpolate(pts)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        cand = HilbertPolynomial(coeffs, start)
        if cand.degree() <= n and all(
            cand(start + window + k) == val(start + window + k) for k in range(3)
        ):
            stable = start
            while stable > 0 and cand(stable - 1) == val(stable - 1):
                stable -= 1
            return HilbertPolynomial(coeffs, stable)
        start += 1
    raise StabilizationError(
        f"Hilbert function did not stabilize below degree {probe_limit}", values
    )


def _pure_power_exponents(I: Ideal) -> list[int] | None:
    """For each variable, the least k with x_i^k in the leading-term ideal;
    None if some variable has no pure power (non-Artinian)."""
    nvars = I.ring.nvars
    leads = I.leading_monomials()
    if any(sum(e) == 0 for e in leads):
        return [1] * nvars  # unit ideal: the zero ring is Artinian
    out = []
    for i in range(nvars):
        best = None
        for e in leads:
            if all(e[j] == 0 for j in range(nvars) if j != i) and e[i] > 0:
                best = e[i] if best is None else min(best, e[i])
        if best is None:
            return None
        out.append(best)
    return out


def is_artinian(I: Ideal) -> bool:
    """True iff the leading-term ideal contains a pure power of every
    variable; cross-checked against the eventually-zero HF criterion."""
    powers = _pure_power_exponents(I)
    if powers is None:
        return False
    bound = sum(k - 1 for k in powers) + 1
    if hilbert_function(I, bound) != 0:
        raise GradusError("Artinian criteria disagree; this is a bug")
    return True


@dataclass
class SocleReport:
    artinian: bool
    socle_degree: int | None
    initial_degree: int


def socle_degree(I: Ideal) -> SocleReport:
    """Top nonzero degree of the Hilbert function of an Artinian quotient,
    together with the initial degree of the defining ideal."""
    initial = I.min_generator_degree()
    powers = _pure_power_exponents(I)
    if powers is None:
        return SocleReport(False, None, initial)
    bound = sum(k - 1 for k in powers)
    omega = max((d for d in range(bound + 1) if hilbert_function(I, d) != 0), default=0)
    return SocleReport(True, omega, initial)


def delta_X(X) -> int:
    """Least degree where HF(R_X) reaches the number of points."""
    return X.delta()


def hilbert_report(I: Ideal, dmax: int, probe_limit: int = 40) -> dict:
    """CLI payload: values, polynomial, stabilization, Artinian data."""
    values = hilbert_values(I, dmax)
    out = {"values": values, "artinian": is_artinian(I)}
    try:
        hp = hilbert_polynomial(I, probe_limit)
        out["polynomial"] = str(hp)
        out["stable_from"] = hp.stable_from
    except StabilizationError:
        out["polynomial"] = None
        out["stable_from"] = None
    return out

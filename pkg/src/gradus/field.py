"""Exact coefficient fields and the dense linear algebra built on them.

Two field kinds are supported: a prime field F_p (default p = 32003) and
arbitrary-precision rationals. Field elements are stored in canonical form
as plain ints (residues in [0, p)) or `fractions.Fraction` values; the field
object carries the arithmetic. Matrices over a prime field are row-reduced
with a vectorized numpy backend; rational matrices use plain Fraction
elimination, which is only ever used at cross-check sizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParseError

DEFAULT_PRIME = 32003

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p arithmetic on canonical residues in [0, p)."""

    __slots__ = ("p",)
    kind = "prime"

    def __init__(self, p: int = DEFAULT_PRIME):
        if not (2 < p < 2**31):
            raise ValueError(f"prime field characteristic out of range: {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    zero = 0
    one = 1

    def normalize(self, x: int) -> int:
        return x % self.p

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def from_fraction(self, q: Fraction | int) -> int:
        if isinstance(q, Fraction):
            return self.div(q.numerator % self.p, q.denominator % self.p)
        return q % self.p

    def balanced(self, a: int) -> int:
        """Symmetric representative in (-p/2, p/2], used only for printing."""
        a %= self.p
        return a if a <= self.p // 2 else a - self.p

    def scalar_str(self, a: int) -> str:
        return str(self.balanced(a))

    def parse_scalar(self, text: str) -> int:
        try:
            return self.from_fraction(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad F_{self.p} scalar {text!r}: {exc}") from None

    def random(self, rng) -> int:
        return rng.randrange(self.p)

    def spec_string(self) -> str:
        return str(self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rational arithmetic on fully reduced Fractions."""

    __slots__ = ()
    kind = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, x) -> Fraction:
        return Fraction(x)

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    def from_fraction(self, q):
        return Fraction(q)

    def scalar_str(self, a) -> str:
        return str(a)

    def parse_scalar(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {text!r}: {exc}") from None

    def random(self, rng) -> Fraction:
        return Fraction(rng.randrange(-20, 21), rng.randrange(1, 8))

    def spec_string(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


Field = PrimeField | RationalField


def field_from_string(text: str) -> Field:
    """Parse the CLI/JSON field spec: a prime such as "32003", or "Q"."""
    text = text.strip()
    if text.upper() in ("Q", "QQ", "RATIONAL"):
        return RationalField()
    try:
        p = int(text)
    except ValueError:
        raise ParseError(f"bad field spec {text!r}: expected a prime or 'Q'") from None
    try:
        return PrimeField(p)
    except ValueError as exc:
        raise ParseError(f"bad field spec {text!r}: {exc}") from None


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; the checked public face of
    the raw int/Fraction representation used in hot loops."""

    field: Field
    value: object

    def _join(self, other: "Scalar") -> Field:
        if not isinstance(other, Scalar):
            raise TypeError(f"cannot mix Scalar with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"mixed fields: {self.field!r} vs {other.field!r}")
        return self.field

    def __add__(self, other):
        return Scalar(self.field, self._join(other).add(self.value, other.value))

    def __sub__(self, other):
        return Scalar(self.field, self._join(other).sub(self.value, other.value))

    def __mul__(self, other):
        return Scalar(self.field, self._join(other).mul(self.value, other.value))

    def __truediv__(self, other):
        return Scalar(self.field, self._join(other).div(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.scalar_str(self.value)


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Checked scalar arithmetic: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Dense Gaussian elimination: rank / rref / kernel over either field kind.
# First-nonzero pivoting; prime fields run on int64 numpy rows (p < 2^31, so
# products stay below 2^62), rationals on Fraction lists.
# ---------------------------------------------------------------------------


def _rref_modp(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _rref_exact(rows: list[list], field) -> tuple[list[list], list[int]]:
    A = [list(row) for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if not field.is_zero(A[i][c])), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, v) for v in A[r]]
        for i in range(m):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(field: Field, rows, ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if ncols is None:
        ncols = len(rows[0])
    if ncols == 0:
        return [[] for _ in rows], []
    if field.kind == "prime":
        R, pivots = _rref_modp(np.array(rows, dtype=np.int64), field.p)
        return [[int(v) for v in row] for row in R], pivots
    return _rref_exact(rows, field)


def rank(field: Field, rows, ncols: int | None = None) -> int:
    rows = [list(r) for r in rows]
    if not rows or (ncols is None and not rows[0]):
        return 0
    if field.kind == "prime":
        return len(_rref_modp(np.array(rows, dtype=np.int64), field.p)[1])
    return len(_rref_exact(rows, field)[1])


def kernel_basis(field: Field, rows, ncols: int | None = None) -> list[list]:
    """Basis of the right null space {v : M v = 0} of the given row matrix.

    An empty row list (with ncols given) has the full space as kernel.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("kernel_basis needs ncols when the matrix has no rows")
        ncols = len(rows[0])
    if not rows:
        R, pivots = [], []
    else:
        R, pivots = rref(field, rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row_idx, pc in enumerate(pivots):
            v[pc] = field.neg(R[row_idx][f])
        basis.append(v)
    return basis


def row_space_basis(field: Field, rows, ncols: int | None = None) -> list[list]:
    """Basis (in rref form) of the span of the given rows."""
    if not rows:
        return []
    R, pivots = rref(field, rows, ncols)
    return [R[i] for i in range(len(pivots))]

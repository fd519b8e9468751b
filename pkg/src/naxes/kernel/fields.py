"""Exact scalar fields: the rationals and prime fields GF(p).

Homogeneous coordinates are stored as integer triples in a canonical
form chosen by the field; affine quantities (ratios, circle coefficients)
are field scalars: :class:`fractions.Fraction` over the rationals and
:class:`Residue` over GF(p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Scalar = Union[Fraction, "Residue"]


class FieldError(ValueError):
    """Raised for invalid fields or mixed-field arithmetic."""


class Residue:
    """An element of GF(p), stored as an int in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return Residue(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rationals. Homogeneous triples are coprime integers
    whose first nonzero entry is positive."""

    characteristic = 0

    @property
    def tag(self) -> str:
        return "rational"

    def __str__(self):
        return "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Residue):
            raise FieldError("cannot lift a residue to the rationals")
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def normalize(self, coords: Sequence[int]) -> tuple[int, ...]:
        g = 0
        for c in coords:
            g = math.gcd(g, c)
        if g == 0:
            return tuple(coords)
        lead = next(c for c in coords if c)
        if lead < 0:
            g = -g
        return tuple(c // g for c in coords)

    def integral(self, scalars: Sequence) -> tuple[int, ...]:
        """Clear denominators of a scalar vector (result not normalized)."""
        fr = [Fraction(s) for s in scalars]
        den = 1
        for f in fr:
            den = den * f.denominator // math.gcd(den, f.denominator)
        return tuple(f.numerator * (den // f.denominator) for f in fr)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime p >= 11. Homogeneous triples are residues in
    [0, p) with the first nonzero entry scaled to 1."""

    p: int

    def __post_init__(self):
        if self.p == 2:
            raise FieldError(
                "characteristic 2 is not supported: circle equations divide by 2 "
                "and Brianchon's theorem fails in characteristic 2"
            )
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.p < 11:
            raise FieldError(f"prime {self.p} too small; need p >= 11")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def tag(self) -> str:
        return f"prime {self.p}"

    def __str__(self):
        return f"GF({self.p})"

    def __call__(self, value) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldError(f"residue mod {value.p} used in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Residue(0, self.p) + value
        return Residue(int(value), self.p)

    @property
    def zero(self) -> Residue:
        return Residue(0, self.p)

    @property
    def one(self) -> Residue:
        return Residue(1, self.p)

    def normalize(self, coords: Sequence[int]) -> tuple[int, ...]:
        p = self.p
        red = [c % p for c in coords]
        lead = next((c for c in red if c), 0)
        if lead == 0:
            return tuple(red)
        inv = pow(lead, -1, p)
        return tuple(c * inv % p for c in red)

    def integral(self, scalars: Sequence) -> tuple[int, ...]:
        return tuple(self(s).value for s in scalars)

    def from_int(self, n: int) -> Residue:
        return Residue(n, self.p)


Field = Union[RationalField, PrimeField]

QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag) -> Field:
    """Accept ``"rational"``, ``{"prime": p}``, ``"prime p"`` or an int p."""
    if isinstance(tag, (RationalField, PrimeField)):
        return tag
    if tag in ("rational", "QQ", None):
        return QQ
    if isinstance(tag, dict) and set(tag) == {"prime"}:
        return GF(int(tag["prime"]))
    if isinstance(tag, int):
        return GF(tag)
    if isinstance(tag, str) and tag.startswith("prime "):
        return GF(int(tag.split()[1]))
    raise FieldError(f"unknown field tag {tag!r}")


# -- linear algebra over a field --------------------------------------------


def _scalar_matrix(field: Field, rows):
    return [[field(v) for v in row] for row in rows]


def det(field: Field, rows) -> Scalar:
    """Determinant of a square matrix by Gaussian elimination."""
    m = _scalar_matrix(field, rows)
    n = len(m)
    result = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        pv = m[col][col]
        result = result * pv
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return result


def rank(field: Field, rows) -> int:
    m = _scalar_matrix(field, rows)
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rk], m[pivot] = m[pivot], m[rk]
        pv = m[rk][col]
        for r in range(len(m)):
            if r != rk and m[r][col]:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def solve(field: Field, a, b) -> list:
    """Solve the square system a x = b; raises ZeroDivisionError if singular."""
    n = len(a)
    m = [list(row) + [bv] for row, bv in zip(_scalar_matrix(field, a), (field(v) for v in b))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]

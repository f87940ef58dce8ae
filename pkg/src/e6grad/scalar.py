"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Every scalar in this package is either a ``fractions.Fraction`` or a ``Cyc``.
``Cyc`` stores coordinates in the power basis {1, z, z^2, z^3} of Q(zeta_12),
where z is a primitive 12th root of unity with minimal polynomial
z^4 - z^2 + 1.  The field contains

    i     = z^3                (i^2 = -1),
    omega = z^4 = z^2 - 1      (primitive cube root of unity),
    sqrt3 = z + conj(z) = 2z - z^3,

so a single field covers every eigenvalue and matrix entry needed by the
constructions in this package.  No floating point is used anywhere.

Real elements of Q(zeta_12) all lie in Q(sqrt3); their sign is decided by
exact rational comparison (``sign_real``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "Cyc"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce4(x) -> tuple:
    """Coordinates of an int/Fraction/Cyc in the power basis."""
    if isinstance(x, Cyc):
        return x.c
    return (Fraction(x), _ZERO, _ZERO, _ZERO)


class Cyc:
    """An element of Q(zeta_12) in the power basis {1, z, z^2, z^3}."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @staticmethod
    def _make(c: tuple) -> "Cyc":
        out = object.__new__(Cyc)
        out.c = c
        return out

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        a, b = self.c, _coerce4(other)
        return Cyc._make((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Cyc._make((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        a, b = self.c, _coerce4(other)
        return Cyc._make((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CYC_ZERO
            a = self.c
            return Cyc._make((a[0] * other, a[1] * other, a[2] * other, a[3] * other))
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = self.c, other.c
        # Convolution up to degree 6, then reduce with z^4 = z^2 - 1,
        # z^5 = z^3 - z, z^6 = -1.
        d0 = a[0] * b[0]
        d1 = a[0] * b[1] + a[1] * b[0]
        d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        d3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        d4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        d5 = a[2] * b[3] + a[3] * b[2]
        d6 = a[3] * b[3]
        return Cyc._make((d0 - d4 - d6, d1 - d5, d2 + d4, d3 + d5))

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        # Solve (self * x) = 1 as a 4x4 rational linear system in the
        # coordinates of x.  Columns are self * z^k.
        cols = []
        p = CYC_ONE
        for _ in range(4):
            cols.append((self * p).c)
            p = p * ZETA
        m = [[cols[j][i] for j in range(4)] + [_ONE if i == 0 else _ZERO]
             for i in range(4)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            d = m[col][col]
            m[col] = [v / d for v in m[col]]
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
        return Cyc._make((m[0][4], m[1][4], m[2][4], m[3][4]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, Cyc):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return Cyc(other) * self.inv() if isinstance(other, (int, Fraction)) else NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out, p = CYC_ONE, self
        while n:
            if n & 1:
                out = out * p
            p = p * p
            n >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def conj(self) -> "Cyc":
        """Complex conjugation, the field automorphism z -> z^(-1)."""
        c0, c1, c2, c3 = self.c
        # z^-1 = z - z^3, z^-2 = 1 - z^2, z^-3 = -z^3
        return Cyc._make((c0 + c2, c1, -c2, -c1 - c3))

    def is_zero(self) -> bool:
        return self.c == (_ZERO, _ZERO, _ZERO, _ZERO)

    def is_real(self) -> bool:
        """True iff self equals its complex conjugate."""
        c0, c1, c2, c3 = self.c
        return c2 == 0 and c1 == -2 * c3

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def as_fraction(self) -> Fraction:
        """The value as a rational number; raises ValueError if irrational."""
        if not self.is_rational():
            raise ValueError(f"not rational: {self!r}")
        return self.c[0]

    def real_parts(self) -> tuple[Fraction, Fraction]:
        """For real self, the pair (p, q) with self = p + q*sqrt3."""
        if not self.is_real():
            raise ValueError(f"not real: {self!r}")
        return (self.c[0], -self.c[3])

    def sign_real(self) -> int:
        """Sign of a real element under the embedding sqrt3 > 0.

        Decided exactly: for p + q*sqrt3 with p, q of mixed sign, compare
        p^2 with 3 q^2.  Raises ValueError on non-real input.
        """
        p, q = self.real_parts()
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # mixed signs: |p| vs |q|*sqrt3
        cmp = p * p - 3 * q * q
        if cmp == 0:
            raise ValueError("sqrt3 is irrational; unreachable")
        big_is_p = cmp > 0
        return (1 if p > 0 else -1) if big_is_p else (1 if q > 0 else -1)

    # -- misc --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.c == _coerce4(other)
        if isinstance(other, Cyc):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        names = ("", "*z", "*z^2", "*z^3")
        terms = [f"{v}{n}" for v, n in zip(self.c, names) if v != 0]
        return " + ".join(terms) if terms else "0"

    def to_strings(self) -> list[str]:
        """Serialize as four 'p/q' strings in basis order {1, z, z^2, z^3}."""
        return [f"{v.numerator}/{v.denominator}" for v in self.c]

    @staticmethod
    def from_strings(parts) -> "Cyc":
        return Cyc(*(Fraction(s) for s in parts))


CYC_ZERO = Cyc(0)
CYC_ONE = Cyc(1)
ZETA = Cyc(0, 1, 0, 0)
I = Cyc(0, 0, 0, 1)            # z^3
OMEGA = Cyc(-1, 0, 1, 0)       # z^2 - 1
SQRT3 = Cyc(0, 2, 0, -1)       # 2z - z^3


def cyc(x: Scalar) -> Cyc:
    """Lift an int/Fraction into Q(zeta_12)."""
    return x if isinstance(x, Cyc) else Cyc(x)


def sign_exact(x: Scalar) -> int:
    """Sign of an exact real scalar (Fraction or real Cyc)."""
    if isinstance(x, Cyc):
        return x.sign_real()
    return 0 if x == 0 else (1 if x > 0 else -1)


def is_zero(x: Scalar) -> bool:
    return x.is_zero() if isinstance(x, Cyc) else x == 0


def as_fraction(x: Scalar) -> Fraction:
    """Coerce an exact scalar known to be rational to a Fraction."""
    if isinstance(x, Cyc):
        return x.as_fraction()
    return Fraction(x)

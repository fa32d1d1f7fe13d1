"""Exact scalar and 2x2 matrix arithmetic.

The scalar tower is: arbitrary-precision rationals (``fractions.Fraction``,
re-exported as :data:`Rational`), the quadratic ring Q(sqrt(D)) with a fixed
rational discriminant D (:class:`QuadElement`), and 2x2 matrices over either
scalar kind (:class:`Mat2`).

Everything is immutable and every operation is a pure function, so values are
safe to share between threads. No floats appear anywhere: equality of results
is exact structural equality of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = Fraction
"""Base scalar. ``fractions.Fraction`` already guarantees the canonical form
this library relies on: positive denominator, gcd-reduced, zero stored as 0/1.
"""

RationalLike = int | Fraction


class MismatchedDiscriminant(ValueError):
    """Two quadratic elements over different sqrt(D) were combined."""


class IrrationalResidue(ArithmeticError):
    """A value that must be rational kept a nonzero sqrt(D) coefficient.

    This is never caused by user input: it can only mean a closed formula
    was transcribed incorrectly, so it is surfaced loudly instead of being
    silently truncated.
    """


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of ``x`` if ``x`` is the square of a rational, else None."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class QuadElement:
    """An element ``rat + irr*sqrt(disc)`` of Q(sqrt(D)), all parts rational.

    ``sqrt(disc)`` stays symbolic even when ``disc`` is a perfect square;
    :meth:`normalized` folds it into the rational part on demand, and every
    equality comparison against a plain rational goes through that fold.
    Elements over different discriminants do not mix (arithmetic raises
    :class:`MismatchedDiscriminant`); plain rationals coerce into any
    discriminant.
    """

    __slots__ = ("rat", "irr", "disc")

    def __init__(self, rat: RationalLike, irr: RationalLike, disc: RationalLike):
        # bypass __setattr__-style tricks: plain slots, treated as frozen
        self.rat = Fraction(rat)
        self.irr = Fraction(irr)
        self.disc = Fraction(disc)

    @classmethod
    def from_rational(cls, value: RationalLike, disc: RationalLike) -> QuadElement:
        return cls(value, 0, disc)

    @classmethod
    def sqrt_disc(cls, disc: RationalLike) -> QuadElement:
        """The element sqrt(disc) itself."""
        return cls(0, 1, disc)

    def _coerce(self, other) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.disc != self.disc:
                raise MismatchedDiscriminant(
                    f"cannot combine sqrt({self.disc}) with sqrt({other.disc})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(other, 0, self.disc)
        return None

    def __add__(self, other) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.rat + o.rat, self.irr + o.irr, self.disc)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.rat, -self.irr, self.disc)

    def __sub__(self, other) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.rat - o.rat, self.irr - o.irr, self.disc)

    def __rsub__(self, other) -> QuadElement:
        return (-self) + other

    def __mul__(self, other) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(
            self.rat * o.rat + self.irr * o.irr * self.disc,
            self.rat * o.irr + self.irr * o.rat,
            self.disc,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElement(1, 0, self.disc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadElement:
        """Conjugation sqrt(D) -> -sqrt(D); a ring homomorphism."""
        return QuadElement(self.rat, -self.irr, self.disc)

    def norm(self) -> Fraction:
        """rat^2 - irr^2 * disc (the element times its conjugate)."""
        return self.rat * self.rat - self.irr * self.irr * self.disc

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            # covers both the zero element and zero divisors of square disc
            raise ZeroDivisionError(f"{self!r} has zero norm and no inverse")
        return QuadElement(self.rat / n, -self.irr / n, self.disc)

    def __truediv__(self, other) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadElement:
        return self.inverse() * other

    def normalized(self) -> QuadElement:
        """Fold sqrt(disc) into the rational part when disc is a perfect square."""
        if self.irr == 0:
            return self
        root = rational_sqrt(self.disc)
        if root is None:
            return self
        return QuadElement(self.rat + self.irr * root, 0, self.disc)

    def is_rational(self) -> bool:
        return self.normalized().irr == 0

    def to_rational(self) -> Fraction:
        norm_self = self.normalized()
        if norm_self.irr != 0:
            raise IrrationalResidue(
                f"{self!r} kept a nonzero sqrt({self.disc}) coefficient"
            )
        return norm_self.rat

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElement):
            if self.disc == other.disc:
                a, b = self.normalized(), other.normalized()
                return a.rat == b.rat and a.irr == b.irr
            a, b = self.normalized(), other.normalized()
            return a.irr == 0 and b.irr == 0 and a.rat == b.rat
        if isinstance(other, (int, Fraction)):
            n = self.normalized()
            return n.irr == 0 and n.rat == other
        return NotImplemented

    def __bool__(self) -> bool:
        return self != 0

    def __repr__(self) -> str:
        return f"QuadElement({self.rat}, {self.irr}, disc={self.disc})"

    def __str__(self) -> str:
        if self.irr == 0:
            return str(self.rat)
        return f"{self.rat} + {self.irr}*sqrt({self.disc})"


Scalar = Fraction | QuadElement


def _coerce_entry(x):
    return Fraction(x) if isinstance(x, int) else x


def _one_like(x: Scalar) -> Scalar:
    if isinstance(x, QuadElement):
        return QuadElement(1, 0, x.disc)
    return Fraction(1)


def _inverse_scalar(c: Scalar) -> Scalar:
    if isinstance(c, QuadElement):
        return c.inverse()
    return 1 / Fraction(c)


class Mat2:
    """2x2 matrix over one scalar kind (all-Fraction or all-QuadElement).

    Supports ``+``, ``-``, matrix ``*``, scalar ``*`` (either side),
    ``/ scalar``, ``** n`` by binary exponentiation, :meth:`det` and
    :meth:`trace`. Multiplying by a QuadElement scalar lifts a rational
    matrix into Q(sqrt(D)); :meth:`to_rational` goes back down and raises
    :class:`IrrationalResidue` if any sqrt part survives normalization.
    """

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        self.e11 = _coerce_entry(e11)
        self.e12 = _coerce_entry(e12)
        self.e21 = _coerce_entry(e21)
        self.e22 = _coerce_entry(e22)

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> Mat2:
        return cls(0, 0, 0, 0)

    def identity_like(self) -> Mat2:
        one = _one_like(self.e11)
        return Mat2(one, one - one, one - one, one)

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.e11, self.e12, self.e21, self.e22)

    def rows(self) -> list[list[Scalar]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]

    def map(self, fn) -> Mat2:
        return Mat2(fn(self.e11), fn(self.e12), fn(self.e21), fn(self.e22))

    def lift(self, disc: RationalLike) -> Mat2:
        """Embed a rational matrix into Q(sqrt(disc))."""
        return self.map(lambda e: QuadElement(e, 0, disc))

    def to_rational(self) -> Mat2:
        def down(e):
            return e.to_rational() if isinstance(e, QuadElement) else e

        return self.map(down)

    def __add__(self, other) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 + other.e11,
            self.e12 + other.e12,
            self.e21 + other.e21,
            self.e22 + other.e22,
        )

    def __sub__(self, other) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 - other.e11,
            self.e12 - other.e12,
            self.e21 - other.e21,
            self.e22 - other.e22,
        )

    def __neg__(self) -> Mat2:
        return self.map(lambda e: -e)

    def __mul__(self, other) -> Mat2:
        if isinstance(other, Mat2):
            return Mat2(
                self.e11 * other.e11 + self.e12 * other.e21,
                self.e11 * other.e12 + self.e12 * other.e22,
                self.e21 * other.e11 + self.e22 * other.e21,
                self.e21 * other.e12 + self.e22 * other.e22,
            )
        if isinstance(other, (int, Fraction, QuadElement)):
            return self.map(lambda e: e * other)
        return NotImplemented

    def __rmul__(self, other) -> Mat2:
        if isinstance(other, (int, Fraction, QuadElement)):
            return self.map(lambda e: other * e)
        return NotImplemented

    def __truediv__(self, other) -> Mat2:
        if isinstance(other, (int, Fraction, QuadElement)):
            return self * _inverse_scalar(other)
        return NotImplemented

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            raise ValueError("matrix powers are defined for n >= 0 only")
        result = self.identity_like()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def det(self) -> Scalar:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> Scalar:
        return self.e11 + self.e22

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.e11 == other.e11
            and self.e12 == other.e12
            and self.e21 == other.e21
            and self.e22 == other.e22
        )

    def __bool__(self) -> bool:
        return bool(self.e11) or bool(self.e12) or bool(self.e21) or bool(self.e22)

    def __repr__(self) -> str:
        return f"Mat2({self.e11!r}, {self.e12!r}, {self.e21!r}, {self.e22!r})"

    def __str__(self) -> str:
        return f"[[{self.e11}, {self.e12}], [{self.e21}, {self.e22}]]"

"""Scalar: the exact field Q(i)(q_s), as reduced fractions of QPoly.

q is represented as q_s^2 throughout, so every value the construction
needs (q, sqrt(-1), the duality constants, quantum integers) lives here.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PoleError
from .gauss import GaussRational
from .qpoly import QP_ONE, QP_ZERO, QPoly, qpoly_gcd


class Scalar:
    """Reduced fraction num/den of QPoly with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=QP_ONE, _trusted=False):
        if _trusted:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            self.num, self.den = QP_ZERO, QP_ONE
            return
        if not den.is_one():
            g = qpoly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
            lc = den.lc()
            if lc != GaussRational(1):
                inv = lc.inverse()
                num = num * QPoly.from_gauss(inv)
                den = den * QPoly.from_gauss(inv)
        self.num, self.den = num, den

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, n):
        return cls(QPoly.from_int(n), QP_ONE, _trusted=True)

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls(QPoly([f.numerator], [], f.denominator), QP_ONE,
                   _trusted=True)

    @classmethod
    def from_gauss(cls, g):
        return cls(QPoly.from_gauss(g), QP_ONE, _trusted=True)

    @classmethod
    def qs_pow(cls, m):
        """q_s^m for any integer m."""
        if m >= 0:
            return cls(QPoly.monomial(m), QP_ONE, _trusted=True)
        return cls(QP_ONE, QPoly.monomial(-m), _trusted=True)

    @classmethod
    def q_pow(cls, m):
        """q^m = q_s^(2m)."""
        return cls.qs_pow(2 * m)

    @classmethod
    def i_pow(cls, k):
        """sqrt(-1)^k."""
        return cls.from_gauss(_I_POWERS[k % 4])

    @classmethod
    def monomial_of(cls, k, m):
        """i^k * q_s^m."""
        out = cls.qs_pow(m)
        if k % 4:
            out = out * cls.i_pow(k)
        return out

    @classmethod
    def neg_qt_pow(cls, t, j):
        """(-q^t)^(j/t) for integer j, with the branch (-q^2)^(1/2) = i*q.

        t = 1 gives (-q)^j; t = 2 gives (i*q)^j.
        """
        if t == 1:
            return cls.monomial_of(2 * j, 2 * j)
        if t == 2:
            return cls.monomial_of(j, 2 * j)
        raise ValueError(f"unsupported t={t}")

    # -- queries --------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __bool__(self):
        return not self.num.is_zero()

    def monomial(self):
        """Return (k, m) with value i^k * q_s^m, or None if not such a unit.

        m may be negative (monomial denominator).
        """
        mn = self.num.is_monomial()
        if mn is None:
            return None
        md = self.den.is_monomial()
        if md is None or md[0] != 0:
            return None
        return ((mn[0]) % 4, mn[1] - md[1])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        if self.den == other.den:
            return Scalar(self.num - other.num, self.den)
        return Scalar(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return Scalar(-self.num, self.den, _trusted=True)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return S_ZERO
        return Scalar(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = S_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        # Cross-multiplied comparison stays valid for unreduced internals.
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def normalize(self):
        """Fully reduced canonical representative (idempotent)."""
        return Scalar(self.num, self.den)

    def eval_gauss(self, x):
        d = self.den.eval_gauss(x)
        if not d:
            raise PoleError("pole at evaluation point")
        return self.num.eval_gauss(x) * d.inverse()

    # -- io -------------------------------------------------------------------

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(QPoly.from_json(obj["num"]), QPoly.from_json(obj["den"]))

    def __str__(self):
        s = self.normalize()
        if s.den.is_one():
            return str(s.num)
        num = str(s.num)
        den = str(s.den)
        if " " in num:
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"


_I_POWERS = (GaussRational(1), GaussRational(0, 1), GaussRational(-1),
             GaussRational(0, -1))

S_ZERO = Scalar(QP_ZERO, QP_ONE, _trusted=True)
S_ONE = Scalar(QP_ONE, QP_ONE, _trusted=True)
S_I = Scalar.from_gauss(GaussRational(0, 1))
S_Q = Scalar.q_pow(1)
S_QS = Scalar.qs_pow(1)


def quantum_integer(n, qi):
    """[n] at base qi: (qi^n - qi^-n)/(qi - qi^-1)."""
    return (qi ** n - qi ** (-n)) / (qi - qi.inverse())


def quantum_factorial(n, qi):
    out = S_ONE
    for k in range(2, n + 1):
        out = out * quantum_integer(k, qi)
    return out

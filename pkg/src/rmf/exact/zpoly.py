"""Polynomials and rational functions in the spectral variable z over Scalar."""

from __future__ import annotations

from ..errors import PoleError
from .scalar import S_ONE, S_ZERO, Scalar


class ZPoly:
    """Dense polynomial in z with Scalar coefficients (no trailing zeros)."""

    __slots__ = ("c",)

    def __init__(self, coeffs=(), _trusted=False):
        if _trusted:
            self.c = coeffs
            return
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.c = tuple(coeffs)

    @classmethod
    def from_scalar(cls, s):
        return cls((s,)) if s else cls(())

    @classmethod
    def z_pow(cls, m, coeff=S_ONE):
        return cls((S_ZERO,) * m + (coeff,))

    @classmethod
    def from_roots(cls, roots):
        """Monic product of (z - r) over the given Scalar roots."""
        out = ZP_ONE
        for r in roots:
            out = out * cls((-r, S_ONE))
        return out

    # -- queries --------------------------------------------------------------

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def is_one(self):
        return len(self.c) == 1 and self.c[0].is_one()

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else S_ZERO

    def lc(self):
        return self.c[-1] if self.c else S_ZERO

    def is_monic(self):
        return bool(self.c) and self.c[-1].is_one()

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        if len(self.c) != len(other.c):
            return False
        return all(a == b for a, b in zip(self.c, other.c))

    __hash__ = None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] = out[k] + v
        return ZPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ZPoly(tuple(-v for v in self.c), _trusted=True)

    def __mul__(self, other):
        if not self.c or not other.c:
            return ZP_ZERO
        out = [S_ZERO] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return ZPoly(out)

    def scale(self, s):
        if not s:
            return ZP_ZERO
        return ZPoly(tuple(v * s for v in self.c), _trusted=True)

    def scale_z(self, s):
        """Substitute z -> s*z for a nonzero Scalar s."""
        out, p = [], S_ONE
        for v in self.c:
            out.append(v * p)
            p = p * s
        return ZPoly(out)

    def mul_zpow(self, m):
        if not self.c:
            return self
        return ZPoly((S_ZERO,) * m + self.c, _trusted=True)

    def monic(self):
        if not self.c or self.is_monic():
            return self
        inv = self.c[-1].inverse()
        return ZPoly(tuple(v * inv for v in self.c[:-1]) + (S_ONE,),
                     _trusted=True)

    def divmod(self, other):
        if not other.c:
            raise ZeroDivisionError("division by zero")
        r = list(self.c)
        db = other.degree
        inv = other.lc().inverse()
        q = [S_ZERO] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            if r[-1].is_zero():
                r.pop()
                continue
            c = r[-1] * inv
            k = len(r) - 1 - db
            q[k] = c
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * other.c[j]
            r.pop()
        return ZPoly(q), ZPoly(r)

    def divexact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def evaluate(self, z0):
        acc = S_ZERO
        for k in range(len(self.c) - 1, -1, -1):
            acc = acc * z0 + self.c[k]
        return acc

    # -- io -------------------------------------------------------------------

    def to_json(self):
        return [[k, v.to_json()] for k, v in enumerate(self.c) if v]

    @classmethod
    def from_json(cls, items):
        if not items:
            return ZP_ZERO
        n = max(k for k, _ in items) + 1
        out = [S_ZERO] * n
        for k, v in items:
            out[k] = Scalar.from_json(v)
        return cls(out)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if not v:
                continue
            vs = str(v)
            if k == 0:
                parts.append(f"({vs})" if ("+" in vs[1:] or "-" in vs[1:] or "/" in vs) else vs)
                continue
            var = "z" if k == 1 else f"z^{k}"
            if vs == "1":
                parts.append(var)
            elif vs == "-1":
                parts.append(f"-{var}")
            else:
                if "+" in vs[1:] or "-" in vs[1:] or "/" in vs:
                    vs = f"({vs})"
                parts.append(f"{vs}*{var}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ZPoly({self})"


def zpoly_gcd(a, b):
    """Monic gcd in z over the Scalar fraction field."""
    while b.c:
        a, b = b, a.divmod(b)[1]
    return a.monic()


ZP_ZERO = ZPoly(())
ZP_ONE = ZPoly((S_ONE,), _trusted=True)


class SpectralFn:
    """Reduced rational function in z over Scalar, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ZP_ONE, _trusted=False):
        if _trusted:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            self.num, self.den = ZP_ZERO, ZP_ONE
            return
        if den.degree > 0:
            g = zpoly_gcd(num, den)
            if g.degree > 0:
                num = num.divexact(g)
                den = den.divexact(g)
        if not den.is_monic():
            inv = den.lc().inverse()
            num = num.scale(inv)
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def from_scalar(cls, s):
        return cls(ZPoly.from_scalar(s), ZP_ONE, _trusted=True)

    @classmethod
    def z_monomial(cls, m, coeff=S_ONE):
        """coeff * z^m for any integer m."""
        if m >= 0:
            return cls(ZPoly.z_pow(m, coeff), ZP_ONE, _trusted=True)
        return cls(ZPoly.from_scalar(coeff), ZPoly.z_pow(-m))

    # -- queries --------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __bool__(self):
        return bool(self.num.c)

    def as_scalar(self):
        """The Scalar value when the function is constant in z, else None."""
        s = self.normalize()
        if s.den.degree == 0 and s.num.degree <= 0:
            return s.num.coeff(0)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if self.den == other.den:
            return SpectralFn(self.num + other.num, self.den)
        return SpectralFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SpectralFn(-self.num, self.den, _trusted=True)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return SF_ZERO
        return SpectralFn(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return SpectralFn(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, SpectralFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def normalize(self):
        return SpectralFn(self.num, self.den)

    def scale_z(self, s):
        """Substitute z -> s*z."""
        return SpectralFn(self.num.scale_z(s), self.den.scale_z(s))

    def evaluate(self, z0):
        """Exact value at z = z0 (Scalar); raises PoleError at poles."""
        f = self.normalize()
        d = f.den.evaluate(z0)
        if not d:
            raise PoleError("pole at evaluation point")
        return f.num.evaluate(z0) * d.inverse()

    def unit_ratio(self, other):
        """If self = u * z^r * other, return (u, r); else None."""
        if self.is_zero() or other.is_zero():
            return None
        q = (self / other).normalize()
        # Unit means numerator and denominator are z-monomials over a
        # monomial Scalar coefficient.
        nn = [k for k, v in enumerate(q.num.c) if v]
        nd = [k for k, v in enumerate(q.den.c) if v]
        if len(nn) != 1 or len(nd) != 1:
            return None
        u = q.num.c[nn[0]] / q.den.c[nd[0]]
        return (u, nn[0] - nd[0])

    # -- io -------------------------------------------------------------------

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(ZPoly.from_json(obj["num"]), ZPoly.from_json(obj["den"]))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"SpectralFn({self})"


SF_ZERO = SpectralFn(ZP_ZERO, ZP_ONE, _trusted=True)
SF_ONE = SpectralFn(ZP_ONE, ZP_ONE, _trusted=True)
SF_Z = SpectralFn(ZPoly.z_pow(1), ZP_ONE, _trusted=True)

"""Dense polynomials in q_s over Q(i), stored with integer coefficient lists.

A QPoly holds two equal-length tuples of Python ints (real and imaginary
coefficient parts) plus one positive integer denominator shared by every
coefficient.  All arithmetic is exact.  Multiplication of long polynomials
is done by Kronecker packing into big integers, which CPython (or gmpy2,
when available) multiplies subquadratically.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .gauss import GaussRational

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _mpz = int

_PACK_THRESHOLD = 256  # len(a)*len(b) above which packed multiplication wins


# -- integer coefficient-list kernels ----------------------------------------

def _istrip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n]


def _iadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return out


def _isub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for k, v in enumerate(b):
        out[k] -= v
    return out


def _imul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _pack(c, width):
    acc = 0
    for v in reversed(c):
        acc = (acc << width) | v
    return acc


def _unpack(v, width, n):
    mask = (1 << width) - 1
    out = []
    for _ in range(n):
        out.append(int(v & mask))
        v >>= width
    return out


def _imul_packed(a, b):
    n = len(a) + len(b) - 1
    ap = [v if v > 0 else 0 for v in a]
    an = [-v if v < 0 else 0 for v in a]
    bp = [v if v > 0 else 0 for v in b]
    bn = [-v if v < 0 else 0 for v in b]
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = bound.bit_length() + 1
    app, anp = _mpz(_pack(ap, width)), _mpz(_pack(an, width))
    bpp, bnp = _mpz(_pack(bp, width)), _mpz(_pack(bn, width))
    pos = _unpack(app * bpp + anp * bnp, width, n)
    neg = _unpack(app * bnp + anp * bpp, width, n)
    return [p - q for p, q in zip(pos, neg)]


def _imul(a, b):
    if not a or not b:
        return []
    if len(a) * len(b) <= _PACK_THRESHOLD:
        return _imul_school(a, b)
    return _imul_packed(a, b)


def _icontent(*lists):
    g = 0
    for c in lists:
        for v in c:
            if v:
                g = gcd(g, v)
                if g == 1:
                    return 1
    return g


class QPoly:
    """Canonical polynomial in q_s with Gaussian-rational coefficients."""

    __slots__ = ("re", "im", "den")

    def __init__(self, re=(), im=(), den=1, _trusted=False):
        if _trusted:
            self.re, self.im, self.den = re, im, den
            return
        re, im = list(re), list(im)
        n = max(len(re), len(im))
        re.extend([0] * (n - len(re)))
        im.extend([0] * (n - len(im)))
        while n and not re[n - 1] and not im[n - 1]:
            n -= 1
        re, im = re[:n], im[:n]
        if den == 0:
            raise ZeroDivisionError("division by zero")
        if den < 0:
            den = -den
            re = [-v for v in re]
            im = [-v for v in im]
        g = gcd(_icontent(re, im), den)
        if g > 1:
            re = [v // g for v in re]
            im = [v // g for v in im]
            den //= g
        if not re:
            den = 1
        self.re, self.im, self.den = tuple(re), tuple(im), den

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_gauss(cls, g):
        d = g.re.denominator * g.im.denominator // gcd(g.re.denominator,
                                                       g.im.denominator)
        return cls([g.re.numerator * (d // g.re.denominator)],
                   [g.im.numerator * (d // g.im.denominator)], d)

    @classmethod
    def from_int(cls, n):
        return cls([n], [0], 1)

    @classmethod
    def monomial(cls, m, coeff=None):
        """coeff * q_s^m for m >= 0."""
        if m < 0:
            raise ValueError("monomial exponent must be >= 0")
        if coeff is None:
            return cls([0] * m + [1], [], 1)
        return cls.from_gauss(coeff if isinstance(coeff, GaussRational)
                              else GaussRational(coeff)).shift(m)

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from a list of GaussRational (or int/Fraction) coefficients."""
        coeffs = [c if isinstance(c, GaussRational) else GaussRational(c)
                  for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.re.denominator // gcd(den, c.re.denominator)
            den = den * c.im.denominator // gcd(den, c.im.denominator)
        re = [int(c.re * den) for c in coeffs]
        im = [int(c.im * den) for c in coeffs]
        return cls(re, im, den)

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not self.re

    def is_one(self):
        return self.den == 1 and self.re == (1,) and self.im == (0,)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.re) - 1

    def coeff(self, k):
        if k >= len(self.re) or k < 0:
            return GaussRational(0)
        return GaussRational(Fraction(self.re[k], self.den),
                             Fraction(self.im[k], self.den))

    def coeffs(self):
        return [self.coeff(k) for k in range(len(self.re))]

    def lc(self):
        return self.coeff(self.degree)

    def is_monomial(self):
        """Return (k, m) with value i^k * q_s^m when the poly is such a unit."""
        if len(self.re) == 0 or self.den != 1:
            return None
        m = len(self.re) - 1
        for k in range(m):
            if self.re[k] or self.im[k]:
                return None
        r, i = self.re[m], self.im[m]
        if i == 0:
            if r == 1:
                return (0, m)
            if r == -1:
                return (2, m)
        elif r == 0:
            if i == 1:
                return (1, m)
            if i == -1:
                return (3, m)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if self.den == other.den:
            return QPoly(_iadd(self.re, other.re), _iadd(self.im, other.im),
                         self.den)
        g = gcd(self.den, other.den)
        sa, sb = other.den // g, self.den // g
        return QPoly(_iadd([v * sa for v in self.re], [v * sb for v in other.re]),
                     _iadd([v * sa for v in self.im], [v * sb for v in other.im]),
                     self.den * sa)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QPoly(tuple(-v for v in self.re), tuple(-v for v in self.im),
                     self.den, _trusted=True)

    def __mul__(self, other):
        if not self.re or not other.re:
            return QP_ZERO
        # Gaussian Karatsuba: three integer-list products instead of four.
        m1 = _imul(self.re, other.re)
        m2 = _imul(self.im, other.im)
        m3 = _imul(_iadd(self.re, self.im), _iadd(other.re, other.im))
        re = _isub(m1, m2)
        im = _isub(_isub(m3, m1), m2)
        return QPoly(re, im, self.den * other.den)

    def mul_int(self, n):
        if n == 0 or not self.re:
            return QP_ZERO
        return QPoly([v * n for v in self.re], [v * n for v in self.im],
                     self.den)

    def shift(self, m):
        """Multiply by q_s^m (m >= 0)."""
        if not self.re or m == 0:
            return self
        pad = (0,) * m
        return QPoly(pad + self.re, pad + self.im, self.den, _trusted=True)

    def eval_gauss(self, x):
        """Evaluate at a GaussRational point (Horner)."""
        acc = GaussRational(0)
        for k in range(len(self.re) - 1, -1, -1):
            acc = acc * x + self.coeff(k)
        return acc

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return (self.re == other.re and self.im == other.im
                and self.den == other.den)

    def __hash__(self):
        return hash((self.re, self.im, self.den))

    def __bool__(self):
        return bool(self.re)

    # -- field-level algorithms (coefficients lifted to Q(i)) ---------------

    def _gauss_list(self):
        return [self.coeff(k) for k in range(len(self.re))]

    def divmod(self, other):
        """Long division over Q(i): returns (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        r = self._gauss_list()
        b = other._gauss_list()
        db = len(b) - 1
        inv_lb = b[-1].inverse()
        q = [GaussRational(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            while r and not r[-1]:
                r.pop()
            if len(r) - 1 < db:
                break
            c = r[-1] * inv_lb
            k = len(r) - 1 - db
            q[k] = c
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
            r.pop()
        return QPoly.from_coeffs(q), QPoly.from_coeffs(r)

    def divexact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return QPoly.from_coeffs([c * inv for c in self._gauss_list()])

    def derivative(self):
        return QPoly([k * v for k, v in enumerate(self.re)][1:],
                     [k * v for k, v in enumerate(self.im)][1:], self.den)

    # -- io -------------------------------------------------------------------

    def to_json(self):
        """Sparse triples [exponent, "re_num/re_den", "im_num/im_den"]."""
        out = []
        for k in range(len(self.re)):
            if self.re[k] or self.im[k]:
                re, im = self.coeff(k).to_pair()
                out.append([k, re, im])
        return out

    @classmethod
    def from_json(cls, triples):
        if not triples:
            return QP_ZERO
        n = max(t[0] for t in triples) + 1
        coeffs = [GaussRational(0)] * n
        for k, re, im in triples:
            coeffs[k] = GaussRational.from_pair((re, im))
        return cls.from_coeffs(coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.re) - 1, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]):
                cs = f"({cs})"
            if k == 0:
                parts.append(cs)
            else:
                var = f"q_s^{k}" if k != 1 else "q_s"
                parts.append(var if cs == "1" else f"-{var}" if cs == "-1"
                             else f"{cs}*{var}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"QPoly({self})"


def qpoly_gcd(a, b):
    """Monic gcd over Q(i)[q_s] (Euclid); gcd(p, 0) = monic(p)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


QP_ZERO = QPoly()
QP_ONE = QPoly((1,), (0,), 1, _trusted=True)

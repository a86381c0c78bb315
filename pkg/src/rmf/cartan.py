"""Affine Cartan data for the four constructible families and the
formula-only untwisted families.

Weights are handled in epsilon-coordinates.  To keep everything integral
(spin weights are half-integers) the package stores DOUBLED coordinates:
a weight is a tuple of ints equal to twice its epsilon-coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnsupportedRankError, UnsupportedTypeError
from .exact import S_ONE, Scalar, quantum_integer

# Families that admit the full construction (module tables in hand) and
# families admitted for closed-form denominator evaluation only.
CONSTRUCTIBLE = ("A2odd", "A2even", "B1", "D2")
FORMULA_ONLY = ("A1", "C1", "D1")

_RANK_MIN = {"A2odd": 3, "A2even": 2, "B1": 3, "D2": 2,
             "A1": 1, "C1": 2, "D1": 4}


class AffineType:
    """A family name plus rank parameter n."""

    __slots__ = ("family", "n")

    def __init__(self, family, n):
        if family not in _RANK_MIN:
            raise UnsupportedTypeError(f"unknown affine family {family!r}")
        if n < _RANK_MIN[family]:
            raise UnsupportedRankError(
                f"unsupported rank: {family} needs n >= {_RANK_MIN[family]}")
        self.family = family
        self.n = n

    @property
    def constructible(self):
        return self.family in CONSTRUCTIBLE

    def __eq__(self, other):
        return (isinstance(other, AffineType)
                and self.family == other.family and self.n == other.n)

    def __hash__(self):
        return hash((self.family, self.n))

    def __repr__(self):
        return f"{self.family}(n={self.n})"


# -- doubled-coordinate weight helpers ----------------------------------------

def weight_zero(n):
    return (0,) * n


def weight_eps(n, j, sign=1):
    """sign * epsilon_j as a doubled-coordinate weight (j is 1-based)."""
    w = [0] * n
    w[j - 1] = 2 * sign
    return tuple(w)


def weight_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def weight_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def weight_neg(u):
    return tuple(-a for a in u)


def weight_fund(n, k):
    """cl(varpi_k) = eps_1 + ... + eps_k (doubled coordinates)."""
    return tuple(2 if i < k else 0 for i in range(n))


def weight_spin(n, signs=None):
    """(1/2) sum m_k eps_k; signs is a tuple of +-1 (default all +)."""
    if signs is None:
        signs = (1,) * n
    return tuple(signs)


def weight_str(w):
    return "(" + ",".join(str(Fraction(c, 2)) for c in w) + ")"


def dominance_key(w):
    """Sort key decreasing in the usual height so dominant weights come first."""
    return tuple(-c for c in w)


class CartanDatum:
    """All type constants: Cartan matrix, symmetrizers, node parameters q_i,
    simple roots in epsilon-coordinates, null-root/center coefficients,
    duality constant p_star, and the (t, theta) flags."""

    def __init__(self, affine_type):
        if not affine_type.constructible:
            raise UnsupportedTypeError(
                f"{affine_type.family} admits formula evaluation only")
        self.type = affine_type
        n = affine_type.n
        fam = affine_type.family
        self.n = n
        self.index_set = tuple(range(n + 1))

        # Doubled epsilon-coordinates of cl(alpha_i) and the form scale kappa
        # fixed by <c, lam> = (delta, lam).
        mid = [self._eps_diff(i) for i in range(1, n)]
        if fam == "A2odd":
            self.kappa = 1
            alpha0 = weight_add(weight_eps(n, 1, -1), weight_eps(n, 2, -1))
            alphan = tuple(2 * c for c in weight_eps(n, n))  # 2 eps_n
            self.delta_coeff = (1, 1) + (2,) * (n - 2) + (1,)
            self.center_coeff = (1, 1) + (2,) * (n - 1)
            self.p_star = -Scalar.neg_qt_pow(1, 2 * n)
            self.t, self.theta = 1, 0
        elif fam == "A2even":
            self.kappa = 1
            alpha0 = weight_eps(n, 1, -1)
            alphan = tuple(2 * c for c in weight_eps(n, n))
            self.delta_coeff = (2,) * n + (1,)
            self.center_coeff = (1,) + (2,) * n
            self.p_star = Scalar.neg_qt_pow(1, 2 * n + 1)
            self.t, self.theta = 1, 0
        elif fam == "B1":
            self.kappa = 1
            alpha0 = weight_add(weight_eps(n, 1, -1), weight_eps(n, 2, -1))
            alphan = weight_eps(n, n)
            self.delta_coeff = (1, 1) + (2,) * (n - 1)
            self.center_coeff = (1, 1) + (2,) * (n - 2) + (1,)
            self.p_star = -Scalar.neg_qt_pow(1, 2 * n - 1)
            self.t, self.theta = 1, 1
        else:  # D2
            self.kappa = 2
            alpha0 = weight_eps(n, 1, -1)
            alphan = weight_eps(n, n)
            self.delta_coeff = (1,) * (n + 1)
            self.center_coeff = (1,) + (2,) * (n - 1) + (1,)
            self.p_star = -Scalar.neg_qt_pow(2, 2 * n)
            self.t, self.theta = 2, 1
        self.alpha = (alpha0,) + tuple(mid) + (alphan,)

        # (alpha_i, alpha_i) in q_s-exponent units: q_i = q_s^norm2[i].
        self.norm2 = []
        for a in self.alpha:
            num = self.kappa * sum(c * c for c in a)
            if num % 4:
                raise AssertionError("non-integral q_s exponent")
            self.norm2.append(num // 4)
        self.norm2 = tuple(self.norm2)
        self.q_node = tuple(Scalar.qs_pow(m) for m in self.norm2)

        # Cartan matrix and integer symmetrizers.
        self.a_matrix = tuple(
            tuple(self.pairing(i, self.alpha[j]) for j in range(n + 1))
            for i in range(n + 1))
        self.d_sym = self.norm2  # q_s-units already integral for all types

        self.star = tuple(range(1, n + 1))  # involution is trivial here

    def _eps_diff(self, i):  # eps_i - eps_{i+1}, doubled
        n = self.n
        w = [0] * n
        w[i - 1] = 2
        w[i] = -2
        return tuple(w)

    # -- pairings -------------------------------------------------------------

    def form(self, u, v):
        """Bilinear form (u, v) on doubled-coordinate weights (exact Fraction)."""
        return Fraction(self.kappa * sum(a * b for a, b in zip(u, v)), 4)

    def pairing(self, i, w):
        """<h_i, w> = 2 (alpha_i, w)/(alpha_i, alpha_i); always an integer."""
        a = self.alpha[i]
        num = 2 * sum(x * y for x, y in zip(a, w))
        den = sum(x * x for x in a)
        if num % den:
            raise AssertionError("non-integral coroot pairing")
        return num // den

    def reflect(self, i, w):
        """Simple reflection s_i acting on a doubled-coordinate weight."""
        c = self.pairing(i, w)
        return tuple(x - c * y for x, y in zip(w, self.alpha[i]))

    def k_eigen(self, i, w):
        """Eigenvalue of K_i on weight w: q^(alpha_i, w) as a Scalar."""
        e = self.kappa * sum(a * b for a, b in zip(self.alpha[i], w)) // 2
        return Scalar.qs_pow(e)

    def qint(self, m, i):
        """Quantum integer [m]_i at the node parameter q_i."""
        return quantum_integer(m, self.q_node[i])

    def fundamental_weight(self, k):
        n = self.n
        if not 1 <= k <= n:
            raise UnsupportedRankError(f"index k={k} outside 1..{n}")
        if k == n and self.type.family in ("B1", "D2"):
            return weight_spin(n)
        return weight_fund(n, k)

    def __repr__(self):
        return f"CartanDatum({self.type!r})"


def cartan_datum(affine_type):
    """Construct the CartanDatum for a constructible affine type."""
    return CartanDatum(affine_type)

"""Fusion of fundamental representations, the generic module-map solver,
and the Dorey-type morphism checks."""

from __future__ import annotations

from collections import namedtuple
from itertools import combinations, product

from .cartan import dominance_key, weight_add, weight_fund
from .errors import FusionAnchorError, UnsupportedRankError
from .exact import S_ONE, Scalar
from .linalg import Echelon, nullspace, rank, vec_axpy
from .reps import Rep, TensorRep, spin_rep, twist, vector_rep


def module_one(mod):
    from .exact import SF_ONE
    if isinstance(mod, TensorRep) and mod.symbolic:
        return SF_ONE
    return S_ONE


def highest_weight_vectors(mod, w):
    """Basis of {v in weight space w : e_i v = 0 for all i in I_0}."""
    block = mod.weight_blocks().get(w, [])
    if not block:
        return []
    pos = {g: k for k, g in enumerate(block)}
    rows = []
    n = mod.datum.n
    for i in range(1, n + 1):
        tgt = {}
        for k, col in enumerate(block):
            for row, s in mod.column("e", i, col):
                tgt.setdefault(row, {})[k] = s
        rows.extend(tgt.values())
    kernel = nullspace(rows, len(block), module_one(mod))
    return [{block[k]: v for k, v in vec.items()} for vec in kernel]


# -- hom spaces ---------------------------------------------------------------

class HomSpace:
    """Exact basis of the space of module maps domain -> codomain.

    Each basis map is a dict {(codomain_index, domain_index): Scalar}.
    """

    def __init__(self, domain, codomain, maps):
        self.domain = domain
        self.codomain = codomain
        self.maps = maps

    @property
    def dim(self):
        return len(self.maps)

    def apply(self, m, vec):
        """Apply basis map m (index or dict) to a domain dict-vector."""
        if isinstance(m, int):
            m = self.maps[m]
        cols = {}
        for (r, c), s in m.items():
            cols.setdefault(c, []).append((r, s))
        out = {}
        for c, coeff in vec.items():
            for r, s in cols.get(c, ()):
                vec_axpy(out, coeff, {r: s})
        return out

    def map_rank(self, m):
        if isinstance(m, int):
            m = self.maps[m]
        rows = {}
        for (r, c), s in m.items():
            rows.setdefault(c, {})[r] = s  # column vectors as rows
        return rank(list(rows.values()))

    def is_surjective(self, m):
        return self.map_rank(m) == self.codomain.dim

    def is_injective(self, m):
        return self.map_rank(m) == self.domain.dim

    def __repr__(self):
        return f"HomSpace(dim={self.dim})"


def find_homs(domain, codomain):
    """Solve [action, X] = 0 blockwise per weight; exact basis of all maps."""
    datum = domain.datum
    n = datum.n
    dom_blocks = domain.weight_blocks()
    cod_blocks = codomain.weight_blocks()
    shared = sorted((w for w in dom_blocks if w in cod_blocks),
                    key=dominance_key)
    var = {}
    for w in shared:
        for y in cod_blocks[w]:
            for x in dom_blocks[w]:
                var[(y, x)] = len(var)
    if not var:
        return HomSpace(domain, codomain, [])

    one = module_one(domain)
    rows = []
    for kind in ("e", "f"):
        for i in range(n + 1):
            for w in shared:
                for x in dom_blocks[w]:
                    eq = {}
                    # F(g x) rows, grouped by codomain row r'.
                    for x2, s in domain.column(kind, i, x):
                        w2 = domain.weights[x2]
                        if w2 not in cod_blocks:
                            continue
                        for y2 in cod_blocks[w2]:
                            key = var.get((y2, x2))
                            if key is not None:
                                eq.setdefault(y2, {})[key] = s
                    # minus g(F x)
                    for y in cod_blocks[w]:
                        key = var[(y, x)]
                        for y2, s in codomain.column(kind, i, y):
                            eq.setdefault(y2, {})
                            cur = eq[y2].get(key)
                            eq[y2][key] = -s if cur is None else cur - s
                    rows.extend(v for v in eq.values() if v)
    kernel = nullspace(rows, len(var), one)
    inv = {v: k for k, v in var.items()}
    maps = [{inv[k]: s for k, s in vec.items()} for vec in kernel]
    return HomSpace(domain, codomain, maps)


# -- fundamental representations by fusion -------------------------------------

def fundamental_rep(datum, k):
    """V(varpi_k): the vector rep, the spin rep, or the fusion submodule of
    V(varpi_1)_a (x) V(varpi_{k-1})_b at the canonical parameters."""
    fam = datum.type.family
    n = datum.n
    spin_top = fam in ("B1", "D2")
    if not 1 <= k <= n:
        raise UnsupportedRankError(f"no fundamental index k={k} for {fam} n={n}")
    cache = getattr(datum, "_fund_cache", None)
    if cache is None:
        cache = datum._fund_cache = {}
    if k in cache:
        return cache[k]
    if k == 1:
        rep = vector_rep(datum)
    elif spin_top and k == n:
        rep = spin_rep(datum)
    else:
        a = Scalar.neg_qt_pow(datum.t, k - 1)
        b = Scalar.neg_qt_pow(datum.t, -1)
        ambient = TensorRep(twist(vector_rep(datum), a),
                            twist(fundamental_rep(datum, k - 1), b))
        rep = _close_submodule(ambient, weight_fund(n, k),
                               f"V(w{k})[{fam},n={n}]")
    cache[k] = rep
    return rep


def _close_submodule(ambient, anchor_weight, name):
    """Close the 1-dimensional I_0-highest space at anchor_weight under all
    generators; returns the submodule in an echelonized basis."""
    datum = ambient.datum
    n = datum.n
    anchors = highest_weight_vectors(ambient, anchor_weight)
    if len(anchors) != 1:
        raise FusionAnchorError(
            f"fusion anchor ambiguous: dim {len(anchors)} at {anchor_weight}")

    echelons = {}
    basis_vecs = []
    basis_weights = []
    locals_by_weight = {}

    def insert(w, vec):
        ech = echelons.get(w)
        if ech is None:
            ech = echelons[w] = Echelon()
            locals_by_weight[w] = []
        rid = ech.insert(vec)
        if rid is None:
            return None
        gid = len(basis_vecs)
        basis_vecs.append(ech.order[rid])
        basis_weights.append(w)
        locals_by_weight[w].append(gid)
        return gid

    insert(anchor_weight, anchors[0])
    queue = [0]
    while queue:
        gid = queue.pop(0)
        w = basis_weights[gid]
        vec = basis_vecs[gid]
        for kind, sign in (("e", 1), ("f", -1)):
            for i in range(n + 1):
                img = ambient.apply(kind, i, vec)
                if not img:
                    continue
                w2 = weight_add(w, datum.alpha[i]) if sign > 0 else \
                    tuple(a - b for a, b in zip(w, datum.alpha[i]))
                gid2 = insert(w2, img)
                if gid2 is not None:
                    queue.append(gid2)

    dim = len(basis_vecs)
    e_act = [dict() for _ in range(n + 1)]
    f_act = [dict() for _ in range(n + 1)]
    for gid in range(dim):
        w = basis_weights[gid]
        vec = basis_vecs[gid]
        for kind, act in (("e", e_act), ("f", f_act)):
            for i in range(n + 1):
                img = ambient.apply(kind, i, vec)
                if not img:
                    continue
                w2 = weight_add(w, datum.alpha[i]) if kind == "e" else \
                    tuple(a - b for a, b in zip(w, datum.alpha[i]))
                coeffs, res = echelons[w2].reduce(img)
                if res:
                    raise FusionAnchorError("closure failed to close")
                entries = [(locals_by_weight[w2][rid], s)
                           for rid, s in coeffs.items() if s]
                if entries:
                    act[i][gid] = tuple(sorted(entries))

    labels = [f"m{j}" for j in range(dim)]
    rep = Rep(datum, name, labels, basis_weights, e_act, f_act, 0,
              embedding=(ambient, basis_vecs))
    return rep


# -- Dorey coefficients ---------------------------------------------------------

DoreyCoefficient = namedtuple("DoreyCoefficient", "lam mu xi value")


def _classical_orbit(n, k):
    """Doubled-coordinate weights with exactly k nonzero entries (+-1)."""
    for supp in combinations(range(n), k):
        for signs in product((2, -2), repeat=k):
            w = [0] * n
            for p, s in zip(supp, signs):
                w[p] = s
            yield tuple(w)


def dorey_coefficients(datum, i, j, k=None):
    """Coefficient table of the classical embedding V0(w_k) into
    V0(w_i) (x) V0(w_j), keyed by (lam, mu, xi) doubled weights."""
    n = datum.n
    fam = datum.type.family
    out = {}
    if i == j == n and fam == "D2":
        if k is None or not 1 <= k <= n - 1:
            raise UnsupportedRankError("spin regime needs target k in 1..n-1")
        mq2 = -Scalar.q_pow(2)
        mq = -Scalar.q_pow(1)
        for lam in _classical_orbit(n, k):
            zero_slots = [a for a, c in enumerate(lam) if c == 0]
            for choice in product((1, -1), repeat=len(zero_slots)):
                mu = list(lam)
                xi = list(lam)
                for slot, eps in zip(zero_slots, choice):
                    mu[slot], xi[slot] = eps, -eps
                mu = tuple(c // 2 if c in (2, -2) else c for c in mu)
                xi = tuple(c // 2 if c in (2, -2) else c for c in xi)
                c1 = sum(1 for a in range(n) for b in range(a + 1, n)
                         if (mu[a], xi[a]) == (-1, 1)
                         and (mu[b], xi[b]) == (1, -1))
                c2 = sum(1 for a in range(n) if (mu[a], xi[a]) == (-1, 1))
                val = (mq2 ** c1) * (mq ** c2) * (mq2 ** (c2 * (c2 - 1) // 2))
                out[(lam, mu, xi)] = DoreyCoefficient(lam, mu, xi, val)
        return out

    if k is None:
        k = i + j
    if k != i + j or k > n - datum.theta:
        raise UnsupportedRankError(
            f"classical regime needs i+j=k <= n-theta, got ({i},{j},{k})")
    mq1 = -datum.q_node[1]
    for lam in _classical_orbit(n, k):
        supp = [a for a, c in enumerate(lam) if c]
        for sub in combinations(supp, i):
            mu = tuple(lam[a] if a in sub else 0 for a in range(n))
            xi = tuple(lam[a] if a not in sub else 0 for a in range(n))
            c = 0
            for a in range(n):
                if (mu[a], xi[a]) == (0, 2):
                    c += sum(1 for b in range(a + 1, n) if mu[b])
                elif (mu[a], xi[a]) == (-2, 0):
                    c += sum(1 for b in range(a + 1, n) if xi[b])
            out[(lam, mu, xi)] = DoreyCoefficient(lam, mu, xi, mq1 ** c)
    return out

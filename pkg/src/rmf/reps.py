"""Concrete integrable representations: vector and spin modules, spectral
twists, tensor products via the coproduct, and defining-relation checks."""

from __future__ import annotations

from itertools import product

from .cartan import weight_add, weight_eps, weight_neg, weight_zero
from .errors import UnsupportedTypeError
from .exact import S_ONE, Scalar, SpectralFn, quantum_factorial

_MINUS_ONE = Scalar.from_int(-1)


class Rep:
    """Finite-dimensional module with labeled basis and sparse actions.

    Actions are stored column-wise: act[kind][i][col] is a tuple of
    (row, Scalar) pairs giving the image of basis vector `col` under the
    generator.  kind is "e" or "f"; i runs over the affine index set.
    """

    def __init__(self, datum, name, basis, weights, e_act, f_act,
                 dominant_index, twist_scalar=S_ONE, embedding=None):
        self.datum = datum
        self.name = name
        self.basis = list(basis)
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.weights = list(weights)
        self.act = {"e": e_act, "f": f_act}
        self.dominant_index = dominant_index
        self.twist_scalar = twist_scalar
        self.embedding = embedding  # (ambient TensorRep, columns) for fused reps
        self._blocks = None

    @property
    def dim(self):
        return len(self.basis)

    def weight_blocks(self):
        if self._blocks is None:
            blocks = {}
            for k, w in enumerate(self.weights):
                blocks.setdefault(w, []).append(k)
            self._blocks = blocks
        return self._blocks

    def column(self, kind, i, col):
        return self.act[kind][i].get(col, ())

    def apply(self, kind, i, vec):
        """Apply a generator to a dict-vector {index: Scalar}."""
        out = {}
        table = self.act[kind][i]
        for col, coeff in vec.items():
            for row, a in table.get(col, ()):
                v = out.get(row)
                v = a * coeff if v is None else v + a * coeff
                if v:
                    out[row] = v
                elif row in out:
                    del out[row]
        return out

    def apply_divided(self, kind, i, vec, m):
        """Divided power action e_i^(m) or f_i^(m)."""
        for _ in range(m):
            vec = self.apply(kind, i, vec)
        if m >= 2:
            inv = quantum_factorial(m, self.datum.q_node[i]).inverse()
            vec = {k: v * inv for k, v in vec.items()}
        return vec

    def twisted(self, a):
        """Spectral twist M_a: e_0 scaled by a, f_0 by a^-1."""
        if a.is_zero():
            raise ZeroDivisionError("twist by zero")
        ainv = a.inverse()
        e0 = {c: tuple((r, a * s) for r, s in entries)
              for c, entries in self.act["e"][0].items()}
        f0 = {c: tuple((r, ainv * s) for r, s in entries)
              for c, entries in self.act["f"][0].items()}
        e_act = [e0] + [dict(t) for t in self.act["e"][1:]]
        f_act = [f0] + [dict(t) for t in self.act["f"][1:]]
        return Rep(self.datum, self.name, self.basis, self.weights, e_act,
                   f_act, self.dominant_index,
                   twist_scalar=self.twist_scalar * a, embedding=self.embedding)

    def to_json(self):
        triples = []
        for kind in ("e", "f"):
            for i, table in enumerate(self.act[kind]):
                for col, entries in sorted(table.items()):
                    for row, s in entries:
                        triples.append([kind, i, self.basis[col],
                                        self.basis[row], s.to_json()])
        return {"name": self.name,
                "basis": [str(b) for b in self.basis],
                "weights": [list(w) for w in self.weights],
                "dominant": self.basis[self.dominant_index],
                "twist": self.twist_scalar.to_json(),
                "actions": triples}

    def __repr__(self):
        return f"Rep({self.name}, dim={self.dim})"


def twist(rep, a):
    return rep.twisted(a)


# -- explicit module tables ----------------------------------------------------

def vector_rep(datum):
    """The vector representation with its family-specific action table."""
    fam = datum.type.family
    n = datum.n
    if fam not in ("A2odd", "A2even", "B1", "D2"):
        raise UnsupportedTypeError(f"no vector representation for {fam}")

    labels = [str(j) for j in range(1, n + 1)]
    if fam in ("B1", "D2"):
        labels.append("0")
    if fam in ("A2even", "D2"):
        labels.append("e")
    labels += [f"{j}b" for j in range(n, 0, -1)]

    weights = {}
    for j in range(1, n + 1):
        weights[str(j)] = weight_eps(n, j)
        weights[f"{j}b"] = weight_eps(n, j, -1)
    weights["0"] = weight_zero(n)
    weights["e"] = weight_zero(n)

    idx = {b: k for k, b in enumerate(labels)}
    e_act = [dict() for _ in range(n + 1)]
    f_act = [dict() for _ in range(n + 1)]

    def put(table, i, src, dst, coeff=S_ONE):
        table[i].setdefault(idx[src], [])
        table[i][idx[src]].append((idx[dst], coeff))

    for i in range(1, n):
        put(e_act, i, str(i + 1), str(i))
        put(e_act, i, f"{i}b", f"{i + 1}b")
        put(f_act, i, str(i), str(i + 1))
        put(f_act, i, f"{i + 1}b", f"{i}b")

    if fam == "A2odd":
        put(e_act, n, f"{n}b", str(n))
        put(f_act, n, str(n), f"{n}b")
        put(e_act, 0, "1", "2b")
        put(e_act, 0, "2", "1b")
        put(f_act, 0, "2b", "1")
        put(f_act, 0, "1b", "2")
    elif fam == "A2even":
        put(e_act, n, f"{n}b", str(n))
        put(f_act, n, str(n), f"{n}b")
        two0 = datum.qint(2, 0)
        put(e_act, 0, "1", "e")
        put(e_act, 0, "e", "1b", two0)
        put(f_act, 0, "1b", "e")
        put(f_act, 0, "e", "1", two0)
    elif fam == "B1":
        twon = datum.qint(2, n)
        put(e_act, n, f"{n}b", "0")
        put(e_act, n, "0", str(n), twon)
        put(f_act, n, str(n), "0")
        put(f_act, n, "0", f"{n}b", twon)
        put(e_act, 0, "1", "2b")
        put(e_act, 0, "2", "1b")
        put(f_act, 0, "2b", "1")
        put(f_act, 0, "1b", "2")
    else:  # D2
        twon = datum.qint(2, n)
        two0 = datum.qint(2, 0)
        put(e_act, n, f"{n}b", "0")
        put(e_act, n, "0", str(n), twon)
        put(f_act, n, str(n), "0")
        put(f_act, n, "0", f"{n}b", twon)
        put(e_act, 0, "1", "e")
        put(e_act, 0, "e", "1b", two0)
        put(f_act, 0, "1b", "e")
        put(f_act, 0, "e", "1", two0)

    e_act = [{c: tuple(v) for c, v in t.items()} for t in e_act]
    f_act = [{c: tuple(v) for c, v in t.items()} for t in f_act]
    return Rep(datum, f"V(w1)[{fam},n={n}]", labels,
               [weights[b] for b in labels], e_act, f_act, idx["1"])


def spin_rep(datum):
    """The spin representation (B1 and D2 only), basis of sign strings."""
    fam = datum.type.family
    n = datum.n
    if fam not in ("B1", "D2"):
        raise UnsupportedTypeError(f"no spin representation for {fam}")

    labels = ["".join(s) for s in product("+-", repeat=n)]
    idx = {b: k for k, b in enumerate(labels)}
    weights = [tuple(1 if c == "+" else -1 for c in b) for b in labels]

    e_act = [dict() for _ in range(n + 1)]
    f_act = [dict() for _ in range(n + 1)]

    def put(table, i, src, dst):
        table[i][idx[src]] = ((idx[dst], S_ONE),)

    for b in labels:
        for i in range(1, n):
            if b[i - 1] == "-" and b[i] == "+":
                put(e_act, i, b, b[:i - 1] + "+-" + b[i + 1:])
            if b[i - 1] == "+" and b[i] == "-":
                put(f_act, i, b, b[:i - 1] + "-+" + b[i + 1:])
        if b[n - 1] == "-":
            put(e_act, n, b, b[:n - 1] + "+")
        else:
            put(f_act, n, b, b[:n - 1] + "-")
        if fam == "B1":
            if b[0] == "+" and b[1] == "+":
                put(e_act, 0, b, "--" + b[2:])
            if b[0] == "-" and b[1] == "-":
                put(f_act, 0, b, "++" + b[2:])
        else:  # D2
            if b[0] == "+":
                put(e_act, 0, b, "-" + b[1:])
            else:
                put(f_act, 0, b, "+" + b[1:])

    return Rep(datum, f"V(wn)[{fam},n={n}]", labels, weights, e_act, f_act,
               idx["+" * n])


def trivial_rep(datum):
    n = datum.n
    empty = [dict() for _ in range(n + 1)]
    return Rep(datum, "triv", ["1"], [weight_zero(n)], empty,
               [dict() for _ in range(n + 1)], 0)


class TensorRep:
    """Tensor product with coproduct actions; the right (or left) factor may
    carry the symbolic spectral variable z on its 0-node action.

    zleft/zright give the z-exponent multiplier of e_0 on each factor
    (f_0 carries the opposite sign).  With both flags zero the actions stay
    Scalar-valued; otherwise column coefficients are SpectralFn.
    """

    def __init__(self, left, right, zleft=0, zright=0):
        if left.datum is not right.datum and \
                left.datum.type != right.datum.type:
            raise UnsupportedTypeError("tensor factors over different data")
        self.datum = left.datum
        self.left = left
        self.right = right
        self.zleft = zleft
        self.zright = zright
        self.symbolic = bool(zleft or zright)
        nl = left.dim
        self.basis = [(a, b) for a in range(nl) for b in range(right.dim)]
        self.index = {p: k for k, p in enumerate(self.basis)}
        self.weights = [weight_add(left.weights[a], right.weights[b])
                        for a, b in self.basis]
        self._blocks = None
        self._cols = {}

    @property
    def dim(self):
        return len(self.basis)

    def weight_blocks(self):
        if self._blocks is None:
            blocks = {}
            for k, w in enumerate(self.weights):
                blocks.setdefault(w, []).append(k)
            self._blocks = blocks
        return self._blocks

    def pair_index(self, a, b):
        return self.index[(a, b)]

    def _wrap(self, s, zpow):
        if not self.symbolic:
            return s
        return SpectralFn.z_monomial(zpow, s) if zpow else SpectralFn.from_scalar(s)

    def column(self, kind, i, col):
        """Image of basis vector `col`: tuple of (row, coeff)."""
        key = (kind, i, col)
        hit = self._cols.get(key)
        if hit is not None:
            return hit
        a, b = self.basis[col]
        datum = self.datum
        out = []
        if kind == "e":
            # e_i (x (x) y) = e_i x (x) K_i^-1 y + x (x) e_i y
            kinv = datum.k_eigen(i, self.right.weights[b]).inverse()
            zl = self.zleft if i == 0 else 0
            zr = self.zright if i == 0 else 0
            for row, s in self.left.column("e", i, a):
                out.append((self.index[(row, b)], self._wrap(s * kinv, zl)))
            for row, s in self.right.column("e", i, b):
                out.append((self.index[(a, row)], self._wrap(s, zr)))
        else:
            # f_i (x (x) y) = f_i x (x) y + K_i x (x) f_i y
            kei = datum.k_eigen(i, self.left.weights[a])
            zl = -self.zleft if i == 0 else 0
            zr = -self.zright if i == 0 else 0
            for row, s in self.left.column("f", i, a):
                out.append((self.index[(row, b)], self._wrap(s, zl)))
            for row, s in self.right.column("f", i, b):
                out.append((self.index[(a, row)], self._wrap(s * kei, zr)))
        out = tuple(out)
        self._cols[key] = out
        return out

    def apply(self, kind, i, vec):
        out = {}
        for col, coeff in vec.items():
            for row, a in self.column(kind, i, col):
                v = out.get(row)
                v = a * coeff if v is None else v + a * coeff
                if v:
                    out[row] = v
                elif row in out:
                    del out[row]
        return out

    def apply_divided(self, kind, i, vec, m):
        for _ in range(m):
            vec = self.apply(kind, i, vec)
        if m >= 2:
            fact = quantum_factorial(m, self.datum.q_node[i]).inverse()
            scale = self._wrap(fact, 0) if self.symbolic else fact
            vec = {k: v * scale for k, v in vec.items()}
        return vec

    def __repr__(self):
        tag = f",z=({self.zleft},{self.zright})" if self.symbolic else ""
        return f"TensorRep({self.left.name} (x) {self.right.name}{tag})"


def tensor(left, right, symbolic_z=False):
    """M (x) N, with N carrying the symbolic spectral variable when asked."""
    return TensorRep(left, right, 0, 1 if symbolic_z else 0)


# -- defining relations ----------------------------------------------------------

def check_relations(rep):
    """Exhaustively verify the defining relations; returns violation strings."""
    datum = rep.datum
    n = datum.n
    bad = []

    # Weight grading of every generator action.
    for kind, sign in (("e", 1), ("f", -1)):
        for i in range(n + 1):
            step = datum.alpha[i] if sign > 0 else weight_neg(datum.alpha[i])
            for col, entries in rep.act[kind][i].items():
                target = weight_add(rep.weights[col], step)
                for row, s in entries:
                    if rep.weights[row] != target and s:
                        bad.append(f"{kind}_{i} breaks weight grading at "
                                   f"{rep.basis[col]}")

    # [e_i, f_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
    for i in range(n + 1):
        for j in range(n + 1):
            for col in range(rep.dim):
                v = {col: S_ONE}
                lhs = _vec_sub(rep.apply("e", i, rep.apply("f", j, v)),
                               rep.apply("f", j, rep.apply("e", i, v)))
                rhs = {}
                if i == j:
                    k = datum.k_eigen(i, rep.weights[col])
                    qi = datum.q_node[i]
                    c = (k - k.inverse()) / (qi - qi.inverse())
                    if c:
                        rhs[col] = c
                if not _vec_eq(lhs, rhs):
                    bad.append(f"[e_{i}, f_{j}] wrong on {rep.basis[col]}")

    # q-Serre relations for i != j.
    for i in range(n + 1):
        for j in range(n + 1):
            if i == j:
                continue
            a = datum.a_matrix[i][j]
            for kind in ("e", "f"):
                for col in range(rep.dim):
                    acc = {}
                    for k in range(0, 2 - a):
                        v = rep.apply_divided(kind, i, {col: S_ONE}, k)
                        v = rep.apply(kind, j, v)
                        v = rep.apply_divided(kind, i, v, 1 - a - k)
                        if k % 2:
                            v = {m: -s for m, s in v.items()}
                        acc = _vec_add(acc, v)
                    if acc:
                        bad.append(
                            f"Serre ({kind},{i},{j}) fails on {rep.basis[col]}")
                        break
    return bad


def _vec_add(u, v):
    out = dict(u)
    for k, s in v.items():
        w = out.get(k)
        w = s if w is None else w + s
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def _vec_sub(u, v):
    return _vec_add(u, {k: -s for k, s in v.items()})


def _vec_eq(u, v):
    if set(u) != set(v):
        ku = {k for k, s in u.items() if s}
        kv = {k for k, s in v.items() if s}
        if ku != kv:
            return False
    return all(u[k] == v[k] for k in u if k in v) and \
        all(not s for k, s in u.items() if k not in v) and \
        all(not s for k, s in v.items() if k not in u)


# -- extremal vectors -------------------------------------------------------------

def extremal_vectors(rep):
    """All extremal vectors {weight: dict-vector}, generated from the dominant
    vector by the modified reflections S_i (divided powers along the orbit)."""
    datum = rep.datum
    n = datum.n
    start_w = rep.weights[rep.dominant_index]
    out = {start_w: {rep.dominant_index: S_ONE}}
    queue = [start_w]
    while queue:
        w = queue.pop()
        vec = out[w]
        for i in range(1, n + 1):
            c = datum.pairing(i, w)
            if c == 0:
                continue
            w2 = datum.reflect(i, w)
            if w2 in out:
                continue
            if c >= 0:
                v2 = rep.apply_divided("f", i, vec, c)
            else:
                v2 = rep.apply_divided("e", i, vec, -c)
            out[w2] = v2
            queue.append(w2)
    return out

"""Exact sparse linear algebra over a field (Scalar or SpectralFn entries).

Vectors and matrix rows are dicts {column_index: field_element}.  Pivoting
is deterministic: rows are processed in the order given and the pivot of a
row is its smallest nonzero column index.
"""

from __future__ import annotations


def vec_axpy(out, scale, vec):
    """out += scale * vec, dropping exact zeros."""
    for k, v in vec.items():
        w = out.get(k)
        w = scale * v if w is None else w + scale * v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


class Echelon:
    """Incremental reduced echelon basis with expansion bookkeeping.

    Each inserted vector is reduced against the current rows; a nonzero
    residual is normalized (pivot coefficient 1) and stored.  reduce()
    reports the expansion coefficients in terms of stored row ids.
    """

    def __init__(self):
        self.rows = {}          # pivot -> (row_id, vec)
        self.order = []         # row ids in insertion order

    def __len__(self):
        return len(self.order)

    def reduce(self, vec):
        """Return (coeffs {row_id: c}, residual) with vec = sum c*row + residual."""
        vec = dict(vec)
        coeffs = {}
        while vec:
            p = min(vec)
            hit = self.rows.get(p)
            if hit is None:
                break
            row_id, rvec = hit
            c = vec[p]
            coeffs[row_id] = c
            vec_axpy(vec, -c, rvec)
        return coeffs, vec

    def insert(self, vec):
        """Insert a vector; returns the new row id, or None if dependent."""
        _, res = self.reduce(vec)
        if not res:
            return None
        p = min(res)
        inv = res[p].inverse()
        res = {k: v * inv for k, v in res.items()}
        row_id = len(self.order)
        self.rows[p] = (row_id, res)
        self.order.append(res)
        return row_id


def nullspace(rows, ncols, one):
    """Kernel basis of the sparse system rows . x = 0 over the entry field.

    rows: iterable of dict vectors over columns 0..ncols-1; `one` is the
    field unit.  Returns a list of dict vectors spanning the kernel.
    """
    pivots = {}  # col -> normalized row
    for row in rows:
        row = dict(row)
        while row:
            p = min(row)
            pv = pivots.get(p)
            if pv is None:
                inv = row[p].inverse()
                pivots[p] = {k: v * inv for k, v in row.items()}
                break
            vec_axpy(row, -row[p], pv)
    # Back-substitute to reduced echelon form.
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        for p2 in sorted(pivots):
            if p2 >= p:
                break
            r2 = pivots[p2]
            c = r2.get(p)
            if c:
                vec_axpy(r2, -c, row)
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        vec = {fc: one}
        for p, row in pivots.items():
            c = row.get(fc)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def rank(rows):
    """Rank of the sparse row collection."""
    pivots = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            p = min(row)
            pv = pivots.get(p)
            if pv is None:
                inv = row[p].inverse()
                pivots[p] = {k: v * inv for k, v in row.items()}
                r += 1
                break
            vec_axpy(row, -row[p], pv)
    return r


def solve_exact(rows, rhs_rows, ncols):
    """Solve the (possibly overdetermined, consistent) system A x = b for
    several right-hand sides at once.

    rows: list of dict rows of A (length m); rhs_rows: list of dict rows of B
    (same length m, columns indexing the b's).  Returns list over columns of
    x-solutions as dicts, or raises if the system is inconsistent or the
    solution is not unique.
    """
    from .errors import SolverError

    pivots = {}
    for row, rhs in zip(rows, rhs_rows):
        row = dict(row)
        rhs = dict(rhs)
        while row:
            p = min(row)
            pv = pivots.get(p)
            if pv is None:
                inv = row[p].inverse()
                pivots[p] = ({k: v * inv for k, v in row.items()},
                             {k: v * inv for k, v in rhs.items()})
                break
            c = row[p]
            vec_axpy(row, -c, pv[0])
            vec_axpy(rhs, -c, pv[1])
        else:
            if rhs:
                raise SolverError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SolverError("underdetermined linear system")
    # Back substitution.
    for p in sorted(pivots, reverse=True):
        row, rhs = pivots[p]
        for k in [k for k in row if k > p]:
            r2, b2 = pivots[k]
            c = row[k]
            vec_axpy(row, -c, r2)
            vec_axpy(rhs, -c, b2)
    return {p: pivots[p][1] for p in pivots}

"""Sparse exact linear algebra over a cyclotomic field.

Vectors are dicts mapping basis keys (ints, or index tuples for tensor
spaces) to nonzero scalars.  Everything here is plain Gaussian
elimination kept in reduced form; no tolerances anywhere.
"""

from __future__ import annotations

from .cyclotomic import CycField, CycScalar

Vec = dict


def vec_scale(v: Vec, c: CycScalar) -> Vec:
    return {k: c * a for k, a in v.items()}


def vec_sub_scaled(v: Vec, w: Vec, c: CycScalar) -> Vec:
    """v - c*w, dropping zeros."""
    out = dict(v)
    for k, a in w.items():
        ca = c * a
        if k in out:
            s = out[k] - ca
            if s.is_zero():
                del out[k]
            else:
                out[k] = s
        elif not ca.is_zero():
            out[k] = -ca
    return out


class Echelon:
    """A subspace kept as a reduced echelon basis (pivot coefficient 1)."""

    def __init__(self, field: CycField):
        self.field = field
        self.rows: dict = {}  # pivot key -> row Vec

    def reduce(self, v: Vec) -> Vec:
        # the basis is fully reduced, so eliminating a pivot never introduces
        # another pivot key: one pass over the original support suffices
        v = dict(v)
        for k in sorted(v):
            if k in v:
                row = self.rows.get(k)
                if row is not None:
                    v = vec_sub_scaled(v, row, v[k])
        return v

    def add(self, v: Vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        pivot = min(v)
        inv = v[pivot].inverse()
        v = vec_scale(v, inv)
        # keep the basis fully reduced
        for p, row in list(self.rows.items()):
            if pivot in row:
                self.rows[p] = vec_sub_scaled(row, v, row[pivot])
        self.rows[pivot] = v
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> list[Vec]:
        return [self.rows[p] for p in sorted(self.rows)]

    def canonical(self) -> tuple:
        out = []
        for p in sorted(self.rows):
            row = self.rows[p]
            out.append(tuple(sorted((k, row[k]) for k in row)))
        return tuple(out)


def echelon_span(vectors, field: CycField) -> Echelon:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech


def rank_of_columns(cols, field: CycField) -> int:
    return echelon_span(cols, field).rank


def subspace_equal(vs1, vs2, field: CycField) -> bool:
    return echelon_span(vs1, field).canonical() == echelon_span(vs2, field).canonical()


def nullspace_of_map(images: list[Vec], field: CycField) -> list[Vec]:
    """Kernel basis of the map e_j -> images[j] (combination tracking)."""
    ech = Echelon(field)
    combos: dict = {}  # pivot key -> combo Vec over domain indices
    kernel: list[Vec] = []
    for j, img in enumerate(images):
        v = dict(img)
        combo = {j: field.one}
        for k in sorted(v):
            if k in v:
                row = ech.rows.get(k)
                if row is not None:
                    c = v[k]
                    v = vec_sub_scaled(v, row, c)
                    combo = vec_sub_scaled(combo, combos[k], c)
        if not v:
            kernel.append(combo)
        else:
            pivot = min(v)
            inv = v[pivot].inverse()
            v = vec_scale(v, inv)
            combo = vec_scale(combo, inv)
            for p in list(ech.rows):
                if pivot in ech.rows[p]:
                    c = ech.rows[p][pivot]
                    ech.rows[p] = vec_sub_scaled(ech.rows[p], v, c)
                    combos[p] = vec_sub_scaled(combos[p], combo, c)
            ech.rows[pivot] = v
            combos[pivot] = combo
    return kernel


def solve_sparse_system(rows, field: CycField):
    """Solve a sparse linear system given as (coeff row, rhs scalar) pairs.

    Returns an assignment dict (free variables set to zero) or None when
    the system is inconsistent.
    """
    pivots: dict = {}  # var -> (row Vec, rhs)
    for row, rhs in rows:
        row = {k: v for k, v in row.items() if not v.is_zero()}
        for var in sorted(row):
            if var in row and var in pivots:
                prow, prhs = pivots[var]
                c = row[var]
                row = vec_sub_scaled(row, prow, c)
                rhs = rhs - c * prhs
        if not row:
            if not rhs.is_zero():
                return None
            continue
        var = min(row)
        inv = row[var].inverse()
        row = vec_scale(row, inv)
        rhs = rhs * inv
        for pvar, (prow, prhs) in list(pivots.items()):
            if var in prow:
                c = prow[var]
                pivots[pvar] = (vec_sub_scaled(prow, row, c), prhs - c * rhs)
        pivots[var] = (row, rhs)
    sol: dict = {}
    for var, (row, rhs) in pivots.items():
        # rows are fully reduced; remaining off-pivot vars are free (= 0)
        sol[var] = rhs
    return sol


class CoordSpan:
    """A span that can express members as combinations of the added vectors."""

    def __init__(self, field: CycField):
        self.field = field
        self.rows: dict = {}    # pivot key -> row Vec
        self.combos: dict = {}  # pivot key -> combo Vec over insertion tags

    def add(self, tag, v: Vec) -> bool:
        v = dict(v)
        combo = {tag: self.field.one}
        for k in sorted(v):
            if k in v and k in self.rows:
                c = v[k]
                v = vec_sub_scaled(v, self.rows[k], c)
                combo = vec_sub_scaled(combo, self.combos[k], c)
        if not v:
            return False
        pivot = min(v)
        inv = v[pivot].inverse()
        v = vec_scale(v, inv)
        combo = vec_scale(combo, inv)
        for p in list(self.rows):
            row = self.rows[p]
            if pivot in row:
                c = row[pivot]
                self.rows[p] = vec_sub_scaled(row, v, c)
                self.combos[p] = vec_sub_scaled(self.combos[p], combo, c)
        self.rows[pivot] = v
        self.combos[pivot] = combo
        return True

    def coords(self, v: Vec):
        """Combination expressing v over the added vectors, or None."""
        v = dict(v)
        combo: Vec = {}
        for k in sorted(v):
            if k in v and k in self.rows:
                c = v[k]
                v = vec_sub_scaled(v, self.rows[k], c)
                combo = vec_sub_scaled(combo, self.combos[k], -c)
        if v:
            return None
        return {t: c for t, c in combo.items() if not c.is_zero()}

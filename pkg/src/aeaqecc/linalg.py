"""Exact linear algebra over finite fields.

Matrices hold integer-encoded field elements in a numpy array and do all
row reduction through the field's dense lookup tables, so every result is
exact.  Row echelon form uses first-nonzero pivoting, which makes the
reduced form (and everything derived from it: ranks, null spaces,
intersections) deterministic.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldMismatchError
from .fields import FiniteField

_ENTRY_DTYPE = np.int16


class MatrixGF:
    """Immutable matrix over a finite field."""

    __slots__ = ("field", "_a")

    def __init__(self, field: FiniteField, entries: np.ndarray):
        a = np.asarray(entries, dtype=_ENTRY_DTYPE)
        if a.ndim != 2:
            raise ValueError(f"need a 2-d entry grid, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= field.order):
            raise ValueError(f"entries outside 0..{field.order - 1}")
        a = a.copy()
        a.flags.writeable = False
        self.field = field
        self._a = a

    @classmethod
    def from_rows(cls, field: FiniteField, rows) -> "MatrixGF":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            return cls(field, np.array(rows, dtype=_ENTRY_DTYPE))
        return cls(field, np.zeros((0, 0), dtype=_ENTRY_DTYPE))

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "MatrixGF":
        return cls(field, np.zeros((rows, cols), dtype=_ENTRY_DTYPE))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MatrixGF":
        return cls(field, np.eye(n, dtype=_ENTRY_DTYPE))

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> np.ndarray:
        """Read-only entry grid."""
        return self._a

    def entry(self, i: int, j: int) -> int:
        return int(self._a[i, j])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self._a[i])

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self._a.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self) -> int:
        return hash((self.field, self._a.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field.designator}, {self._a.tolist()})"


def _same_field(a: MatrixGF, b: MatrixGF) -> FiniteField:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return a.field


def stack(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Vertical concatenation."""
    field = _same_field(a, b)
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    return MatrixGF(field, np.vstack([a.entries, b.entries]))


def augment(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Horizontal concatenation."""
    field = _same_field(a, b)
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.rows} vs {b.rows}")
    return MatrixGF(field, np.hstack([a.entries, b.entries]))


def mat_mul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    field = _same_field(a, b)
    if a.cols != b.rows:
        raise ValueError(f"inner dimension mismatch: {a.cols} vs {b.rows}")
    add, mul = field.add_table, field.mul_table
    be = b.entries
    out = np.zeros((a.rows, b.cols), dtype=_ENTRY_DTYPE)
    for i in range(a.rows):
        acc = np.zeros(b.cols, dtype=_ENTRY_DTYPE)
        arow = a.entries[i]
        for l in range(a.cols):
            s = arow[l]
            if s:
                acc = add[acc, mul[s][be[l]]]
        out[i] = acc
    return MatrixGF(field, out)


def mat_vec(a: MatrixGF, v: np.ndarray) -> np.ndarray:
    """a @ v for an encoded coordinate vector; returns encoded syndrome."""
    field = a.field
    add, mul = field.add_table, field.mul_table
    out = np.zeros(a.rows, dtype=_ENTRY_DTYPE)
    for i in range(a.rows):
        acc = 0
        row = a.entries[i]
        for l in range(a.cols):
            s = row[l]
            if s and v[l]:
                acc = add[acc, mul[s, v[l]]]
        out[i] = acc
    return out


def rref(m: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (reduced matrix, rank, pivot columns).  Pivot choice is the
    first row with a nonzero entry in the current column, so the output is
    unique for a given row space and deterministic for a given input.
    """
    field = m.field
    add, mul = field.add_table, field.mul_table
    inv, neg = field.inv_table, field.neg_table
    a = m.entries.astype(_ENTRY_DTYPE).copy()
    nrows, ncols = a.shape
    pivots = []
    pr = 0
    for col in range(ncols):
        if pr >= nrows:
            break
        nz = np.nonzero(a[pr:, col])[0]
        if nz.size == 0:
            continue
        sel = pr + int(nz[0])
        if sel != pr:
            a[[pr, sel]] = a[[sel, pr]]
        pivval = a[pr, col]
        if pivval != 1:
            a[pr] = mul[int(inv[pivval])][a[pr]]
        others = np.nonzero(a[:, col])[0]
        others = others[others != pr]
        if others.size:
            coef = neg[a[others, col]].astype(_ENTRY_DTYPE)
            a[others] = add[a[others], mul[coef[:, None], a[pr][None, :]]]
        pivots.append(col)
        pr += 1
    return MatrixGF(field, a), pr, tuple(pivots)


def rank(m: MatrixGF) -> int:
    return rref(m)[1]


def null_space(m: MatrixGF) -> MatrixGF:
    """Basis (as rows) of the right kernel, in reduced echelon form."""
    field = m.field
    r, rk, pivots = rref(m)
    ncols = m.cols
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=_ENTRY_DTYPE)
    neg = field.neg_table
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for i, pc in enumerate(pivots):
            basis[idx, pc] = neg[r.entries[i, f]]
    reduced, nullity, _ = rref(MatrixGF(field, basis))
    assert nullity == ncols - rk
    return MatrixGF(field, reduced.entries[:nullity])


def row_space(m: MatrixGF) -> MatrixGF:
    """Canonical basis of the row space (nonzero rows of the rref)."""
    r, rk, _ = rref(m)
    return MatrixGF(m.field, r.entries[:rk])


def row_space_sum(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    return row_space(stack(a, b))


def row_space_intersect(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Canonical basis of the intersection of two row spaces.

    Zassenhaus-style: reduce [[A A], [B 0]]; rows whose left half became
    zero hold intersection vectors in their right half.
    """
    field = _same_field(a, b)
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    n = a.cols
    top = np.hstack([a.entries, a.entries])
    bot = np.hstack([b.entries, np.zeros_like(b.entries)])
    block = MatrixGF(field, np.vstack([top, bot]))
    reduced, rk, _ = rref(block)
    ent = reduced.entries[:rk]
    left_zero = ~ent[:, :n].any(axis=1)
    inter = ent[left_zero][:, n:]
    reduced2, dim, _ = rref(MatrixGF(field, inter))
    return MatrixGF(field, reduced2.entries[:dim])

"""Sparse square matrices over an exact scalar ring (QPoly or Fraction).

Entries are stored column-major: ``cols[j][i]`` is the (i, j) entry, and zero
entries are never stored, so dict equality is semantic equality.  Scalars only
need +, *, unary -, and truthiness, which both QPoly and Fraction provide.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .qpoly import ONE, QPoly

Column = dict[int, object]


class Matrix:
    """Square sparse matrix; immutable by convention after construction."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols: dict[int, Column] | None = None):
        self.dim = dim
        self.cols: dict[int, Column] = {}
        if cols:
            for j, col in cols.items():
                clean = {i: v for i, v in col.items() if v}
                if clean:
                    self.cols[j] = clean

    @classmethod
    def identity(cls, dim: int, one=ONE) -> Matrix:
        return cls(dim, {j: {j: one} for j in range(dim)})

    def entry(self, row: int, col: int):
        """The (row, col) entry, or None when it is zero."""
        return self.cols.get(col, {}).get(row)

    def column(self, col: int) -> Column:
        return dict(self.cols.get(col, {}))

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def __add__(self, other: Matrix) -> Matrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out: dict[int, Column] = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            tgt = out.setdefault(j, {})
            for i, v in col.items():
                acc = tgt.get(i)
                acc = v if acc is None else acc + v
                if acc:
                    tgt[i] = acc
                elif i in tgt:
                    del tgt[i]
        return Matrix(self.dim, out)

    def scale(self, scalar) -> Matrix:
        return Matrix(
            self.dim,
            {j: {i: scalar * v for i, v in col.items()} for j, col in self.cols.items()},
        )

    def __neg__(self) -> Matrix:
        return Matrix(
            self.dim,
            {j: {i: -v for i, v in col.items()} for j, col in self.cols.items()},
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __matmul__(self, other: Matrix) -> Matrix:
        """Matrix product: column j of A@B is A applied to column j of B."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out: dict[int, Column] = {}
        for j, bcol in other.cols.items():
            acc: Column = {}
            for r, bval in bcol.items():
                for i, aval in self.cols.get(r, {}).items():
                    prev = acc.get(i)
                    term = aval * bval
                    total = term if prev is None else prev + term
                    if total:
                        acc[i] = total
                    elif i in acc:
                        del acc[i]
            if acc:
                out[j] = acc
        return Matrix(self.dim, out)

    def eval_at(self, x: Fraction) -> Matrix:
        """Evaluate every QPoly entry at q = x, giving a Fraction matrix."""
        out: dict[int, Column] = {}
        for j, col in self.cols.items():
            newcol = {}
            for i, v in col.items():
                val = v.eval_at(x)
                if val:
                    newcol[i] = val
            if newcol:
                out[j] = newcol
        return Matrix(self.dim, out)

    def entries_sorted(self) -> Iterator[tuple[int, int, object]]:
        """All nonzero entries as (row, col, value), sorted by (col, row)."""
        for j in sorted(self.cols):
            col = self.cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    def column_sums(self) -> dict[int, object]:
        sums = {}
        for j, col in self.cols.items():
            total = None
            for v in col.values():
                total = v if total is None else total + v
            sums[j] = total
        return sums

    def __repr__(self) -> str:
        nnz = sum(len(c) for c in self.cols.values())
        return f"Matrix(dim={self.dim}, nnz={nnz})"


class TransitionMatrix(Matrix):
    """A matrix whose columns are exact probability distributions: every
    stored polynomial is nonzero and each column sums to the constant 1."""

    def __init__(self, dim: int, cols: dict[int, Column] | None = None):
        super().__init__(dim, cols)
        for j in range(dim):
            total = None
            for v in self.cols.get(j, {}).values():
                total = v if total is None else total + v
            if total != ONE:
                raise ValueError(f"column {j} sums to {total}, expected 1")


def matrices_equal_entry(a: Matrix, b: Matrix) -> tuple[int, int, object, object] | None:
    """Return the first differing entry (row, col, a_val, b_val), or None."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    for j in sorted(set(a.cols) | set(b.cols)):
        acol = a.cols.get(j, {})
        bcol = b.cols.get(j, {})
        for i in sorted(set(acol) | set(bcol)):
            av = acol.get(i, QPoly())
            bv = bcol.get(i, QPoly())
            if av != bv:
                return i, j, av, bv
    return None

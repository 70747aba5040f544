"""Dense exact linear algebra over GF(q).

Matrices are immutable, row major, and carry their field.  Everything here
is classical Gauss elimination; the field is exact so no pivoting strategy
beyond "first nonzero" is needed.  The reduced row echelon form is unique,
which is what makes it usable as a canonical form for code equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import MismatchError, NotSquareError, RankDeficientError
from .gf import GF


@dataclass(frozen=True)
class Matrix:
    """A rows-by-cols matrix over a finite field, entries row major."""

    field: GF
    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError(
                f"expected {self.nrows * self.ncols} entries, got {len(self.entries)}"
            )
        q = self.field.q
        for v in self.entries:
            if not 0 <= v < q:
                raise ValueError(f"entry {v!r} is not an element of {self.field!r}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: GF, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise MismatchError("ragged rows")
            if ncols is not None and width != ncols:
                raise MismatchError(f"rows have width {width}, expected {ncols}")
        else:
            width = 0 if ncols is None else ncols
        flat = tuple(v for r in rows for v in r)
        return cls(field, len(rows), width, flat)

    @classmethod
    def identity(cls, field: GF, n: int) -> "Matrix":
        return cls(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, field: GF, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, (0,) * (nrows * ncols))

    # -- access ---------------------------------------------------------------

    def entry(self, r: int, c: int) -> int:
        return self.entries[r * self.ncols + c]

    def row(self, r: int) -> tuple[int, ...]:
        return self.entries[r * self.ncols : (r + 1) * self.ncols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(r)) for r in range(self.nrows)]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # -- rearrangement ----------------------------------------------------------

    def transpose(self) -> "Matrix":
        out = tuple(self.entry(r, c) for c in range(self.ncols) for r in range(self.nrows))
        return Matrix(self.field, self.ncols, self.nrows, out)

    def map_entries(self, fn: Callable[[int], int]) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, tuple(fn(v) for v in self.entries))

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or other.ncols != self.ncols:
            raise MismatchError("stack requires same field and width")
        return Matrix(
            self.field, self.nrows + other.nrows, self.ncols, self.entries + other.entries
        )

    def permute_cols(self, perm: Sequence[int]) -> "Matrix":
        """Column j of the result is column perm[j] of self."""
        if sorted(perm) != list(range(self.ncols)):
            raise MismatchError("not a permutation of the column indices")
        out = tuple(self.entry(r, perm[j]) for r in range(self.nrows) for j in range(self.ncols))
        return Matrix(self.field, self.nrows, self.ncols, out)

    def scale_cols(self, factors: Sequence[int]) -> "Matrix":
        if len(factors) != self.ncols:
            raise MismatchError("one factor per column required")
        mul = self.field.mul
        out = tuple(
            mul(self.entry(r, c), factors[c])
            for r in range(self.nrows)
            for c in range(self.ncols)
        )
        return Matrix(self.field, self.nrows, self.ncols, out)

    def delete_rows_cols(self, drop: Iterable[int]) -> "Matrix":
        """Remove the rows and columns listed in ``drop`` (square matrices)."""
        if not self.is_square:
            raise NotSquareError("row/column deletion needs a square matrix")
        dropset = set(drop)
        keep = [i for i in range(self.nrows) if i not in dropset]
        out = tuple(self.entry(r, c) for r in keep for c in keep)
        return Matrix(self.field, len(keep), len(keep), out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise MismatchError("matrix product requires one common field")
        if self.ncols != other.nrows:
            raise MismatchError(
                f"inner dimensions differ: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}"
            )
        f = self.field
        add, mul = f.add, f.mul
        cols = [other.col(c) for c in range(other.ncols)]
        out = []
        for r in range(self.nrows):
            row = self.row(r)
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                out.append(acc)
        return Matrix(f, self.nrows, other.ncols, tuple(out))

    def col(self, c: int) -> tuple[int, ...]:
        return self.entries[c :: self.ncols] if self.ncols else ()


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Unique reduced row echelon form, with rank and pivot columns."""
    f = m.field
    add, sub, mul, inv = f.add, f.sub, f.mul, f.inv
    rows = m.to_rows()
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        pivot_inv = inv(rows[r][c])
        if pivot_inv != 1:
            rows[r] = [mul(pivot_inv, v) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [sub(v, mul(factor, w)) for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    flat = tuple(v for row in rows for v in row)
    return Matrix(f, nrows, ncols, flat), r, tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def det(m: Matrix) -> int:
    """Determinant by exact elimination; the empty matrix has determinant 1."""
    if not m.is_square:
        raise NotSquareError(f"determinant of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return 1
    f = m.field
    sub, mul, inv = f.sub, f.mul, f.inv
    rows = m.to_rows()
    swaps = 0
    acc = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            swaps += 1
        pivot = rows[c][c]
        acc = mul(acc, pivot)
        pivot_inv = inv(pivot)
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = mul(rows[i][c], pivot_inv)
                rows[i] = [sub(v, mul(factor, w)) for v, w in zip(rows[i], rows[c])]
    if swaps % 2:
        acc = f.neg(acc)
    return acc


def nullspace_basis(m: Matrix) -> Matrix:
    """A canonical (RREF) basis of the right kernel {x : m @ x^T = 0}."""
    f = m.field
    r, rk, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    rows = []
    for fc in free:
        v = [0] * m.ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(r.entry(i, fc))
        rows.append(v)
    basis = Matrix.from_rows(f, rows, ncols=m.ncols)
    canon, nullity, _ = rref(basis)
    # free-column construction is independent, so no rank can be lost
    assert nullity == len(free)
    return canon


def standard_form(g: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Column-permute the RREF of ``g`` into [I_k | M].

    Returns the permuted matrix and ``perm`` with perm[new] = old column
    index.  Requires full row rank.
    """
    r, rk, pivots = rref(g)
    if rk < g.nrows:
        raise RankDeficientError(f"rank {rk} < {g.nrows} rows")
    rest = [c for c in range(g.ncols) if c not in set(pivots)]
    perm = tuple(pivots) + tuple(rest)
    return r.permute_cols(perm), perm


def gram(g: Matrix, m: int) -> Matrix:
    """g times the transpose of the entrywise (p^m)-power of g."""
    f = g.field
    twisted = g.map_entries(lambda v: f.frobenius(v, m))
    return g @ twisted.transpose()


def minor_det(p: Matrix, drop: Iterable[int]) -> int:
    """Determinant after deleting the rows and columns listed in ``drop``.

    Dropping everything leaves the empty matrix, whose determinant is 1;
    dropping nothing gives det(p).
    """
    return det(p.delete_rows_cols(drop))

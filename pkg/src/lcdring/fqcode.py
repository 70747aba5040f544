"""Linear codes over F_q.

A code is stored by its unique reduced row echelon generator matrix, so
two objects describe the same code exactly when they compare equal.  The
Galois dual with twist l is computed as the Euclidean kernel of the
entrywise (p^(e-l))-power of the generator; that single route is used for
every dual in the package.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadLError,
    CapExceededError,
    MismatchError,
    ZeroCodeError,
    ZeroScaleError,
)
from .gf import GF
from .linalg import Matrix, det, gram, nullspace_basis, rref

DEFAULT_ENUM_CAP = 1_000_000


@dataclass(frozen=True)
class FqCode:
    """An [n, k] linear code over GF(q), canonicalized by RREF."""

    field: GF
    n: int
    gen: Matrix
    _dist: int | None = dataclasses.field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.gen.field != self.field or self.gen.ncols != self.n:
            raise MismatchError("generator does not match the declared ambient space")

    @classmethod
    def from_rows(cls, field: GF, n: int, rows: Sequence[Sequence[int]]) -> "FqCode":
        """The span of ``rows``; redundant and zero rows are dropped."""
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise MismatchError(f"row of width {len(r)} in a length-{n} code")
        m = Matrix.from_rows(field, rows, ncols=n)
        reduced, rk, _ = rref(m)
        gen = Matrix(field, rk, n, reduced.entries[: rk * n])
        return cls(field, n, gen)

    @classmethod
    def zero(cls, field: GF, n: int) -> "FqCode":
        return cls(field, n, Matrix.zero(field, 0, n))

    @classmethod
    def full(cls, field: GF, n: int) -> "FqCode":
        return cls(field, n, Matrix.identity(field, n))

    # -- basic data ---------------------------------------------------------

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != self.n:
            raise MismatchError("word length differs from code length")
        stacked = self.gen.vstack(Matrix.from_rows(self.field, [list(word)], ncols=self.n))
        return rref(stacked)[1] == self.k

    def __repr__(self) -> str:
        return f"FqCode(n={self.n}, k={self.k}, field={self.field!r})"

    # -- duality ---------------------------------------------------------------

    def _check_l(self, l: int) -> int:
        if not 0 <= l <= self.field.e - 1:
            raise BadLError(f"l must lie in [0, {self.field.e - 1}], got {l}")
        return l

    def galois_dual(self, l: int = 0) -> "FqCode":
        """All words pairing to zero with the code under sum(t_i * s_i^(p^l))."""
        l = self._check_l(l)
        f = self.field
        m = f.e - l
        twisted = self.gen.map_entries(lambda v: f.frobenius(v, m))
        return FqCode(f, self.n, nullspace_basis(twisted))

    def hull_dim(self, l: int = 0) -> int:
        dual = self.galois_dual(l)
        joint = rref(self.gen.vstack(dual.gen))[1]
        return self.k + dual.k - joint

    def lcd_status(self, l: int = 0) -> tuple[bool, int]:
        """(flag, determinant) for the twisted Gram criterion.

        The zero code has an empty Gram matrix with determinant 1, so it
        counts as complementary-dual by convention.
        """
        l = self._check_l(l)
        d = det(gram(self.gen, self.field.e - l))
        return (d != 0, d)

    def is_lcd(self, l: int = 0) -> bool:
        return self.lcd_status(l)[0]

    def is_self_orthogonal(self, l: int = 0) -> bool:
        """True when the code is contained in its own Galois dual."""
        dual = self.galois_dual(l)
        if self.k > dual.k:
            return False
        return rref(dual.gen.vstack(self.gen))[1] == dual.k

    def is_self_dual(self) -> bool:
        return self == self.galois_dual(0)

    # -- metrics ---------------------------------------------------------------

    def min_dist(self, cap: int = DEFAULT_ENUM_CAP) -> int:
        """Exact minimum Hamming weight by message-space enumeration."""
        if self.k == 0:
            raise ZeroCodeError("the zero code has no minimum distance")
        if self._dist is not None:
            return self._dist
        q = self.field.q
        total = q**self.k
        if total > cap:
            raise CapExceededError(f"{total} codewords exceed the cap of {cap}")
        add, mul = self.field.add, self.field.mul
        rows = self.gen.to_rows()
        scaled = [[[mul(d, v) for v in row] for d in range(q)] for row in rows]
        best = self.n
        for msg in range(1, total):
            word = None
            m = msg
            i = 0
            while m:
                d = m % q
                if d:
                    contrib = scaled[i][d]
                    if word is None:
                        word = list(contrib)
                    else:
                        word = [add(a, b) for a, b in zip(word, contrib)]
                m //= q
                i += 1
            w = sum(1 for v in word if v)
            if w < best:
                best = w
                if best == 1:
                    break
        object.__setattr__(self, "_dist", best)
        return best

    def is_mds(self, cap: int = DEFAULT_ENUM_CAP) -> bool:
        return self.min_dist(cap) == self.n - self.k + 1

    # -- equivalence ---------------------------------------------------------

    def scale(self, factors: Sequence[int]) -> "FqCode":
        """The monomially equivalent code with column j scaled by factors[j]."""
        if len(factors) != self.n:
            raise MismatchError("one scaling factor per coordinate required")
        for j, a in enumerate(factors):
            if a == 0:
                raise ZeroScaleError(f"factor at position {j} is zero")
            self.field.check(a)
        return FqCode.from_rows(self.field, self.n, self.gen.scale_cols(factors).to_rows())

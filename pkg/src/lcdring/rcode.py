"""Linear codes over R as four component codes.

A linear code over R decomposes as g1*C1 + g2*C2 + g3*C3 + g4*C4 where
the C_i are linear codes over F_q; the quadruple is the single source of
truth here.  Duals, complementary-dual checks, self-orthogonality, the
Singleton test and unit scaling all act componentwise, and the generator
matrix over R is just a view rebuilt on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, MismatchError, NotAUnitError, ZeroCodeError
from .fqcode import DEFAULT_ENUM_CAP, FqCode
from .gf import GF
from .ring import RingElement


@dataclass(frozen=True)
class RCodeParams:
    n: int
    k: int
    d_lee: int | None
    components: tuple[tuple[int, int, int | None], ...]


@dataclass(frozen=True)
class RCode:
    field: GF
    n: int
    comps: tuple[FqCode, FqCode, FqCode, FqCode]

    def __post_init__(self) -> None:
        if not isinstance(self.comps, tuple):
            object.__setattr__(self, "comps", tuple(self.comps))
        if len(self.comps) != 4:
            raise MismatchError("exactly four component codes required")
        for c in self.comps:
            if c.field != self.field or c.n != self.n:
                raise MismatchError("component codes disagree on field or length")

    @classmethod
    def from_components(cls, comps: Sequence[FqCode]) -> "RCode":
        comps = tuple(comps)
        if len(comps) != 4:
            raise MismatchError("exactly four component codes required")
        return cls(comps[0].field, comps[0].n, comps)

    @classmethod
    def from_generators(
        cls, field: GF, n: int, rows: Sequence[Sequence[RingElement]]
    ) -> "RCode":
        """Span of ring-vector generators, split into coordinate slots.

        R-scalars reach each idempotent slot independently, so the i-th
        component is simply the F_q-span of the slot-i coordinate rows.
        """
        for row in rows:
            if len(row) != n:
                raise MismatchError(f"generator of width {len(row)} in a length-{n} code")
            for x in row:
                if x.field != field:
                    raise MismatchError("generator entry from a different field")
        comps = tuple(
            FqCode.from_rows(field, n, [[x.g[i] for x in row] for row in rows])
            for i in range(4)
        )
        return cls(field, n, comps)

    @classmethod
    def zero(cls, field: GF, n: int) -> "RCode":
        return cls(field, n, tuple(FqCode.zero(field, n) for _ in range(4)))

    # -- basic data ---------------------------------------------------------

    @property
    def k(self) -> int:
        return sum(c.k for c in self.comps)

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def generator_rows(self) -> list[tuple[RingElement, ...]]:
        """Generators over R: each component row embedded in its slot."""
        out = []
        for i, comp in enumerate(self.comps):
            for r in range(comp.k):
                row = comp.gen.row(r)
                out.append(
                    tuple(
                        RingElement(
                            self.field,
                            tuple(v if s == i else 0 for s in range(4)),
                        )
                        for v in row
                    )
                )
        return out

    def __repr__(self) -> str:
        ks = ",".join(str(c.k) for c in self.comps)
        return f"RCode(n={self.n}, k={self.k} ({ks}), field={self.field!r})"

    # -- duality and predicates ------------------------------------------------

    def galois_dual(self, l: int = 0) -> "RCode":
        return RCode(self.field, self.n, tuple(c.galois_dual(l) for c in self.comps))

    def lcd_status(self, l: int = 0) -> tuple[bool, tuple[int, int, int, int]]:
        """(flag, per-component twisted Gram determinants)."""
        pairs = [c.lcd_status(l) for c in self.comps]
        return (all(flag for flag, _ in pairs), tuple(d for _, d in pairs))

    def is_lcd(self, l: int = 0) -> bool:
        return self.lcd_status(l)[0]

    def is_self_orthogonal(self, l: int = 0) -> bool:
        return all(c.is_self_orthogonal(l) for c in self.comps)

    def is_self_dual(self) -> bool:
        return all(c.is_self_dual() for c in self.comps)

    # -- metrics ---------------------------------------------------------------

    def lee_min_dist(self, cap: int = DEFAULT_ENUM_CAP) -> int:
        """Minimum Lee weight; equals the smallest nonzero-component distance."""
        if self.k == 0:
            raise ZeroCodeError("the zero code has no minimum distance")
        return min(c.min_dist(cap) for c in self.comps if c.k > 0)

    def params(self, cap: int = DEFAULT_ENUM_CAP) -> RCodeParams:
        """Aggregate parameters; distances degrade to None past the cap."""
        comp_params = []
        dists: list[int | None] = []
        for c in self.comps:
            if c.k == 0:
                comp_params.append((c.n, 0, None))
                continue
            try:
                d = c.min_dist(cap)
            except CapExceededError:
                d = None
            comp_params.append((c.n, c.k, d))
            dists.append(d)
        d_lee = min(dists) if dists and all(d is not None for d in dists) else None
        return RCodeParams(self.n, self.k, d_lee, tuple(comp_params))

    def is_mds(self, cap: int = DEFAULT_ENUM_CAP) -> bool:
        """Whether the Lee distance attains n - k/4 + 1 exactly."""
        if self.k == 0:
            raise ZeroCodeError("the zero code has no minimum distance")
        d = self.lee_min_dist(cap)
        return 4 * d == 4 * self.n - self.k + 4

    # -- maps ---------------------------------------------------------------

    def gray_image(self) -> FqCode:
        """The length-4n field code spanned by expanded generators.

        Component i lands on the positions congruent to i mod 4, so the
        image dimension is the sum of the component dimensions and its
        Hamming distance is the Lee distance of the source.
        """
        rows = []
        for i, comp in enumerate(self.comps):
            for r in range(comp.k):
                row = comp.gen.row(r)
                out = [0] * (4 * self.n)
                for j, v in enumerate(row):
                    out[4 * j + i] = v
                rows.append(out)
        return FqCode.from_rows(self.field, 4 * self.n, rows)

    def scale(self, alpha: Sequence[RingElement]) -> "RCode":
        """Entrywise multiplication by a vector of units."""
        if len(alpha) != self.n:
            raise MismatchError("one scaling unit per coordinate required")
        for j, a in enumerate(alpha):
            if a.field != self.field:
                raise MismatchError("scaling vector from a different ring")
            if not a.is_unit:
                raise NotAUnitError(f"alpha[{j}] = {a.g} has a zero coordinate")
        comps = tuple(
            comp.scale([a.g[i] for a in alpha]) for i, comp in enumerate(self.comps)
        )
        return RCode(self.field, self.n, comps)

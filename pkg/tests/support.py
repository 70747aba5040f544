"""Shared helpers for generating random codes in tests."""

from __future__ import annotations

import random

from lcdring import GF, FqCode, RCode, RingElement

FIELDS = {
    4: lambda: GF(2, 2),
    5: lambda: GF(5),
    9: lambda: GF(3, 2),
}


def make_field(q: int) -> GF:
    return FIELDS[q]()


def random_fqcode(rng: random.Random, field: GF, n: int, k_rows: int) -> FqCode:
    rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k_rows)]
    return FqCode.from_rows(field, n, rows)


def random_rcode(rng: random.Random, field: GF, n: int, k_max: int) -> RCode:
    comps = [random_fqcode(rng, field, n, rng.randint(0, k_max)) for _ in range(4)]
    return RCode.from_components(comps)


def random_ring_vector(rng: random.Random, field: GF, n: int) -> tuple[RingElement, ...]:
    return tuple(
        RingElement(field, tuple(rng.randrange(field.q) for _ in range(4)))
        for _ in range(n)
    )

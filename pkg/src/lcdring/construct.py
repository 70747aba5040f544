"""Scaling constructions that turn any code into an equivalent LCD code.

The engine behind both the Euclidean and the twisted (Galois) variants is
the same determinant identity: if every minor of a square matrix P
obtained by deleting up to t matching rows and columns vanishes, then for
any perturbation b supported on at most t+1 diagonal positions,

    det(P + diag(b)) = (prod of the b_j) * det(P with support deleted).

Searching deletion sets by increasing size finds the first nonvanishing
minor; placing suitable column scalings on those positions makes the
twisted Gram determinant of the scaled generator equal a product of
nonzero factors, hence nonzero, which is exactly the complementary-dual
criterion.  Scaling by nonzero constants is a monomial equivalence, so
length, dimension and distance are untouched.

Positions off the deletion set keep factor 1; positions on it draw from
the units whose relevant power differs from 1:

* Euclidean: anything outside {1, -1}, so q > 3 is required.
* Galois twist l: anything outside the beta-th powers of the unit group,
  where beta = (p^e - 1) / (p^(e-l) + 1); requires the divisibility and
  beta > 1.

Everything is deterministic: deletion sets scan in lexicographic order
and factors default to the smallest valid encoding; a seed switches the
factor choice to a reproducible random draw.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadLError,
    BetaOneError,
    ConsistencyError,
    DivisibilityError,
    FieldTooSmallError,
    NotSquareError,
    SizeCapError,
    SupportMismatchError,
    ZeroCodeError,
)
from .fqcode import FqCode
from .gf import GF
from .linalg import Matrix, det, gram, minor_det, standard_form
from .rcode import RCode
from .ring import RingElement

DEFAULT_DIM_CAP = 20

MODE_EUCLID = "euclid"
MODE_GALOIS = "galois"


@dataclass(frozen=True)
class MinorCertificate:
    """First nonvanishing minor of a square matrix, by deletion size.

    ``t`` is the largest size at which every deletion minor vanishes, so
    ``t == -1`` means the matrix itself is nonsingular.  ``r_set`` is the
    lexicographically first deletion set of size t+1 with nonzero minor,
    and ``det`` is that minor's value.
    """

    t: int
    r_set: tuple[int, ...]
    det: int


@dataclass(frozen=True)
class FieldScalingCertificate:
    """Replayable record of one field-level LCD scaling."""

    mode: str
    l: int
    beta: int | None
    perm: tuple[int, ...]
    minor: MinorCertificate
    alpha: tuple[int, ...]
    gram_det: int


@dataclass(frozen=True)
class RingScalingCertificate:
    """Per-component records plus the assembled unit vector."""

    mode: str
    l: int
    beta: int | None
    components: tuple[FieldScalingCertificate | None, ...]
    alpha: tuple[RingElement, ...]
    n: int
    k: int


def minor_search(p: Matrix, max_dim: int = DEFAULT_DIM_CAP) -> MinorCertificate:
    """Scan deletion sets by size, then lexicographically, for a nonzero minor.

    Always terminates: deleting everything leaves the empty matrix with
    determinant 1.  Minimality of the returned size is guaranteed by the
    scan order.
    """
    if not p.is_square:
        raise NotSquareError("minor search needs a square matrix")
    m = p.nrows
    if m > max_dim:
        raise SizeCapError(f"matrix size {m} exceeds the search cap of {max_dim}")
    for w in range(m + 1):
        for drop in itertools.combinations(range(m), w):
            d = minor_det(p, drop)
            if d != 0:
                return MinorCertificate(w - 1, drop, d)
    raise ConsistencyError("unreachable: full deletion has determinant 1")


def lemma_det_check(p: Matrix, b: Sequence[int], cert: MinorCertificate) -> bool:
    """Verify det(p + diag(b)) against the certified minor identity.

    ``b`` must be supported exactly on the certificate's deletion set.
    """
    if not p.is_square or len(b) != p.nrows:
        raise NotSquareError("perturbation must match a square matrix")
    support = tuple(j for j, v in enumerate(b) if v)
    if set(support) != set(cert.r_set):
        raise SupportMismatchError(
            f"support {support} differs from certified set {cert.r_set}"
        )
    f = p.field
    m = p.nrows
    entries = list(p.entries)
    for j in range(m):
        entries[j * m + j] = f.add(entries[j * m + j], b[j])
    lhs = det(Matrix(f, m, m, tuple(entries)))
    rhs = cert.det
    for j in support:
        rhs = f.mul(rhs, b[j])
    return lhs == rhs


def _nonresidue_factors(field: GF, beta: int) -> list[int]:
    return [x for x in field.units() if not field.is_beta_power(x, beta)]


def _galois_beta(field: GF, l: int) -> int:
    if not 0 < l < field.e:
        raise BadLError(f"twist must satisfy 0 < l < e = {field.e}, got {l}")
    base = field.p ** (field.e - l) + 1
    if (field.q - 1) % base != 0:
        raise DivisibilityError(
            f"p^(e-l) + 1 = {base} does not divide q - 1 = {field.q - 1}"
        )
    beta = (field.q - 1) // base
    if beta == 1:
        raise BetaOneError("beta = 1: every unit is a beta-th power, nothing to scale by")
    return beta


def _scaling(
    code: FqCode,
    mode: str,
    l: int,
    beta: int | None,
    frob_m: int,
    b_exp: int,
    factors: list[int],
    seed: int | None,
    max_dim: int,
) -> tuple[tuple[int, ...], FqCode, FieldScalingCertificate]:
    f = code.field
    if code.k == 0:
        raise ZeroCodeError("nothing to scale in the zero code")
    gs, perm = standard_form(code.gen)
    p = gram(gs, frob_m)
    cert = minor_search(p, max_dim)
    a_std = [1] * code.n
    if cert.t >= 0:
        rng = random.Random(seed) if seed is not None else None
        for j in cert.r_set:
            a_std[j] = rng.choice(factors) if rng is not None else factors[0]
    b = [f.sub(f.pow(a_std[j], b_exp), 1) for j in range(code.k)]
    if not lemma_det_check(p, b, cert):
        raise ConsistencyError("minor determinant identity failed")
    scaled_std = gs.scale_cols(a_std)
    gram_det = det(gram(scaled_std, frob_m))
    expected = cert.det
    for j in cert.r_set:
        expected = f.mul(expected, b[j])
    if gram_det != expected or gram_det == 0:
        raise ConsistencyError(
            f"scaled Gram determinant {gram_det} does not match certificate {expected}"
        )
    alpha = [1] * code.n
    for new_j, old_j in enumerate(perm):
        alpha[old_j] = a_std[new_j]
    out = code.scale(alpha)
    if not out.is_lcd(l):
        raise ConsistencyError("scaled code failed the complementary-dual check")
    fc = FieldScalingCertificate(
        mode=mode,
        l=l,
        beta=beta,
        perm=perm,
        minor=cert,
        alpha=tuple(alpha),
        gram_det=gram_det,
    )
    return tuple(alpha), out, fc


def euclid_lcd_scaling(
    code: FqCode, seed: int | None = None, max_dim: int = DEFAULT_DIM_CAP
) -> tuple[tuple[int, ...], FqCode, FieldScalingCertificate]:
    """A nonzero column scaling making the code Euclidean LCD.

    Needs q > 3 so that units other than 1 and -1 exist.  Parameters
    [n, k, d] are preserved; an already-LCD code comes back unchanged
    with the all-ones scaling.
    """
    f = code.field
    if f.q <= 3:
        raise FieldTooSmallError(f"need q > 3, got q = {f.q}")
    factors = [x for x in f.units() if x != 1 and x != f.minus_one]
    return _scaling(code, MODE_EUCLID, 0, None, 0, 2, factors, seed, max_dim)


def galois_lcd_scaling(
    code: FqCode, l: int, seed: int | None = None, max_dim: int = DEFAULT_DIM_CAP
) -> tuple[tuple[int, ...], FqCode, FieldScalingCertificate]:
    """A nonzero column scaling making the code LCD for the twist l.

    Perturbation entries are a_j^(p^(e-l)+1) - 1, which vanish exactly on
    the beta-th powers; factors are drawn from the complement.
    """
    f = code.field
    beta = _galois_beta(f, l)
    factors = _nonresidue_factors(f, beta)
    b_exp = f.p ** (f.e - l) + 1
    return _scaling(code, MODE_GALOIS, l, beta, f.e - l, b_exp, factors, seed, max_dim)


def ring_lcd_equivalent(
    code: RCode,
    mode: str = MODE_EUCLID,
    l: int | None = None,
    seed: int | None = None,
    max_dim: int = DEFAULT_DIM_CAP,
) -> tuple[tuple[RingElement, ...], RCode, RingScalingCertificate]:
    """An equivalent LCD code over R, built componentwise.

    Components that are already LCD keep the identity scaling; the rest
    go through the field-level construction.  The per-coordinate unit is
    assembled from the four slot factors, so the result has the same
    length, dimension and Lee distance as the input.
    """
    f = code.field
    if mode == MODE_EUCLID:
        if l not in (None, 0):
            raise BadLError("the Euclidean mode fixes l = 0")
        if f.q <= 3:
            raise FieldTooSmallError(f"need q > 3, got q = {f.q}")
        l_eff = 0
        beta = None
    elif mode == MODE_GALOIS:
        if l is None:
            raise BadLError("the Galois mode requires a twist l")
        beta = _galois_beta(f, l)
        l_eff = l
    else:
        raise ValueError(f"unknown mode {mode!r}")

    slot_alphas: list[tuple[int, ...]] = []
    certs: list[FieldScalingCertificate | None] = []
    for comp in code.comps:
        if comp.is_lcd(l_eff):
            slot_alphas.append((1,) * code.n)
            certs.append(None)
            continue
        if mode == MODE_EUCLID:
            avec, _, fc = euclid_lcd_scaling(comp, seed=seed, max_dim=max_dim)
        else:
            avec, _, fc = galois_lcd_scaling(comp, l_eff, seed=seed, max_dim=max_dim)
        slot_alphas.append(avec)
        certs.append(fc)

    alpha = tuple(
        RingElement(f, (slot_alphas[0][j], slot_alphas[1][j], slot_alphas[2][j], slot_alphas[3][j]))
        for j in range(code.n)
    )
    out = code.scale(alpha)
    if not out.is_lcd(l_eff):
        raise ConsistencyError("assembled scaling failed the complementary-dual check")
    cert = RingScalingCertificate(
        mode=mode,
        l=l_eff,
        beta=beta,
        components=tuple(certs),
        alpha=alpha,
        n=code.n,
        k=code.k,
    )
    return alpha, out, cert

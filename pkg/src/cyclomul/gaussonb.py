"""Optimal-normal-basis multipliers via the redundant cyclotomic embedding.

A Gauss period of type (m, k) with n = mk + 1 prime embeds GF(q^m) into the
n-dimensional cyclotomic field over GF(q):

* type I  (k = 1, n = m + 1):  field coordinates a_1..a_m map to the vector
  (0, a_1, ..., a_m);
* type II (k = 2, n = 2m + 1): they map to the palindrome
  (0, a_1, ..., a_m, a_m, ..., a_1).

Conversion back subtracts the constant coordinate: a_i = c_i - c_0.  Both
maps are essentially free, which is what makes the redundant representation
attractive.

The specialized multipliers below fold that conversion into the product
formulas, so they consume and produce m-coordinate field elements directly.
Two strategies exist for each basis type (plus one that keeps the redundant
lane for type II):

* ``pairprod`` -- cross products a_u b_w + a_w b_u; m^2 multiplications.
* ``pairsum``  -- shared sums (a_u + a_w)(b_u + b_w); (m^2 + m)/2
  multiplications at the price of extra additions.
* ``redundant`` (type II only) -- pairsum evaluation of all folded lanes
  including lane 0, without the y broadcast.

Every variant agrees with the reference path embed -> mul_direct -> extract
for any prime q; the advertised GF(2) operation counts are exact and
input-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclocore import CycloElement
from .errors import DimensionMismatch, NoSuchElement, NotFoldable, WrongBasisType
from .groundfield import GroundField, OpCount
from .oracle import multiplicative_order, verify_normal_basis

ONB1_VARIANTS = ("pairprod", "pairsum")
ONB2_VARIANTS = ("redundant", "pairprod", "pairsum")


def find_alpha(n: int, k: int) -> int:
    """Smallest unit of Z_n^x with multiplicative order exactly k."""
    if n < 2 or k < 1 or (n - 1) % k != 0:
        raise NoSuchElement(f"k={k} does not divide n-1={n - 1}")
    for a in range(1, n):
        if multiplicative_order(a, n) == k:
            return a
    raise NoSuchElement(f"no element of order {k} mod {n}")


@dataclass(frozen=True)
class GaussParams:
    """A validated Gauss-period basis description (m, k) over GF(q)."""

    field: GroundField
    m: int
    k: int
    n: int
    alpha: int

    @property
    def q(self) -> int:
        return self.field.p

    @classmethod
    def create(cls, m: int, k: int, q: int) -> "GaussParams":
        """Build parameters, verifying the basis actually exists.

        Existence is checked empirically: the q-power orbit of the period
        must have full rank in the splitting field.
        """
        if m < 2:
            raise WrongBasisType(f"extension degree m must be >= 2, got {m}")
        if k not in (1, 2):
            raise WrongBasisType(f"only period types k=1 and k=2 are supported, got k={k}")
        field = GroundField(q)
        n = m * k + 1
        if not verify_normal_basis(m, k, q):
            raise WrongBasisType(
                f"type-({m},{k}) period generates no normal basis over GF({q})"
            )
        return cls(field, m, k, n, find_alpha(n, k))


@dataclass(frozen=True)
class NormalBasisElement:
    """m field coordinates w.r.t. the permuted basis [beta^1, ..., beta^m]
    (type I) or the folded period coordinates a_1..a_m (type II)."""

    params: GaussParams
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.params.m:
            raise ValueError(
                f"expected {self.params.m} coordinates, got {len(self.coords)}"
            )
        for c in self.coords:
            self.params.field.check(c)


def _check_pair(a: NormalBasisElement, b: NormalBasisElement) -> None:
    if a.params != b.params:
        raise DimensionMismatch("operands belong to different bases")


def s_fold(i: int, m: int) -> int:
    """Fold an index into 0..m: i stays put, 2m+1-i mirrors down."""
    i %= 2 * m + 1
    return i if i <= m else 2 * m + 1 - i


def embed_onb1(a: NormalBasisElement) -> CycloElement:
    """(a_1, ..., a_m) -> (0, a_1, ..., a_m).  Free."""
    if a.params.k != 1:
        raise WrongBasisType("embed_onb1 requires a type-I (k=1) basis")
    return CycloElement(a.params.field, (0,) + a.coords)


def extract_onb1(
    c: CycloElement, params: GaussParams, ctx: OpCount
) -> NormalBasisElement:
    """(c_0, ..., c_m) -> (c_1 - c_0, ..., c_m - c_0).

    Costs m additions when c_0 is nonzero, nothing otherwise.
    """
    if params.k != 1:
        raise WrongBasisType("extract_onb1 requires a type-I (k=1) basis")
    if c.n != params.n:
        raise DimensionMismatch(f"expected dimension {params.n}, got {c.n}")
    gf = params.field
    c0 = c.coords[0]
    if c0 == 0:
        return NormalBasisElement(params, c.coords[1:])
    neg = gf.neg(c0)
    return NormalBasisElement(
        params, tuple(gf.add(ci, neg, ctx) for ci in c.coords[1:])
    )


def embed_onb2(a: NormalBasisElement) -> CycloElement:
    """(a_1, ..., a_m) -> palindrome (0, a_1, ..., a_m, a_m, ..., a_1)."""
    if a.params.k != 2:
        raise WrongBasisType("embed_onb2 requires a type-II (k=2) basis")
    return CycloElement(a.params.field, (0,) + a.coords + a.coords[::-1])


def extract_onb2(
    c: CycloElement, params: GaussParams, ctx: OpCount
) -> NormalBasisElement:
    """Fold a palindromic vector back to (c_1 - c_0, ..., c_m - c_0).

    Products of embedded elements are always exactly palindromic (they are
    invariant under beta -> 1/beta), so a broken palindrome means the input
    was not a folded element: NotFoldable.
    """
    if params.k != 2:
        raise WrongBasisType("extract_onb2 requires a type-II (k=2) basis")
    if c.n != params.n:
        raise DimensionMismatch(f"expected dimension {params.n}, got {c.n}")
    m, n = params.m, params.n
    for i in range(1, m + 1):
        if c.coords[i] != c.coords[n - i]:
            raise NotFoldable(f"coordinate {i} != coordinate {n - i}")
    gf = params.field
    c0 = c.coords[0]
    if c0 == 0:
        return NormalBasisElement(params, c.coords[1 : m + 1])
    neg = gf.neg(c0)
    return NormalBasisElement(
        params, tuple(gf.add(c.coords[i], neg, ctx) for i in range(1, m + 1))
    )


def embed(a: NormalBasisElement) -> CycloElement:
    return embed_onb1(a) if a.params.k == 1 else embed_onb2(a)


def extract(c: CycloElement, params: GaussParams, ctx: OpCount) -> NormalBasisElement:
    if params.k == 1:
        return extract_onb1(c, params, ctx)
    return extract_onb2(c, params, ctx)


def mul_onb1(
    a: NormalBasisElement, b: NormalBasisElement, variant: str, ctx: OpCount
) -> NormalBasisElement:
    """Type-I multiplier; output lane i holds coordinate 2i mod n.

    GF(2) costs: pairprod m^2 mult, m^2 - 1 add;
                 pairsum (m^2+m)/2 mult, (3m^2-m)/2 - 1 add.
    """
    _check_pair(a, b)
    params = a.params
    if params.k != 1:
        raise WrongBasisType("mul_onb1 requires a type-I (k=1) basis")
    if variant not in ONB1_VARIANTS:
        raise ValueError(f"variant must be one of {ONB1_VARIANTS}, got {variant!r}")
    gf, m, n = params.field, params.m, params.n
    v = m // 2  # n = m + 1 is an odd prime, so m is even
    av = (0,) + a.coords  # index by beta exponent, a_0 = 0
    bv = (0,) + b.coords
    out = [0] * n

    if variant == "pairprod":
        # r = -(sum of the pairs that land on the constant coordinate)
        acc = None
        for j in range(1, v + 1):
            t = gf.add(
                gf.mul(av[j], bv[n - j], ctx), gf.mul(bv[j], av[n - j], ctx), ctx
            )
            acc = t if acc is None else gf.add(acc, t, ctx)
        r = gf.neg(acc)
        for i in range(1, m + 1):
            lane = gf.add(r, gf.mul(av[i], bv[i], ctx), ctx)
            for j in range(1, v + 1):
                if j == i or j == n - i:
                    continue  # pair touches the zero coordinate
                t = gf.add(
                    gf.mul(av[(i + j) % n], bv[(i - j) % n], ctx),
                    gf.mul(bv[(i + j) % n], av[(i - j) % n], ctx),
                    ctx,
                )
                lane = gf.add(lane, t, ctx)
            out[(2 * i) % n] = lane
    else:  # pairsum
        acc = None
        for j in range(1, v + 1):
            u = gf.add(av[j], av[n - j], ctx)
            w = gf.add(bv[j], bv[n - j], ctx)
            s = gf.mul(u, w, ctx)
            acc = s if acc is None else gf.add(acc, s, ctx)
        t0 = gf.neg(acc)
        for i in range(1, m + 1):
            lane = t0
            if gf.p > 2:
                lane = gf.add(lane, gf.double(gf.mul(av[i], bv[i], ctx), ctx), ctx)
            w2 = (2 * i) % n
            lane = gf.add(lane, gf.mul(av[w2], bv[w2], ctx), ctx)
            for j in range(1, v + 1):
                if j == i or j == n - i:
                    continue
                u = gf.add(av[(i + j) % n], av[(i - j) % n], ctx)
                w = gf.add(bv[(i + j) % n], bv[(i - j) % n], ctx)
                lane = gf.add(lane, gf.mul(u, w, ctx), ctx)
            out[(2 * i) % n] = lane

    return NormalBasisElement(params, tuple(out[1:]))


def mul_onb2(
    a: NormalBasisElement, b: NormalBasisElement, variant: str, ctx: OpCount
) -> NormalBasisElement:
    """Type-II multiplier on folded coordinates; lane i lands on s(2i).

    GF(2) costs: redundant m^2 mult, 3m^2 - m add;
                 pairprod  m^2 mult, (3m^2-3m)/2 add;
                 pairsum   (m^2+m)/2 mult, 2m^2 - 2m add.

    pairprod/pairsum reach those multiplication counts by computing each
    unordered folded pair once (the diagonal-plus-upper-triangle schedule)
    and reusing it in the two lanes that consume it.
    """
    _check_pair(a, b)
    params = a.params
    if params.k != 2:
        raise WrongBasisType("mul_onb2 requires a type-II (k=2) basis")
    if variant not in ONB2_VARIANTS:
        raise ValueError(f"variant must be one of {ONB2_VARIANTS}, got {variant!r}")
    gf, m, n = params.field, params.m, params.n
    av = (0,) + a.coords  # folded coordinates indexed 0..m
    bv = (0,) + b.coords
    out = [0] * (m + 1)

    def sf(i: int) -> int:
        return s_fold(i, m)

    if variant == "redundant":
        diag: dict[int, int] = {}
        for i in range(1, m + 1):
            acc = None
            for j in range(1, m + 1):
                u, w = sf(i + j), sf(i - j)
                t = gf.mul(gf.add(av[u], av[w], ctx), gf.add(bv[u], bv[w], ctx), ctx)
                acc = t if acc is None else gf.add(acc, t, ctx)
            if gf.p > 2:
                dd = gf.mul(av[i], bv[i], ctx)
                diag[i] = dd
                acc = gf.add(acc, gf.double(dd, ctx), ctx)
            out[sf(2 * i)] = acc
        # Lane 0 of the folded product is 2*sum(a_j b_j): identically zero
        # over GF(2); otherwise it must be computed and subtracted out.
        if gf.p == 2:
            return NormalBasisElement(params, tuple(out[1:]))
        s = diag[1]
        for j in range(2, m + 1):
            s = gf.add(s, diag[j], ctx)
        lane0 = gf.double(gf.double(s, ctx), ctx)
        neg0 = gf.neg(lane0)
        return NormalBasisElement(
            params, tuple(gf.add(out[i], neg0, ctx) for i in range(1, m + 1))
        )

    # Shared-term caches keyed by coordinate indexes, never by values, so
    # operation counts stay input-independent.
    prods: dict[tuple[int, int], int] = {}

    def prod(u: int, w: int) -> int:
        key = (u, w)
        if key not in prods:
            prods[key] = gf.mul(av[u], bv[w], ctx)
        return prods[key]

    if variant == "pairprod":
        cross: dict[tuple[int, int], int] = {}

        def pair(u: int, w: int) -> int:
            key = (u, w) if u < w else (w, u)
            if key not in cross:
                cross[key] = gf.add(prod(u, w), prod(w, u), ctx)
            return cross[key]

        y2 = None
        if gf.p > 2:
            s = prod(1, 1)
            for j in range(2, m + 1):
                s = gf.add(s, prod(j, j), ctx)
            y2 = gf.double(gf.neg(s), ctx)
        for i in range(1, m + 1):
            acc = prod(i, i)
            for j in range(1, m + 1):
                if j == i:
                    continue  # this pair touches the zero coordinate
                acc = gf.add(acc, pair(sf(i + j), sf(i - j)), ctx)
            if y2 is not None:
                acc = gf.add(acc, y2, ctx)
            out[sf(2 * i)] = acc
    else:  # pairsum
        sums: dict[tuple[int, int], int] = {}

        def pairsum(u: int, w: int) -> int:
            key = (u, w) if u < w else (w, u)
            if key not in sums:
                sums[key] = gf.mul(
                    gf.add(av[u], av[w], ctx), gf.add(bv[u], bv[w], ctx), ctx
                )
            return sums[key]

        y4 = None
        if gf.p > 2:
            s = prod(1, 1)
            for j in range(2, m + 1):
                s = gf.add(s, prod(j, j), ctx)
            y4 = gf.double(gf.double(gf.neg(s), ctx), ctx)
        for i in range(1, m + 1):
            acc = prod(sf(2 * i), sf(2 * i))
            for j in range(1, m + 1):
                if j == i:
                    continue
                acc = gf.add(acc, pairsum(sf(i + j), sf(i - j)), ctx)
            if y4 is not None:
                acc = gf.add(acc, gf.double(prod(i, i), ctx), ctx)
                acc = gf.add(acc, y4, ctx)
            out[sf(2 * i)] = acc

    return NormalBasisElement(params, tuple(out[1:]))


def onb2_pair_schedule(m: int) -> list[list[tuple[int, int]]]:
    """Folded index pairs consumed per cycle by the type-II multipliers.

    Row j (1-based) lists, for lanes i = 1..m, the pair
    (s(i+j), s(i-j)); a 0 in the pair marks the slot whose term vanishes
    because coordinate 0 of an embedded element is zero.
    """
    rows = []
    for j in range(1, m + 1):
        rows.append([(s_fold(i + j, m), s_fold(i - j, m)) for i in range(1, m + 1)])
    return rows

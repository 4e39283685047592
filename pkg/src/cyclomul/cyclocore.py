"""Cyclotomic ring/field elements and the vector-level multipliers.

Elements of GF(p)[x]/(x^n - 1) are length-n coordinate vectors
(a_0, ..., a_{n-1}) standing for sum(a_i * beta^i) with beta^n = 1.
Under *field* semantics the vector additionally satisfies
1 + beta + ... + beta^{n-1} = 0, which makes the representation
redundant: two vectors denote the same field element exactly when
they differ by a constant vector.

Multipliers provided:

* ``mul_direct``   -- cyclic convolution, the reference implementation.
* ``mul_alg1``     -- odd n; product-pair form.  Lane i accumulates
                      a_{i+j}b_{i-j} + b_{i+j}a_{i-j} and the result is
                      de-interleaved by the square-root permutation.
                      Same cost as direct (n^2 mult).
* ``mul_alg2``     -- odd n; sum-pair form.  Lane i accumulates
                      (a_{i+j}+a_{i-j})(b_{i+j}+b_{i-j}), roughly halving
                      the multiplications.  The ring variant restores
                      exactness with a broadcast correction
                      x = -sum(a_j b_j); the field variant skips it and
                      is correct up to a constant vector.
* ``mul_general``  -- any n >= 2; the same three strategies with the
                      extra half-shift terms that appear for even n.

All counted work goes through the GroundField methods so that an OpCount
context observes exactly the advertised number of operations; counts are
input-independent by construction (no value-based shortcuts).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, OddDimensionRequired
from .groundfield import GroundField, OpCount

RING = "ring"
FIELD = "field"
ALGEBRA_KINDS = (RING, FIELD)

GENERAL_VARIANTS = ("ring0", "ring1", "field1")


@dataclass(frozen=True)
class CycloElement:
    """Coordinate vector over GF(p) representing sum(a_i * beta^i)."""

    field: GroundField
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("dimension n must be >= 2")
        for c in self.coords:
            self.field.check(c)

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, field: GroundField, n: int) -> "CycloElement":
        return cls(field, (0,) * n)

    @classmethod
    def basis_power(cls, field: GroundField, n: int, i: int) -> "CycloElement":
        """The element beta^i."""
        coords = [0] * n
        coords[i % n] = 1
        return cls(field, tuple(coords))


def _check_same(a: CycloElement, b: CycloElement) -> None:
    if a.field.p != b.field.p or a.n != b.n:
        raise DimensionMismatch(
            f"operands disagree: GF({a.field.p})^{a.n} vs GF({b.field.p})^{b.n}"
        )


def _check_odd(n: int) -> None:
    if n % 2 == 0:
        raise OddDimensionRequired(f"n must be odd, got {n}")


def add(a: CycloElement, b: CycloElement, ctx: OpCount) -> CycloElement:
    """Coordinatewise sum; costs n additions."""
    _check_same(a, b)
    gf = a.field
    return CycloElement(
        gf, tuple(gf.add(x, y, ctx) for x, y in zip(a.coords, b.coords))
    )


def shift(a: CycloElement, k: int) -> CycloElement:
    """Cyclic shift: coordinate i of the result is a_{i+k}.  Free."""
    n = a.n
    k %= n
    return CycloElement(a.field, a.coords[k:] + a.coords[:k])


def mul_direct(a: CycloElement, b: CycloElement, ctx: OpCount) -> CycloElement:
    """Cyclic convolution c_j = sum_i a_i b_{j-i}; n^2 mult, n(n-1) add."""
    _check_same(a, b)
    gf, n = a.field, a.n
    av, bv = a.coords, b.coords
    out = []
    for j in range(n):
        acc = gf.mul(av[0], bv[j], ctx)
        for i in range(1, n):
            acc = gf.add(acc, gf.mul(av[i], bv[j - i], ctx), ctx)
        out.append(acc)
    return CycloElement(gf, tuple(out))


def sqrt_perm(d: CycloElement) -> CycloElement:
    """De-interleave lanes: c_{2i mod n} = d_i.  Odd n only; free."""
    _check_odd(d.n)
    n = d.n
    out = [0] * n
    for i, val in enumerate(d.coords):
        out[(2 * i) % n] = val
    return CycloElement(d.field, tuple(out))


def inverse_sqrt_perm(c: CycloElement) -> CycloElement:
    """Inverse of sqrt_perm: d_i = c_{2i mod n}.

    In characteristic 2 squaring permutes coordinates this way, so applying
    the inverse permutation to A*A recovers A: a genuine square root.
    """
    _check_odd(c.n)
    n = c.n
    return CycloElement(c.field, tuple(c.coords[(2 * i) % n] for i in range(n)))


def mul_alg1(
    a: CycloElement, b: CycloElement, ctx: OpCount
) -> tuple[CycloElement, CycloElement]:
    """Product-pair multiplier for odd n.

    Returns (d, prod): d holds the pre-permutation lanes (the square root
    of the product in characteristic 2) and prod = sqrt_perm(d) equals
    mul_direct exactly.  Costs n^2 mult, n(n-1) add for every ground field.
    """
    _check_same(a, b)
    _check_odd(a.n)
    gf, n = a.field, a.n
    v = (n - 1) // 2
    av, bv = a.coords, b.coords
    d = [gf.mul(av[i], bv[i], ctx) for i in range(n)]
    for j in range(1, v + 1):
        for i in range(n):
            up = (i + j) % n
            dn = (i - j) % n
            r = gf.add(
                gf.mul(av[up], bv[dn], ctx), gf.mul(bv[up], av[dn], ctx), ctx
            )
            d[i] = gf.add(d[i], r, ctx)
    droot = CycloElement(gf, tuple(d))
    return droot, sqrt_perm(droot)


def mul_alg2(
    a: CycloElement, b: CycloElement, kind: str, ctx: OpCount
) -> tuple[CycloElement, CycloElement]:
    """Sum-pair multiplier for odd n, ring or field semantics.

    Ring kind: lanes get x + 2*a_i*b_i + sum-pairs with x = -sum(a_j b_j);
    the result equals mul_direct exactly.  Field kind drops the broadcast
    (and, over GF(2), the vanishing doubled diagonal); the result equals
    mul_direct up to a constant vector, i.e. as a cyclotomic-field element.

    Returns (d, prod) like mul_alg1.
    """
    _check_same(a, b)
    _check_odd(a.n)
    if kind not in ALGEBRA_KINDS:
        raise ValueError(f"kind must be one of {ALGEBRA_KINDS}, got {kind!r}")
    gf, n, p = a.field, a.n, a.field.p
    v = (n - 1) // 2
    av, bv = a.coords, b.coords

    d: list[int] | None
    if kind == RING:
        diag = [gf.mul(av[i], bv[i], ctx) for i in range(n)]
        s = diag[0]
        for i in range(1, n):
            s = gf.add(s, diag[i], ctx)
        x = gf.neg(s)
        if p == 2:
            # 2*diag vanishes; the broadcast seeds every lane for free.
            d = [x] * n
        else:
            d = [gf.add(gf.double(diag[i], ctx), x, ctx) for i in range(n)]
    else:
        if p == 2:
            d = None  # no diagonal term at all over GF(2)
        else:
            d = [gf.double(gf.mul(av[i], bv[i], ctx), ctx) for i in range(n)]

    for j in range(1, v + 1):
        r = []
        for i in range(n):
            u = gf.add(av[(i + j) % n], av[(i - j) % n], ctx)
            w = gf.add(bv[(i + j) % n], bv[(i - j) % n], ctx)
            r.append(gf.mul(u, w, ctx))
        if d is None:
            d = r
        else:
            d = [gf.add(d[i], r[i], ctx) for i in range(n)]

    droot = CycloElement(gf, tuple(d))
    return droot, sqrt_perm(droot)


def mul_general(
    a: CycloElement, b: CycloElement, variant: str, ctx: OpCount
) -> CycloElement:
    """Multiplier for any n >= 2 (even n handled via half-shift terms).

    variant:
      * ``ring0``  -- product pairs; exact; n^2 mult, n(n-1) add.
      * ``ring1``  -- sum pairs plus broadcast correction; exact.
      * ``field1`` -- sum pairs without the broadcast; equals mul_direct
                      up to a constant vector.

    Accumulation is assignment-first: the first term written to an output
    slot is free, later terms cost one addition each.
    """
    _check_same(a, b)
    if variant not in GENERAL_VARIANTS:
        raise ValueError(
            f"variant must be one of {GENERAL_VARIANTS}, got {variant!r}"
        )
    gf, n, p = a.field, a.n, a.field.p
    v = (n - 1) // 2
    h = n // 2
    even = n % 2 == 0
    av, bv = a.coords, b.coords
    out: list[int | None] = [None] * n

    def put(idx: int, val: int) -> None:
        if out[idx] is None:
            out[idx] = val
        else:
            out[idx] = gf.add(out[idx], val, ctx)

    if variant == "ring0":
        for i in range(n):
            put((2 * i) % n, gf.mul(av[i], bv[i], ctx))
        for j in range(1, v + 1):
            for i in range(n):
                t = gf.add(
                    gf.mul(av[i], bv[(i + j) % n], ctx),
                    gf.mul(av[(i + j) % n], bv[i], ctx),
                    ctx,
                )
                put((2 * i + j) % n, t)
        if even:
            for i in range(h):
                t = gf.add(
                    gf.mul(av[i], bv[i + h], ctx),
                    gf.mul(av[i + h], bv[i], ctx),
                    ctx,
                )
                put((2 * i + h) % n, t)
    else:
        if variant == "ring1":
            diag = [gf.mul(av[i], bv[i], ctx) for i in range(n)]
            s = diag[0]
            for i in range(1, n):
                s = gf.add(s, diag[i], ctx)
            x = gf.neg(s)
            out = [x] * n  # broadcast seeds every lane
            if p > 2:
                for i in range(n):
                    put((2 * i) % n, gf.double(diag[i], ctx))
        else:  # field1: no broadcast
            if p > 2:
                for i in range(n):
                    put((2 * i) % n, gf.double(gf.mul(av[i], bv[i], ctx), ctx))
        for j in range(1, v + 1):
            for i in range(n):
                u = gf.add(av[i], av[(i + j) % n], ctx)
                w = gf.add(bv[i], bv[(i + j) % n], ctx)
                put((2 * i + j) % n, gf.mul(u, w, ctx))
        if even:
            for i in range(h):
                u = gf.add(av[i], av[i + h], ctx)
                w = gf.add(bv[i], bv[i + h], ctx)
                put((2 * i + h) % n, gf.mul(u, w, ctx))

    # field1 over GF(2) at n=2 leaves slot 0 untouched: it is zero.
    final = tuple(0 if c is None else c for c in out)
    return CycloElement(gf, final)


def fields_equal(a: CycloElement, b: CycloElement) -> bool:
    """Equality as cyclotomic-field elements: a - b is a constant vector."""
    _check_same(a, b)
    p = a.field.p
    d0 = (a.coords[0] - b.coords[0]) % p
    return all((x - y) % p == d0 for x, y in zip(a.coords, b.coords))


def shift_schedule(n: int) -> list[tuple[list[int], list[int]]]:
    """Per-cycle index data-flow of the paired multipliers (odd n).

    For each cycle j = 1..(n-1)/2, returns the coordinate indexes consumed
    by lane i from the forward-shifted copy (i+j) and the backward-shifted
    copy (i-j).
    """
    _check_odd(n)
    v = (n - 1) // 2
    rows = []
    for j in range(1, v + 1):
        top = [(i + j) % n for i in range(n)]
        bottom = [(i - j) % n for i in range(n)]
        rows.append((top, bottom))
    return rows


def sqrt_perm_map(n: int) -> list[int]:
    """Output order of the lanes: lane i lands on coordinate 2i mod n."""
    _check_odd(n)
    return [(2 * i) % n for i in range(n)]


def parse_coords(text: str, field: GroundField, expected_len: int | None = None,
                 what: str = "vector") -> tuple[int, ...]:
    """Parse the shared text format: comma-separated decimal coordinates."""
    parts = [s.strip() for s in text.split(",")]
    try:
        values = tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError(f"{what}: coordinates must be decimal integers: {text!r}")
    for c in values:
        if not 0 <= c < field.p:
            raise ValueError(f"{what}: coordinate {c} out of range [0, {field.p})")
    if expected_len is not None and len(values) != expected_len:
        raise ValueError(
            f"{what}: expected {expected_len} coordinates, got {len(values)}"
        )
    return values


def parse_vector(text: str, field: GroundField, n: int | None = None) -> CycloElement:
    return CycloElement(field, parse_coords(text, field, n))


def format_coords(coords: tuple[int, ...]) -> str:
    return ",".join(str(c) for c in coords)


def format_vector(elem: CycloElement) -> str:
    return format_coords(elem.coords)

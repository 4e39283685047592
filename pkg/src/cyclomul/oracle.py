"""Independent ground truth: polynomial-basis arithmetic in GF(q^d).

The splitting field of x^n - 1 over GF(q) is the arena where beta exists as
a true primitive n-th root of unity.  Evaluating a coordinate vector at beta
is a ring homomorphism, so every multiplier in :mod:`cyclomul.cyclocore` can
be checked here against plain field multiplication.

This module is deliberately naive (schoolbook polynomial multiply and long
division, no table tricks) and shares no code path with the instrumented
multipliers: an oracle must fail independently.  Oracle arithmetic is never
counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclocore import CycloElement, add as cy_add, mul_direct
from .errors import (
    DimensionMismatch,
    NoRoot,
    NotCoprime,
    OracleUnavailable,
    OrderMismatch,
    TooLarge,
)
from .groundfield import OpCount, is_prime

# Desk-scale caps for splitting-field construction.
MAX_D_GF2 = 24
MAX_FIELD_SIZE = 1 << 32


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in Z_n^x (a and n must be coprime)."""
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    order = 1
    x = a % n
    while x != 1:
        x = (x * a) % n
        order += 1
    return order


def order_mod(q: int, n: int) -> int:
    """Smallest d >= 1 with q^d = 1 (mod n); the splitting-field degree."""
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1: no splitting field exists")
    if n == 1:
        return 1
    return multiplicative_order(q, n)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomial helpers over GF(q), coefficients low-degree-first ---


def _poly_trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % q
    return _poly_trim(out)


def _poly_mod(a: list[int], mod: list[int], q: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, q)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % q
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % q
    return _poly_trim(a[:dm] or [0])


def _poly_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b != [0]:
        a, b = b, _poly_mod(a, b, q)
    return a


def _poly_powmod_x_q(base: list[int], q: int, mod: list[int]) -> list[int]:
    """base^q mod `mod` by square-and-multiply."""
    result = [1]
    acc = list(base)
    e = q
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, acc, q), mod, q)
        acc = _poly_mod(_poly_mul(acc, acc, q), mod, q)
        e >>= 1
    return result


def is_irreducible(poly: list[int], q: int) -> bool:
    """gcd test: f of degree d is irreducible iff gcd(f, x^(q^i) - x) = 1
    for i = 1..d//2."""
    d = len(poly) - 1
    if d <= 0:
        return False
    xq = [0, 1]
    for _ in range(d // 2):
        xq = _poly_powmod_x_q(xq, q, poly)
        diff = list(xq)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % q
        g = _poly_gcd(poly, _poly_trim(diff), q)
        if len(g) - 1 != 0:
            return False
    return True


def find_irreducible(q: int, d: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree d over GF(q).

    Candidates x^d + c_{d-1}x^{d-1} + ... + c_0 are enumerated by the
    base-q integer value of (c_{d-1}, ..., c_0), smallest first, so the
    choice is deterministic and reproducible.
    """
    if d == 1:
        return (0, 1)
    for enc in range(q**d):
        coeffs = []
        e = enc
        for _ in range(d):
            coeffs.append(e % q)
            e //= q
        poly = coeffs + [1]
        if is_irreducible(poly, q):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class SplitField:
    """GF(q^d) as polynomials over GF(q) modulo an irreducible of degree d."""

    q: int
    d: int
    modulus: tuple[int, ...]

    @classmethod
    def create(cls, q: int, d: int) -> "SplitField":
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        return cls(q, d, find_irreducible(q, d))

    def element(self, coeffs) -> "SplitFieldElement":
        c = list(coeffs)
        if len(c) > self.d:
            c = _poly_mod(c, list(self.modulus), self.q)
        c = [x % self.q for x in c] + [0] * (self.d - len(c))
        return SplitFieldElement(self, tuple(c[: self.d]))

    def zero(self) -> "SplitFieldElement":
        return self.element([0])

    def one(self) -> "SplitFieldElement":
        return self.element([1])

    def scalar(self, c: int) -> "SplitFieldElement":
        return self.element([c % self.q])

    def from_int(self, value: int) -> "SplitFieldElement":
        """Element with base-q digit encoding `value` (enumeration order)."""
        coeffs = []
        for _ in range(self.d):
            coeffs.append(value % self.q)
            value //= self.q
        return SplitFieldElement(self, tuple(coeffs))

    @property
    def size(self) -> int:
        return self.q**self.d


@dataclass(frozen=True)
class SplitFieldElement:
    field: SplitField
    coeffs: tuple[int, ...]

    def to_int(self) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.field.q + c
        return value

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def _check_same_field(x: SplitFieldElement, y: SplitFieldElement) -> None:
    if x.field != y.field:
        raise DimensionMismatch("elements of different splitting fields")


def sf_add(x: SplitFieldElement, y: SplitFieldElement) -> SplitFieldElement:
    _check_same_field(x, y)
    q = x.field.q
    return SplitFieldElement(
        x.field, tuple((a + b) % q for a, b in zip(x.coeffs, y.coeffs))
    )


def sf_neg(x: SplitFieldElement) -> SplitFieldElement:
    q = x.field.q
    return SplitFieldElement(x.field, tuple((-a) % q for a in x.coeffs))


def sf_mul(x: SplitFieldElement, y: SplitFieldElement) -> SplitFieldElement:
    _check_same_field(x, y)
    sf = x.field
    prod = _poly_mul(list(x.coeffs), list(y.coeffs), sf.q)
    red = _poly_mod(prod, list(sf.modulus), sf.q)
    return sf.element(red)


def sf_pow(x: SplitFieldElement, e: int) -> SplitFieldElement:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = x.field.one()
    acc = x
    while e:
        if e & 1:
            result = sf_mul(result, acc)
        acc = sf_mul(acc, acc)
        e >>= 1
    return result


def element_order(x: SplitFieldElement) -> int:
    """Multiplicative order of a nonzero element (brute force)."""
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    one = x.field.one()
    acc = x
    order = 1
    while acc != one:
        acc = sf_mul(acc, x)
        order += 1
    return order


def find_beta(sf: SplitField, n: int) -> SplitFieldElement:
    """Deterministic element of multiplicative order exactly n.

    Tries candidates g in encoding order and returns g^((q^d - 1)/n) for
    the first g whose power has full order n (checked via the prime
    divisors of n).
    """
    group = sf.size - 1
    if n <= 0 or group % n != 0:
        raise NoRoot(f"no element of order {n} in GF({sf.q}^{sf.d})")
    e = group // n
    one = sf.one()
    primes = prime_factors(n)
    for enc in range(1, sf.size):
        g = sf.from_int(enc)
        beta = sf_pow(g, e)
        if beta.is_zero() or (n > 1 and beta == one):
            continue
        if all(sf_pow(beta, n // ell) != one for ell in primes):
            return beta
    raise NoRoot(f"no element of order {n} found")  # unreachable for n | q^d - 1


@lru_cache(maxsize=None)
def splitting_field(q: int, n: int) -> tuple[SplitField, SplitFieldElement]:
    """The splitting field of x^n - 1 over GF(q) and a primitive n-th root.

    Cached: construction (irreducible search, root search) is deterministic.
    """
    d = order_mod(q, n)
    _check_caps(q, d)
    sf = SplitField.create(q, d)
    return sf, find_beta(sf, n)


def _check_caps(q: int, d: int) -> None:
    if q == 2 and d > MAX_D_GF2:
        raise OracleUnavailable(f"GF(2^{d}) exceeds the d <= {MAX_D_GF2} cap")
    if q**d >= MAX_FIELD_SIZE:
        raise OracleUnavailable(f"GF({q}^{d}) exceeds the 2^32 size cap")


def eval_at_beta(a: CycloElement, beta: SplitFieldElement) -> SplitFieldElement:
    """Horner evaluation of sum(a_i beta^i); a ring homomorphism."""
    sf = beta.field
    n = a.n
    if sf_pow(beta, n) != sf.one():
        raise OrderMismatch(f"beta^{n} != 1 in GF({sf.q}^{sf.d})")
    acc = sf.zero()
    for c in reversed(a.coords):
        acc = sf_add(sf_mul(acc, beta), sf.scalar(c))
    return acc


def gauss_gamma(
    sf: SplitField, beta: SplitFieldElement, alpha: int, k: int
) -> SplitFieldElement:
    """The period gamma = sum_{i=0}^{k-1} beta^(alpha^i)."""
    n_exp = 1
    acc = sf.zero()
    for _ in range(k):
        acc = sf_add(acc, sf_pow(beta, n_exp))
        n_exp = n_exp * alpha
    return acc


def _rank_mod_q(rows: list[list[int]], q: int) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][col] % q != 0), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q != 0:
                f = rows[r][col]
                rows[r] = [(x - f * y) % q for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def verify_normal_basis(m: int, k: int, q: int) -> bool:
    """True iff the period of type (m, k) generates a normal basis of GF(q^m).

    Empirical check: build the splitting field of x^n - 1 (n = mk + 1),
    form gamma and its q-power orbit, and test linear independence by rank.
    Structural failures (n composite, no order-k unit, q | n) return False.
    Raises OracleUnavailable if the splitting field exceeds the size caps.
    """
    if m < 1 or k < 1 or not is_prime(q):
        return False
    n = m * k + 1
    if not is_prime(n) or math.gcd(q, n) != 1:
        return False
    if (n - 1) % k != 0:
        return False
    alpha = next(
        (a for a in range(1, n) if multiplicative_order(a, n) == k), None
    )
    if alpha is None:
        return False
    sf, beta = splitting_field(q, n)
    gamma = gauss_gamma(sf, beta, alpha, k)
    rows = []
    g = gamma
    for _ in range(m):
        rows.append(list(g.coeffs))
        g = sf_pow(g, q)
    return _rank_mod_q(rows, q) == m


def format_poly(coeffs) -> str:
    """Polynomial text format: coefficients low-degree-first, e.g.
    "1,1,0,1" for 1 + x + x^3."""
    return ",".join(str(c) for c in coeffs)


def parse_poly(text: str, q: int) -> tuple[int, ...]:
    coeffs = tuple(int(s.strip()) for s in text.split(","))
    for c in coeffs:
        if not 0 <= c < q:
            raise ValueError(f"coefficient {c} out of range [0, {q})")
    return coeffs


def subring_closure(generators) -> frozenset[CycloElement]:
    """Closure of a generating set under vector addition and convolution."""
    gens = list(generators)
    if not gens:
        return frozenset()
    field, n = gens[0].field, gens[0].n
    for g in gens:
        if g.field.p != field.p or g.n != n:
            raise DimensionMismatch("generators must share (p, n)")
    if field.p**n > 1 << 16:
        raise TooLarge(f"ring GF({field.p})^{n} has more than 2^16 elements")
    ctx = OpCount()  # scratch; closure cost is not part of any table
    closed: set[CycloElement] = set(gens)
    work = list(gens)
    while work:
        x = work.pop()
        for y in list(closed):
            for z in (cy_add(x, y, ctx), mul_direct(x, y, ctx)):
                if z not in closed:
                    closed.add(z)
                    work.append(z)
    return frozenset(closed)


def subring_identity(elements) -> CycloElement | None:
    """The multiplicative identity of a finite closed set, if it has one."""
    elems = list(elements)
    ctx = OpCount()
    for e in elems:
        if all(mul_direct(e, x, ctx) == x for x in elems):
            return e
    return None

"""Prime-field scalar arithmetic with explicit operation counting.

GF(p) coordinates are plain ints in [0, p).  Every counted operation takes
an OpCount context and bumps exactly one counter; the cost model is:

* ``add`` and ``mul`` each count 1,
* doubling is tracked in its own counter (and is free in GF(2), where
  2a = 0 identically),
* negation and multiplication by other small fixed constants are free.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_P = 1 << 16


def is_prime(x: int) -> bool:
    """Deterministic trial-division primality test (desk scale)."""
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    i = 3
    while i * i <= x:
        if x % i == 0:
            return False
        i += 2
    return True


class OpCount:
    """Tally of ground-field multiplications, doublings and additions.

    A context is single-owner: use one instance per counting session and
    never share it between concurrent activities.  Counters only go up.
    """

    __slots__ = ("mult", "doub", "add")

    def __init__(self, mult: int = 0, doub: int = 0, add: int = 0):
        self.mult = mult
        self.doub = doub
        self.add = add

    @property
    def total(self) -> int:
        return self.mult + self.doub + self.add

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.mult, self.doub, self.add)

    def __eq__(self, other) -> bool:
        if isinstance(other, OpCount):
            return self.as_tuple() == other.as_tuple()
        return NotImplemented

    def __repr__(self) -> str:
        return f"OpCount(mult={self.mult}, doub={self.doub}, add={self.add})"


@dataclass(frozen=True)
class GroundField:
    """The coefficient field GF(p), p prime."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")
        if self.p >= MAX_P:
            raise ValueError(f"p must be < 2**16, got {self.p}")

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.p:
            raise ValueError(f"{a!r} is not a coordinate of GF({self.p})")
        return a

    def add(self, a: int, b: int, ctx: OpCount) -> int:
        ctx.add += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int, ctx: OpCount) -> int:
        """a - b, costed as one addition (the sign flip is free)."""
        ctx.add += 1
        return (a - b) % self.p

    def mul(self, a: int, b: int, ctx: OpCount) -> int:
        ctx.mult += 1
        return (a * b) % self.p

    def double(self, a: int, ctx: OpCount) -> int:
        """2a.  In GF(2) this is identically zero and costs nothing."""
        if self.p == 2:
            return 0
        ctx.doub += 1
        return (2 * a) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

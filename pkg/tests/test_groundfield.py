import itertools

import pytest

from cyclomul.groundfield import GroundField, OpCount, is_prime


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
    for x in range(-3, 25):
        assert is_prime(x) == (x in primes)


def test_constructor_rejects_composite_and_oversize():
    with pytest.raises(ValueError):
        GroundField(4)
    with pytest.raises(ValueError):
        GroundField(1)
    with pytest.raises(ValueError):
        GroundField(1 << 16)
    GroundField((1 << 16) - 15)  # 65521 is prime


def test_add_examples():
    ctx = OpCount()
    assert GroundField(2).add(1, 1, ctx) == 0
    assert GroundField(3).add(2, 2, ctx) == 1
    assert GroundField(7).add(0, 5, ctx) == 5
    assert ctx.add == 3 and ctx.mult == 0 and ctx.doub == 0


def test_mul_examples():
    ctx = OpCount()
    assert GroundField(2).mul(1, 1, ctx) == 1
    assert GroundField(3).mul(2, 2, ctx) == 1
    assert GroundField(5).mul(0, 4, ctx) == 0
    assert ctx.mult == 3 and ctx.add == 0


def test_double_examples_and_gf2_freebie():
    ctx = OpCount()
    assert GroundField(2).double(1, ctx) == 0
    assert ctx.as_tuple() == (0, 0, 0)  # GF(2) doubling is free
    assert GroundField(3).double(2, ctx) == 1
    assert ctx.doub == 1
    assert GroundField(7).double(0, ctx) == 0
    assert ctx.doub == 2


def test_neg_examples_uncounted():
    assert GroundField(2).neg(1) == 1
    assert GroundField(3).neg(1) == 2
    assert GroundField(5).neg(0) == 0


def test_sub_counts_one_add():
    ctx = OpCount()
    assert GroundField(7).sub(2, 5, ctx) == 4
    assert ctx.as_tuple() == (0, 0, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_commutativity_exhaustive(p):
    gf = GroundField(p)
    ctx = OpCount()
    for a, b in itertools.product(range(p), repeat=2):
        assert gf.add(a, b, ctx) == gf.add(b, a, ctx)
        assert gf.mul(a, b, ctx) == gf.mul(b, a, ctx)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_double_equals_add_self_and_neg_cancels(p):
    gf = GroundField(p)
    ctx = OpCount()
    for a in range(p):
        assert gf.double(a, ctx) == gf.add(a, a, ctx)
        assert gf.add(a, gf.neg(a), ctx) == 0


def test_counter_exactness():
    gf = GroundField(5)
    ctx = OpCount()
    for _ in range(4):
        gf.add(1, 2, ctx)
    for _ in range(3):
        gf.mul(2, 3, ctx)
    for _ in range(2):
        gf.double(4, ctx)
    assert ctx.as_tuple() == (3, 2, 4)
    assert ctx.total == 9


def test_coordinate_validation():
    gf = GroundField(5)
    gf.check(4)
    with pytest.raises(ValueError):
        gf.check(5)
    with pytest.raises(ValueError):
        gf.check(-1)

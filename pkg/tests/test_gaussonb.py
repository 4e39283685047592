import itertools
import random

import pytest

from cyclomul import cyclocore as cc
from cyclomul import gaussonb as gb
from cyclomul import oracle as orc
from cyclomul.errors import (
    DimensionMismatch,
    NoSuchElement,
    NotFoldable,
    WrongBasisType,
)
from cyclomul.groundfield import GroundField, OpCount

GF2 = GroundField(2)


def params(m, k, q=2):
    return gb.GaussParams.create(m, k, q)


def nb(prm, *coords):
    return gb.NormalBasisElement(prm, tuple(coords))


def rand_nb(prm, rng):
    return gb.NormalBasisElement(
        prm, tuple(rng.randrange(prm.q) for _ in range(prm.m))
    )


def oracle_product(a, b):
    ctx = OpCount()
    return gb.extract(
        cc.mul_direct(gb.embed(a), gb.embed(b), ctx), a.params, ctx
    )


# --- parameters ---


def test_find_alpha_examples():
    assert gb.find_alpha(5, 1) == 1
    assert gb.find_alpha(7, 2) == 6
    assert gb.find_alpha(11, 2) == 10
    with pytest.raises(NoSuchElement):
        gb.find_alpha(8, 3)  # 3 does not divide 7


def test_params_create_validates():
    p41 = params(4, 1)
    assert (p41.n, p41.alpha, p41.q) == (5, 1, 2)
    p32 = params(3, 2)
    assert (p32.n, p32.alpha) == (7, 6)
    with pytest.raises(WrongBasisType):
        params(3, 1)  # n = 4 composite
    with pytest.raises(WrongBasisType):
        params(6, 1)  # rank-deficient orbit
    with pytest.raises(WrongBasisType):
        params(8, 2)  # n = 17 carries no type-II basis
    with pytest.raises(WrongBasisType):
        params(4, 3)  # only k in {1, 2}


def test_normal_basis_element_validation():
    prm = params(4, 1)
    with pytest.raises(ValueError):
        nb(prm, 1, 0, 0)  # wrong length
    with pytest.raises(ValueError):
        nb(prm, 1, 0, 0, 2)  # out of range


# --- folding and maps ---


def test_s_fold_examples():
    assert gb.s_fold(4, 3) == 3
    assert gb.s_fold(0, 3) == 0
    assert gb.s_fold(6, 3) == 1
    assert gb.s_fold(9, 3) == 2  # reduced mod 7 first


def test_s_fold_mirror_identity():
    for m in (2, 3, 5, 6):
        for i in range(1, 2 * m + 1):
            assert gb.s_fold(i, m) == gb.s_fold(2 * m + 1 - i, m)


def test_embed_onb1():
    prm = params(4, 1)
    assert gb.embed_onb1(nb(prm, 1, 0, 0, 0)).coords == (0, 1, 0, 0, 0)
    assert gb.embed_onb1(nb(prm, 0, 0, 0, 0)).coords == (0, 0, 0, 0, 0)
    with pytest.raises(WrongBasisType):
        gb.embed_onb1(nb(params(3, 2), 1, 0, 0))


def test_extract_onb1():
    prm = params(4, 1)
    ctx = OpCount()
    c = cc.CycloElement(GF2, (1, 1, 0, 1, 0))
    assert gb.extract_onb1(c, prm, ctx).coords == (0, 1, 0, 1)
    assert ctx.add == 4  # c0 nonzero: m additions
    ctx2 = OpCount()
    c2 = cc.CycloElement(GF2, (0, 1, 0, 1, 1))
    assert gb.extract_onb1(c2, prm, ctx2).coords == (1, 0, 1, 1)
    assert ctx2.add == 0  # c0 = 0: free


def test_extract_onb1_p3():
    prm = params(4, 1, 3)
    ctx = OpCount()
    c = cc.CycloElement(GroundField(3), (1, 2, 0, 0, 1))
    assert gb.extract_onb1(c, prm, ctx).coords == (1, 2, 2, 0)


def test_params_reject_n_equal_q():
    # m=2, k=1 over GF(3) gives n = 3 = q: x^n - 1 is inseparable, so the
    # redundant embedding does not exist.
    with pytest.raises(WrongBasisType):
        params(2, 1, 3)


def test_embed_onb2():
    prm = params(3, 2)
    assert gb.embed_onb2(nb(prm, 1, 0, 0)).coords == (0, 1, 0, 0, 0, 0, 1)
    assert gb.embed_onb2(nb(prm, 1, 2 % 2, 1)).coords == (0, 1, 0, 1, 1, 0, 1)
    with pytest.raises(WrongBasisType):
        gb.embed_onb2(nb(params(4, 1), 1, 0, 0, 0))


def test_extract_onb2():
    prm = params(3, 2)
    ctx = OpCount()
    c = cc.CycloElement(GF2, (0, 1, 0, 0, 0, 0, 1))
    assert gb.extract_onb2(c, prm, ctx).coords == (1, 0, 0)
    # Adding the all-ones redundancy vector must not change the result.
    c_shift = cc.CycloElement(GF2, (1, 0, 1, 1, 1, 1, 0))
    assert gb.extract_onb2(c_shift, prm, ctx).coords == (1, 0, 0)
    with pytest.raises(NotFoldable):
        gb.extract_onb2(cc.CycloElement(GF2, (0, 1, 0, 0, 1, 0, 1)), prm, ctx)


@pytest.mark.parametrize("m,k,q", [(2, 1, 2), (4, 1, 2), (3, 2, 2), (4, 1, 3), (2, 2, 3)])
def test_round_trip_exhaustive(m, k, q):
    prm = params(m, k, q)
    ctx = OpCount()
    for coords in itertools.product(range(q), repeat=m):
        a = nb(prm, *coords)
        assert gb.extract(gb.embed(a), prm, ctx) == a


def test_redundancy_insensitivity():
    rng = random.Random(53)
    ctx = OpCount()
    for m, k, q in [(4, 1, 2), (3, 2, 2), (4, 1, 3)]:
        prm = params(m, k, q)
        gf = prm.field
        for _ in range(20):
            a = rand_nb(prm, rng)
            c = gb.embed(a)
            for offset in range(1, q):
                shifted = cc.CycloElement(
                    gf, tuple((x + offset) % q for x in c.coords)
                )
                assert gb.extract(shifted, prm, ctx) == a


def test_embedded_products_are_palindromic():
    # Palindromes are fixed by beta -> 1/beta, so products of embedded
    # type-II elements fold back exactly; extract never raises here.
    rng = random.Random(59)
    ctx = OpCount()
    for q in (2, 3):
        prm = params(2 if q == 3 else 3, 2, q)
        n = prm.n
        for _ in range(100):
            c = cc.mul_direct(
                gb.embed(rand_nb(prm, rng)), gb.embed(rand_nb(prm, rng)), ctx
            )
            assert all(c.coords[i] == c.coords[n - i] for i in range(1, prm.m + 1))


# --- multipliers ---


def test_mul_onb1_basis_square():
    prm = params(4, 1)
    ctx = OpCount()
    beta = nb(prm, 1, 0, 0, 0)
    for variant in gb.ONB1_VARIANTS:
        assert gb.mul_onb1(beta, beta, variant, ctx).coords == (0, 1, 0, 0)


def test_mul_onb2_basis_square():
    prm = params(3, 2)
    ctx = OpCount()
    gamma = nb(prm, 1, 0, 0)
    want = oracle_product(gamma, gamma)
    for variant in gb.ONB2_VARIANTS:
        assert gb.mul_onb2(gamma, gamma, variant, ctx) == want


def test_mul_onb_wrong_type_and_mismatch():
    ctx = OpCount()
    a1 = nb(params(4, 1), 1, 0, 0, 0)
    a2 = nb(params(3, 2), 1, 0, 0)
    with pytest.raises(WrongBasisType):
        gb.mul_onb1(a2, a2, "pairprod", ctx)
    with pytest.raises(WrongBasisType):
        gb.mul_onb2(a1, a1, "pairprod", ctx)
    with pytest.raises(DimensionMismatch):
        gb.mul_onb1(a1, nb(params(2, 1), 1, 0), "pairprod", ctx)
    with pytest.raises(ValueError):
        gb.mul_onb1(a1, a1, "schoolbook", ctx)


@pytest.mark.parametrize("m,k", [(2, 1), (4, 1), (3, 2)])
def test_mul_onb_exhaustive_gf2(m, k):
    prm = params(m, k)
    ctx = OpCount()
    variants = gb.ONB1_VARIANTS if k == 1 else gb.ONB2_VARIANTS
    mul = gb.mul_onb1 if k == 1 else gb.mul_onb2
    for ac in itertools.product(range(2), repeat=m):
        for bc in itertools.product(range(2), repeat=m):
            a, b = nb(prm, *ac), nb(prm, *bc)
            want = oracle_product(a, b)
            for variant in variants:
                assert mul(a, b, variant, ctx) == want


@pytest.mark.parametrize("m,k,q", [(5, 2, 2), (6, 2, 2), (4, 1, 3), (2, 2, 3)])
def test_mul_onb_random(m, k, q):
    # q = 3 cases confirm the doubled/quadrupled broadcast corrections of
    # the folded formulas beyond characteristic 2.
    prm = params(m, k, q)
    rng = random.Random(m * 100 + k * 10 + q)
    ctx = OpCount()
    variants = gb.ONB1_VARIANTS if k == 1 else gb.ONB2_VARIANTS
    mul = gb.mul_onb1 if k == 1 else gb.mul_onb2
    for _ in range(150):
        a, b = rand_nb(prm, rng), rand_nb(prm, rng)
        want = oracle_product(a, b)
        for variant in variants:
            assert mul(a, b, variant, ctx) == want


def test_mul_onb_commutativity():
    rng = random.Random(61)
    ctx = OpCount()
    for m, k in [(4, 1), (3, 2)]:
        prm = params(m, k)
        mul = gb.mul_onb1 if k == 1 else gb.mul_onb2
        variants = gb.ONB1_VARIANTS if k == 1 else gb.ONB2_VARIANTS
        for _ in range(30):
            a, b = rand_nb(prm, rng), rand_nb(prm, rng)
            for variant in variants:
                assert mul(a, b, variant, ctx) == mul(b, a, variant, ctx)


# --- operation counts (GF(2)) ---


ONB1_COUNTS = {
    "pairprod": lambda m: (m * m, 0, m * m - 1),
    "pairsum": lambda m: ((m * m + m) // 2, 0, (3 * m * m - m) // 2 - 1),
}
ONB2_COUNTS = {
    "redundant": lambda m: (m * m, 0, 3 * m * m - m),
    "pairprod": lambda m: (m * m, 0, (3 * m * m - 3 * m) // 2),
    "pairsum": lambda m: ((m * m + m) // 2, 0, 2 * m * m - 2 * m),
}


@pytest.mark.parametrize("m", [2, 4])
def test_onb1_counts_gf2(m):
    prm = params(m, 1)
    rng = random.Random(m)
    for variant, formula in ONB1_COUNTS.items():
        for _ in range(3):
            ctx = OpCount()
            gb.mul_onb1(rand_nb(prm, rng), rand_nb(prm, rng), variant, ctx)
            assert ctx.as_tuple() == formula(m), (variant, m, ctx)


@pytest.mark.parametrize("m", [2, 3, 5, 6])
def test_onb2_counts_gf2(m):
    prm = params(m, 2)
    rng = random.Random(m)
    for variant, formula in ONB2_COUNTS.items():
        for _ in range(3):
            ctx = OpCount()
            gb.mul_onb2(rand_nb(prm, rng), rand_nb(prm, rng), variant, ctx)
            assert ctx.as_tuple() == formula(m), (variant, m, ctx)


def test_onb1_pairsum_count_example_m4():
    prm = params(4, 1)
    ctx = OpCount()
    gb.mul_onb1(nb(prm, 1, 0, 1, 1), nb(prm, 0, 1, 1, 0), "pairsum", ctx)
    assert ctx.as_tuple() == (10, 0, 21)


def test_onb2_pairprod_count_example_m3():
    prm = params(3, 2)
    ctx = OpCount()
    gb.mul_onb2(nb(prm, 1, 1, 0), nb(prm, 0, 1, 1), "pairprod", ctx)
    assert ctx.as_tuple() == (9, 0, 9)


# --- data-flow schedule ---


def test_onb2_pair_schedule_m3():
    rows = gb.onb2_pair_schedule(3)
    assert rows[0] == [(2, 0), (3, 1), (3, 2)]
    assert rows[1] == [(3, 1), (3, 0), (2, 1)]
    assert rows[2] == [(3, 2), (2, 1), (1, 0)]


def test_onb2_pair_schedule_each_pair_twice():
    # Every unordered nonzero pair is consumed by exactly two (lane, cycle)
    # slots: the sharing that halves the multiplication count.
    for m in (2, 3, 5, 6, 9, 11):
        seen = {}
        for row in gb.onb2_pair_schedule(m):
            for u, w in row:
                if 0 in (u, w):
                    continue
                key = (min(u, w), max(u, w))
                seen[key] = seen.get(key, 0) + 1
        assert set(seen.values()) == {2}
        assert len(seen) == m * (m - 1) // 2


# --- end-to-end homomorphism ---


@pytest.mark.parametrize("m,k", [(2, 1), (4, 1), (3, 2), (5, 2)])
def test_eval_homomorphism_through_multipliers(m, k):
    prm = params(m, k)
    sf, beta = orc.splitting_field(2, prm.n)
    rng = random.Random(67)
    ctx = OpCount()
    mul = gb.mul_onb1 if k == 1 else gb.mul_onb2
    variants = gb.ONB1_VARIANTS if k == 1 else gb.ONB2_VARIANTS
    for _ in range(50):
        a, b = rand_nb(prm, rng), rand_nb(prm, rng)
        want = orc.sf_mul(
            orc.eval_at_beta(gb.embed(a), beta),
            orc.eval_at_beta(gb.embed(b), beta),
        )
        for variant in variants:
            res = mul(a, b, variant, ctx)
            assert orc.eval_at_beta(gb.embed(res), beta) == want

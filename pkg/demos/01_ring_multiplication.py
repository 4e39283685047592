#!/usr/bin/env python3
"""Multiplying in the cyclotomic ring GF(p)[x]/(x^n - 1).

A ring element is just a coordinate vector (a_0, ..., a_{n-1}) standing for
a_0 + a_1*b + ... + a_{n-1}*b^{n-1} with b^n = 1.  This script multiplies the
same pair of vectors with every algorithm in the library and shows that they
agree coordinate for coordinate, while costing different numbers of
ground-field operations.
"""

from cyclomul import (
    CycloElement,
    GroundField,
    OpCount,
    RING,
    mul_alg1,
    mul_alg2,
    mul_direct,
    mul_general,
    sqrt_perm,
)

gf = GroundField(2)
a = CycloElement(gf, (1, 1, 0))  # 1 + b
b = CycloElement(gf, (1, 0, 1))  # 1 + b^2

print(f"a = {a.coords}, b = {b.coords} over GF(2), n = 3")
print()

# The reference: plain cyclic convolution, c_j = sum_i a_i * b_{j-i}.
ctx = OpCount()
prod = mul_direct(a, b, ctx)
print(f"direct convolution : {prod.coords}   cost {ctx.as_tuple()} (mult, doub, add)")

# The product-pair algorithm pairs the shifted coordinates a_{i+j} b_{i-j};
# lane i of its intermediate vector holds coordinate 2i mod n of the product,
# so a final free permutation de-interleaves it.  Same cost as direct.
ctx = OpCount()
d, prod1 = mul_alg1(a, b, ctx)
print(f"product pairs      : {prod1.coords}   cost {ctx.as_tuple()}")
print(f"  pre-permutation lanes d = {d.coords}; sqrt_perm(d) = {sqrt_perm(d).coords}")

# The sum-pair algorithm multiplies (a_{i+j}+a_{i-j}) by (b_{i+j}+b_{i-j}),
# roughly halving the multiplications.  For exact ring arithmetic it adds a
# broadcast correction x = -sum(a_j b_j) to every lane.
ctx = OpCount()
_, prod2 = mul_alg2(a, b, RING, ctx)
print(f"sum pairs (ring)   : {prod2.coords}   cost {ctx.as_tuple()}")

# Both shapes also exist without the odd-n restriction.
gf3 = GroundField(3)
ctx = OpCount()
x = CycloElement(gf3, (1, 1, 1, 0))
y = CycloElement(gf3, (2, 0, 1, 1))
exact = mul_direct(x, y, OpCount())
general = mul_general(x, y, "ring1", ctx)
print()
print(f"even n = 4 over GF(3): {x.coords} * {y.coords}")
print(f"  direct       : {exact.coords}")
print(f"  general ring1: {general.coords}   cost {ctx.as_tuple()}")
assert general == exact

# In characteristic 2 squaring is a coordinate permutation, which makes the
# pre-permutation vector d a genuine square root of the product.
ctx = OpCount()
d, prod = mul_alg1(a, b, ctx)
square = mul_direct(d, d, OpCount())
print()
print(f"char 2: d = {d.coords} squares to {square.coords} = a*b  ->  d = sqrt(a*b)")
assert square == prod

#!/usr/bin/env python3
"""The redundant representation of cyclotomic fields.

In the cyclotomic *field* the basis powers additionally satisfy
1 + b + b^2 + ... + b^{n-1} = 0, so adding a constant to every coordinate
does not change the element.  The field multipliers exploit this to drop the
broadcast correction and save operations; their output is then correct "up
to a constant vector".  An independent splitting-field oracle confirms both
facts numerically.
"""

from cyclomul import (
    CycloElement,
    FIELD,
    GroundField,
    OpCount,
    fields_equal,
    mul_alg2,
    mul_direct,
)
from cyclomul.oracle import eval_at_beta, sf_mul, splitting_field

gf = GroundField(2)
a = CycloElement(gf, (1, 1, 0))
b = CycloElement(gf, (1, 0, 1))

ring_exact = mul_direct(a, b, OpCount())
ctx = OpCount()
_, field_prod = mul_alg2(a, b, FIELD, ctx)

print(f"a * b exactly          : {ring_exact.coords}")
print(f"a * b, field variant   : {field_prod.coords}   cost {ctx.as_tuple()}")
diff = tuple((x - y) % 2 for x, y in zip(field_prod.coords, ring_exact.coords))
print(f"difference             : {diff}  (a constant vector)")
print(f"fields_equal           : {fields_equal(field_prod, ring_exact)}")
print()

# The oracle arena: the splitting field of x^3 - 1 over GF(2) is GF(4),
# where beta is a true cube root of unity.  Evaluation at beta is a ring
# homomorphism, and the constant-vector discrepancy evaluates to zero.
sf, beta = splitting_field(2, 3)
print(f"splitting field GF(2^{sf.d}), modulus coefficients {sf.modulus}")
ea, eb = eval_at_beta(a, beta), eval_at_beta(b, beta)
target = sf_mul(ea, eb)
print(f"eval(a) * eval(b)      : {target.coeffs}")
print(f"eval(exact product)    : {eval_at_beta(ring_exact, beta).coeffs}")
print(f"eval(field product)    : {eval_at_beta(field_prod, beta).coeffs}")
assert eval_at_beta(field_prod, beta) == target == eval_at_beta(ring_exact, beta)
print()

# The all-ones vector is literally zero in the field.
ones = CycloElement(gf, (1, 1, 1))
print(f"eval((1,1,1))          : {eval_at_beta(ones, beta).coeffs}  (the zero element)")

"""Finite fields on integer labels.

Elements of GF(p^m) are stored as integers whose base-p digits are the
polynomial coefficients, so GF(4) reads 0, 1, x, x+1 -> 0, 1, 2, 3.
"""
import numpy as np

from amecodes import get_field

f = get_field(4)
print(f)
for tup, poly, level in f.table_rows():
    print(f"{tup}  {poly:5}  {level}")

# x * x = x + 1
print("x*x =", f.format(f.mul(2, 2)))

# tables broadcast, so whole arrays can be multiplied at once
a = np.arange(4)
print(f.mul(a[:, None], a[None, :]))

# the primitive element generates every nonzero element
g9 = get_field(9)
print([g9.format(g9.pow(g9.primitive, i)) for i in range(8)])

# smallest primitive element instead of the tabulated one
print(get_field(5).primitive, get_field(5, paper_compat=False).primitive)

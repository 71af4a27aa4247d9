"""
Dirac operators in several quaternionic variables
=================================================

Fields are polynomial maps from H^k to C^2 with Gaussian rational
coefficients, so every identity below is checked exactly.
"""

# %%
import random

from kdirac.dirac4 import (
    PolySpinorField,
    conjugate_dirac_component,
    dirac_component,
    dirac_k,
    laplacian,
    linear_monogenics,
    monogenic_basis,
    spinor,
    target_dimension,
)

rng = random.Random(0)
f = PolySpinorField.random(2, 3, rng)
print(f.as_expr())

# %%
# conj(D_l) D_l is the Laplacian in the l-th block
for l in (1, 2):
    print(l, conjugate_dirac_component(dirac_component(f, l), l) == laplacian(f, l))

# %%
v = spinor(1, 0)
for g in linear_monogenics(2, 1, v):
    print(g.as_expr(), [h.is_zero() for h in dirac_k(g)])

# %%
print(len(monogenic_basis(2)), "degree 2 monogenics in one variable")
print([target_dimension(k) for k in range(1, 7)])

"""
The two hypergeometric functions
================================

``f_half`` has a closed trigonometric form; ``f_one`` is an average of
``f_half`` over a quarter turn, and sets the scale of every period below.
"""
import math

import numpy as np

from sig3 import f_half, f_one

# f_half(sin^2 z) cos z = cos(z/3): the defining evaluation
z = np.linspace(0.0, 1.5, 7)
for zi, lhs in zip(z, f_half(np.sin(z) ** 2) * np.cos(z)):
    print(f"z = {zi:4.2f}   f_half(sin^2 z) cos z = {lhs:.15f}   cos(z/3) = {math.cos(zi / 3):.15f}")

# f_one grows without bound (logarithmically) as x -> 1
print()
for x in (0.0, 0.25, 0.5, 0.9, 0.99, 0.9999):
    print(f"f_one({x:<6}) = {f_one(x):.15f}")

# near x = 1 the complement 1 - x carries the information; pass it when known
eps = 1e-14
print(f"\nf_one(1 - 1e-14) with exact complement = {f_one(1 - eps, complement=eps):.12f}")
print(f"logarithmic asymptote                   = "
      f"{math.sqrt(3) / (2 * math.pi) * (-math.log(eps) + 3 * math.log(3)):.12f}")

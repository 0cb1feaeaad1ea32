"""
Complex probabilities: cartesian, polar and products
=====================================================

Evidence values are complex numbers with modulus at most one.  This script
builds a few, shows their modulus and phase, and multiplies them.
"""

import math

from quantum_owa import from_cartesian, from_polar, modulus, angle, multiply
from quantum_owa.errors import ModulusExceedsOne

# %%
# Cartesian form.  The modulus is the ordinary complex absolute value.
p1 = from_cartesian(0.3, -0.7)
p4 = from_cartesian(0.6, 0.8)
print("p1 =", p1, " modulus", round(modulus(p1), 4), " angle", round(angle(p1), 4))
print("p4 =", p4, " modulus", round(modulus(p4), 4))

# %%
# Polar form with the angle in radians.  Rotating never changes the modulus.
for theta in (0.0, math.pi / 4, math.pi / 2, math.pi):
    q = from_polar(0.7, theta)
    print(f"theta={theta:.4f}  q={q}  |q|={modulus(q):.4f}")

# %%
# Products: moduli multiply, phases add.
prod = multiply(p4, from_cartesian(0.4, -0.9))
print("(0.6+0.8i)(0.4-0.9i) =", prod)
print("phase sum check:", round(angle(p4) + angle(from_cartesian(0.4, -0.9)), 6), round(angle(prod), 6))

# %%
# Values outside the unit disc are rejected.
try:
    from_cartesian(0.9, 0.9)
except ModulusExceedsOne as exc:
    print("rejected:", exc)

"""
Attitudinal OWA weights
=======================

The optimism parameter alpha controls where the weight mass sits.  Low
alpha favours the last ordered positions, high alpha the first.
"""

import numpy as np

from quantum_owa import MAX_LIMIT, MIN_LIMIT, attitudinal_weights, classical_owa, dispersion, orness

np.set_printoptions(precision=4, suppress=True)

for alpha in (0.2, 0.5, 0.8):
    w = attitudinal_weights(5, alpha)
    print(f"alpha={alpha}: {w.weights}  orness={orness(w):.4f}  dispersion={dispersion(w):.4f}")

# %%
# The endpoints are limit markers rather than numbers.
print("alpha -> 0:", attitudinal_weights(5, MIN_LIMIT).weights)
print("alpha -> 1:", attitudinal_weights(5, MAX_LIMIT).weights)

# %%
# Orness rises monotonically with alpha.
alphas = np.linspace(0.05, 0.95, 10)
print("alpha ", alphas)
print("orness", np.array([orness(attitudinal_weights(8, a)) for a in alphas]))

# %%
# Classical OWA: values are sorted descending before weighting.
values = [0.6, 0.4, 0.3, 0.5, 0.2]
for alpha in (0.2, 0.5, 0.8):
    print(f"OWA at alpha={alpha}: {classical_owa(values, attitudinal_weights(5, alpha)):.5f}")

"""
Sweeping the attitude parameter
===============================

The soft likelihood traces a curve in the complex plane as alpha moves
from pessimistic to optimistic.  The rows below are the data for a 3-D
plot of (re, im, alpha); write them to CSV with ``qowa sweep``.
"""

from pathlib import Path

import numpy as np

from quantum_owa import alpha_sweep, load_evidence

evidence = load_evidence(Path(__file__).resolve().parent.parent / "fixtures" / "suspect_a.json")
sweep = alpha_sweep(evidence, 0.05, 0.95, 0.05)

data = sweep.as_array()
print(" alpha      re        im     modulus")
for alpha, re, im, mod in data:
    print(f"{alpha:5.2f}  {re:8.4f}  {im:8.4f}  {mod:8.4f}")

# %%
# The imaginary part changes sign twice along the sweep.
crossings = np.nonzero(np.diff(np.sign(data[:, 2])))[0]
print("sign changes of im between alphas:", [(float(data[k, 0]), float(data[k + 1, 0])) for k in crossings])

# %%
# Uncomment to draw the curve.
# import matplotlib.pyplot as plt
# ax = plt.figure().add_subplot(projection="3d")
# ax.plot(data[:, 1], data[:, 2], data[:, 0], marker="o")
# ax.set_xlabel("re"); ax.set_ylabel("im"); ax.set_zlabel("alpha")
# plt.show()

"""
Quantum mass functions
======================

A mass function assigns complex amplitudes to subsets of a frame of
discernment.  It is normalized when the squared moduli sum to one.
"""

import math

from quantum_owa import FrameOfDiscernment, QuantumMassFunction, from_polar, validate_mass_function

frame = FrameOfDiscernment(["A", "B", "C"])
print("events:", frame.events, " power set size:", frame.power_set_size)

h = 1 / math.sqrt(3)
m = QuantumMassFunction(frame, {
    ("A",): from_polar(h, 0.0),
    ("B",): from_polar(h, math.pi / 3),
    ("A", "C"): from_polar(h, -math.pi / 2),
})
report = validate_mass_function(m)
print("valid:", report.valid, " sum of squared moduli:", report.total)

# %%
# Dropping one focal set leaves a deficit, which the report quantifies.
short = QuantumMassFunction(frame, {("A",): from_polar(0.9, 0.0)})
for v in validate_mass_function(short).violations:
    print(v, "| residual", round(v.residual, 6))

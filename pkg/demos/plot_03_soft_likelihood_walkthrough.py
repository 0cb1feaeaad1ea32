"""
Quantum soft likelihood, step by step
=====================================

Five sources report complex probabilities for one suspect.  We rank them by
modulus, form the running products, weight them and sum.
"""

from pathlib import Path

from quantum_owa import load_evidence, modulus, product_likelihood, quantum_soft_likelihood

evidence = load_evidence(Path(__file__).resolve().parent.parent / "fixtures" / "suspect_a.json")

for label, p in evidence:
    print(f"{label}: {p}   modulus {modulus(p):.4f}")

# %%
# One call returns the whole trace.
trace = quantum_soft_likelihood(evidence, 0.2)
print("\nranked:", ", ".join(trace.sorted.labels))
for k, p in enumerate(trace.cumulative_products, 1):
    print(f"Prod({k}) = {p}")
print("weights:", [round(w, 4) for w in trace.weights])
print("soft likelihood (alpha=0.2):", trace.result, f" |L|={trace.result_modulus:.4f}")

# %%
# Compare attitudes, and the strict product likelihood.
for alpha in (0.2, 0.5, 0.8):
    print(f"alpha={alpha}: {quantum_soft_likelihood(evidence, alpha).result}")
print("strict product:", product_likelihood(evidence))

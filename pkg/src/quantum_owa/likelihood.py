"""Product likelihood, quantum OWA and the quantum soft likelihood pipeline.

The soft likelihood of an evidence set is computed in three steps:

1. rank the probabilities by modulus, largest first, and form the running
   products ``Prod(1), ..., Prod(n)`` of the ranked values;
2. build attitudinal weights for ``n`` positions;
3. return ``sum(w_i * Prod(i))``.

With every angle at zero the whole computation is real and reduces to the
classical OWA soft likelihood.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import EvidenceSet, QuantumProbability, modulus
from .errors import EmptyEvidence, InvalidRange, ValueOutOfRange
from .weights import Attitude, WeightVector, attitudinal_weights, check_alpha


@dataclass(frozen=True)
class SortedEvidence:
    """Evidence in non-increasing modulus order.

    ``permutation[k]`` is the 0-based index in the original evidence set of
    the value at sorted position ``k``.
    """

    ordered: tuple[QuantumProbability, ...]
    labels: tuple[str, ...]
    permutation: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.ordered)

    @property
    def moduli(self) -> tuple[float, ...]:
        return tuple(modulus(p) for p in self.ordered)


@dataclass(frozen=True)
class LikelihoodTrace:
    """Every intermediate of one soft likelihood evaluation."""

    sorted: SortedEvidence
    cumulative_products: tuple[QuantumProbability, ...]
    weights: WeightVector
    result: QuantumProbability

    @property
    def result_modulus(self) -> float:
        return modulus(self.result)


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    likelihood: QuantumProbability

    @property
    def modulus(self) -> float:
        return modulus(self.likelihood)


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def alphas(self) -> np.ndarray:
        return np.array([r.alpha for r in self.rows])

    def as_array(self) -> np.ndarray:
        """``(k, 4)`` array of ``alpha, re, im, modulus``."""
        return np.array(
            [(r.alpha, r.likelihood.re, r.likelihood.im, r.modulus) for r in self.rows]
        ).reshape(-1, 4)


def _require(e: EvidenceSet) -> EvidenceSet:
    if e is None or len(e) == 0:
        raise EmptyEvidence("evidence set has no entries")
    return e


def sort_by_modulus(e: EvidenceSet) -> SortedEvidence:
    """Rank evidence by modulus, largest first; equal moduli keep input order."""
    _require(e)
    probs = e.probabilities
    mods = np.array([modulus(p) for p in probs])
    order = np.argsort(-mods, kind="stable")
    return SortedEvidence(
        ordered=tuple(probs[k] for k in order),
        labels=tuple(e.labels[k] for k in order),
        permutation=tuple(int(k) for k in order),
    )


def cumulative_products(s: SortedEvidence) -> tuple[QuantumProbability, ...]:
    """Running complex products of the ranked probabilities."""
    if len(s) == 0:
        raise EmptyEvidence("no sorted evidence")
    values = np.array([p.value for p in s.ordered], dtype=complex)
    return tuple(QuantumProbability._unchecked(z) for z in np.cumprod(values))


def product_likelihood(e: EvidenceSet) -> QuantumProbability:
    """The strict likelihood: product of every probability.

    Multiplied in ranked order so the value is bit-identical to the last
    running product of the soft pipeline.
    """
    return cumulative_products(sort_by_modulus(_require(e)))[-1]


def _weighted_sum(w: WeightVector, values: Sequence[QuantumProbability]) -> QuantumProbability:
    z = np.dot(w.weights, np.array([p.value for p in values], dtype=complex))
    return QuantumProbability._unchecked(complex(z))


def quantum_soft_likelihood(e: EvidenceSet, alpha: Attitude) -> LikelihoodTrace:
    """OWA-weighted sum of the running products of modulus-ranked evidence."""
    alpha = check_alpha(alpha)
    s = sort_by_modulus(e)
    prods = cumulative_products(s)
    w = attitudinal_weights(len(s), alpha)
    return LikelihoodTrace(s, prods, w, _weighted_sum(w, prods))


def quantum_owa_direct(e: EvidenceSet, alpha: Attitude) -> QuantumProbability:
    """OWA-weighted sum of the ranked probabilities themselves (no products)."""
    alpha = check_alpha(alpha)
    s = sort_by_modulus(e)
    return _weighted_sum(attitudinal_weights(len(s), alpha), s.ordered)


def classical_soft_likelihood(values: Sequence[float], alpha: Attitude) -> float:
    """Soft likelihood of real probabilities in ``[0, 1]``.

    Evaluated in real arithmetic; it coincides with the real part of
    :func:`quantum_soft_likelihood` on zero-angle evidence.
    """
    alpha = check_alpha(alpha)
    x = np.asarray(values, dtype=float).ravel()
    if x.size == 0:
        raise EmptyEvidence("no values")
    if not np.all((x >= 0.0) & (x <= 1.0)):
        raise ValueOutOfRange(f"values must lie in [0, 1], got {x.tolist()}")
    ranked = x[np.argsort(-x, kind="stable")]
    w = attitudinal_weights(x.size, alpha)
    return float(np.dot(w.weights, np.cumprod(ranked)))


def alpha_grid(start: float, end: float, step: float) -> np.ndarray:
    """``start, start + step, ...`` up to ``end`` inclusive, as integer multiples of ``step``."""
    for name, v in (("start", start), ("end", end), ("step", step)):
        if not math.isfinite(v):
            raise InvalidRange(f"{name} must be finite, got {v!r}")
    if not (0.0 < start <= end < 1.0):
        raise InvalidRange(f"need 0 < start <= end < 1, got start={start!r}, end={end!r}")
    if step < 1e-9:
        raise InvalidRange(f"step must be at least 1e-9, got {step!r}")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    # rounding hides the 0.30000000000000004 artefacts of start + k * step
    grid = np.round(start + step * np.arange(count), 12)
    grid = grid[(grid > 0.0) & (grid < 1.0)]
    return grid


def alpha_sweep(e: EvidenceSet, start: float, end: float, step: float) -> SweepResult:
    """Soft likelihood at every alpha of :func:`alpha_grid`."""
    grid = alpha_grid(start, end, step)
    _require(e)
    rows = tuple(SweepRow(float(a), quantum_soft_likelihood(e, float(a)).result) for a in grid)
    return SweepResult(rows)


__all__ = [
    "SortedEvidence",
    "LikelihoodTrace",
    "SweepRow",
    "SweepResult",
    "sort_by_modulus",
    "cumulative_products",
    "product_likelihood",
    "quantum_soft_likelihood",
    "quantum_owa_direct",
    "classical_soft_likelihood",
    "alpha_grid",
    "alpha_sweep",
]

"""Attitudinal OWA weights and the classical OWA operator.

Weights come from the optimism parameter ``alpha`` in ``(0, 1)``::

    w_i = (i/n)**r - ((i-1)/n)**r,    r = (1 - alpha) / alpha

Small ``alpha`` pushes mass onto the last (smallest) ordered positions,
large ``alpha`` onto the first.  The endpoints 0 and 1 make ``r`` singular,
so they are reachable only through :data:`MIN_LIMIT` and :data:`MAX_LIMIT`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real
from typing import Sequence, Union

import numpy as np

from .errors import DegenerateLength, InvalidAlpha, InvalidLength, LengthMismatch


class AttitudeLimit(enum.Enum):
    """Limit markers for ``alpha -> 0+`` and ``alpha -> 1-``."""

    MIN = "min"
    MAX = "max"

    def __repr__(self) -> str:
        return f"{type(self).__name__}.{self.name}"


MIN_LIMIT = AttitudeLimit.MIN
MAX_LIMIT = AttitudeLimit.MAX

Attitude = Union[float, AttitudeLimit]


def check_alpha(alpha: Attitude) -> Attitude:
    """Return ``alpha`` unchanged if usable, else raise :class:`InvalidAlpha`."""
    if isinstance(alpha, AttitudeLimit):
        return alpha
    if isinstance(alpha, bool) or not isinstance(alpha, Real):
        raise InvalidAlpha(f"alpha must be a real number or limit marker, got {alpha!r}")
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise InvalidAlpha(
            f"alpha must lie strictly inside (0, 1), got {alpha!r}; "
            "use MIN_LIMIT or MAX_LIMIT for the endpoints"
        )
    return alpha


@dataclass(frozen=True)
class WeightVector:
    """Non-negative weights summing to one, with the ``alpha`` they came from.

    ``weights`` is a read-only float array.
    """

    weights: np.ndarray
    alpha: Attitude | None = None

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise InvalidLength("weights must be a non-empty 1-D sequence")
        if np.any(w < 0) or not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite and non-negative")
        if abs(math.fsum(w) - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {math.fsum(w)!r}, not 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.size

    def __len__(self) -> int:
        return self.weights.size

    def __iter__(self):
        return iter(self.weights.tolist())

    def __getitem__(self, i):
        return self.weights[i]

    def __array__(self, dtype=None, copy=None):
        return self.weights if dtype is None else self.weights.astype(dtype)


def attitudinal_weights(n: int, alpha: Attitude) -> WeightVector:
    """Weights for ``n`` ordered positions at optimism ``alpha``.

    >>> attitudinal_weights(5, 0.2).weights.round(4).tolist()
    [0.0016, 0.024, 0.104, 0.28, 0.5904]
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidLength(f"n must be a positive integer, got {n!r}")
    n = int(n)
    alpha = check_alpha(alpha)
    if alpha is MIN_LIMIT:
        w = np.zeros(n)
        w[-1] = 1.0
    elif alpha is MAX_LIMIT:
        w = np.zeros(n)
        w[0] = 1.0
    else:
        r = (1.0 - alpha) / alpha
        if r == 1.0:
            # (i/n) - ((i-1)/n) is not exactly 1/n in floating point
            w = np.full(n, 1.0 / n)
        else:
            cum = (np.arange(n + 1) / n) ** r
            w = np.diff(cum)
    return WeightVector(w, alpha)


def _as_weights(weights) -> np.ndarray:
    if isinstance(weights, WeightVector):
        return weights.weights
    return WeightVector(weights).weights


def classical_owa(values: Sequence[float], weights) -> float:
    """Ordered weighted average: sort ``values`` descending, dot with ``weights``.

    Ties keep their input order, which only matters for the trace, not the value.
    """
    w = _as_weights(weights)
    x = np.asarray(values, dtype=float)
    if x.shape != w.shape:
        raise LengthMismatch(f"{x.size} values but {w.size} weights")
    order = np.argsort(-x, kind="stable")
    return float(np.dot(w, x[order]))


def orness(weights) -> float:
    """Degree of or-likeness, ``sum((n - i) / (n - 1) * w_i)``; 1 is max, 0 is min."""
    w = _as_weights(weights)
    n = w.size
    if n < 2:
        raise DegenerateLength("orness is undefined for fewer than two weights")
    coeff = (n - np.arange(1, n + 1)) / (n - 1)
    return float(np.dot(coeff, w))


def dispersion(weights) -> float:
    """Shannon entropy of the weights, with ``0 * ln 0`` taken as 0."""
    w = _as_weights(weights)
    nz = w[w > 0]
    return float(-np.sum(nz * np.log(nz))) + 0.0

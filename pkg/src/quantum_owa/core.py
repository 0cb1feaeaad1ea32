"""Complex-valued probabilities, frames of discernment and quantum mass functions.

A quantum probability is a complex amplitude ``a * exp(i * theta)``.  Its
modulus ``a`` plays the role of the classical probability magnitude and is
what evidence is ranked by.  Two readings of "size" coexist here:

* :func:`modulus` returns ``a`` (the ordinary complex modulus).  All
  likelihood arithmetic uses this.
* Mass-function normalization sums the *squared* moduli ``a**2`` over the
  assigned subsets, so that a mass function behaves like a set of Born-rule
  amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLabel,
    EmptyEvidence,
    InvalidProbability,
    ModulusExceedsOne,
    NegativeAmplitude,
)

#: Absolute slack on the unit-modulus bound, absorbs polar round-off.
MODULUS_TOL = 1e-12

#: Tolerance on the squared-modulus normalization of a mass function.
NORMALIZATION_TOL = 1e-9


@dataclass(frozen=True)
class QuantumProbability:
    """A complex probability ``re + i*im`` with modulus at most 1.

    Build one with :func:`from_cartesian` or :func:`from_polar`; direct
    construction performs the same checks.
    """

    re: float
    im: float

    def __post_init__(self):
        re, im = float(self.re), float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise InvalidProbability(f"non-finite components ({re!r}, {im!r})")
        a = math.hypot(re, im)
        if a > 1.0 + MODULUS_TOL:
            raise ModulusExceedsOne(
                f"modulus {a:.6g} of {re!r}{im:+}i exceeds 1", modulus=a
            )
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def _unchecked(cls, value: complex) -> "QuantumProbability":
        # Products and convex combinations of valid values are bounded by
        # construction; skip re-validation so round-off cannot trip the bound.
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", float(value.real))
        object.__setattr__(obj, "im", float(value.imag))
        return obj

    @property
    def amplitude(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def angle(self) -> float:
        """Phase in radians, in ``(-pi, pi]``."""
        return math.atan2(self.im, self.re)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __mul__(self, other):
        if isinstance(other, QuantumProbability):
            return multiply(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return format_complex(self.re, self.im)


def format_complex(re: float, im: float, digits: int = 4) -> str:
    """Render ``re + im i`` with a fixed number of decimals, e.g. ``0.4409 - 0.0817i``."""
    re_s = f"{re + 0.0:.{digits}f}"
    sign = "-" if math.copysign(1.0, im) < 0 and round(im, digits) != 0 else "+"
    return f"{re_s} {sign} {abs(im):.{digits}f}i"


def from_cartesian(re: float, im: float) -> QuantumProbability:
    return QuantumProbability(re, im)


def from_polar(a: float, theta: float) -> QuantumProbability:
    """Build ``a * exp(i * theta)`` from amplitude and angle in radians."""
    if not (math.isfinite(a) and math.isfinite(theta)):
        raise InvalidProbability(f"non-finite polar form ({a!r}, {theta!r})")
    if a < 0:
        raise NegativeAmplitude(f"amplitude {a!r} is negative")
    if a > 1.0 + MODULUS_TOL:
        raise ModulusExceedsOne(f"amplitude {a!r} exceeds 1", modulus=a)
    return QuantumProbability._unchecked(complex(a * math.cos(theta), a * math.sin(theta)))


def modulus(p: QuantumProbability) -> float:
    return math.hypot(p.re, p.im)


def angle(p: QuantumProbability) -> float:
    return math.atan2(p.im, p.re)


def multiply(p: QuantumProbability, q: QuantumProbability) -> QuantumProbability:
    """Complex product; moduli multiply so the result stays unit-bounded."""
    return QuantumProbability._unchecked(p.value * q.value)


# -- frames and mass functions ------------------------------------------------


@dataclass(frozen=True)
class FrameOfDiscernment:
    """An ordered set of mutually exclusive, exhaustive event labels."""

    events: tuple

    def __init__(self, events: Iterable[Hashable]):
        events = tuple(events)
        if not events:
            raise ValueError("a frame of discernment needs at least one event")
        if len(set(events)) != len(events):
            raise DuplicateLabel(f"repeated event labels in {events!r}")
        object.__setattr__(self, "events", events)

    def __len__(self) -> int:
        return len(self.events)

    def __contains__(self, event) -> bool:
        return event in self.events

    @property
    def power_set_size(self) -> int:
        return 2 ** len(self.events)

    def iter_subsets(self) -> Iterator[frozenset]:
        """Lazily yield all ``2**n`` subsets, smallest first."""
        ev = self.events
        return (
            frozenset(c)
            for c in chain.from_iterable(combinations(ev, k) for k in range(len(ev) + 1))
        )


@dataclass(frozen=True)
class QuantumMassFunction:
    """Sparse assignment of quantum probabilities to subsets of a frame.

    Only assigned subsets are stored.  Construction never checks the
    normalization; call :func:`validate_mass_function` for that.
    """

    frame: FrameOfDiscernment
    assignments: Mapping[frozenset, QuantumProbability]

    def __init__(self, frame, assignments):
        if not isinstance(frame, FrameOfDiscernment):
            frame = FrameOfDiscernment(frame)
        if isinstance(assignments, Mapping):
            assignments = assignments.items()
        merged: dict[frozenset, QuantumProbability] = {}
        for subset, p in assignments:
            key = frozenset(subset)
            if key in merged:
                raise DuplicateLabel(f"subset {sorted(key, key=str)} assigned twice")
            merged[key] = p
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "assignments", merged)

    def __getitem__(self, subset) -> QuantumProbability:
        return self.assignments.get(frozenset(subset), QuantumProbability(0.0, 0.0))

    def total_squared_modulus(self) -> float:
        return math.fsum(modulus(p) ** 2 for p in self.assignments.values())


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    residual: float | None = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    total: float | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def validate_mass_function(m: QuantumMassFunction) -> ValidationReport:
    """Check the empty-set and normalization constraints of a mass function.

    Never raises on finite input; every problem found becomes a
    :class:`Violation` in the returned report.
    """
    found = []
    for subset, p in m.assignments.items():
        if not subset and modulus(p) > 0:
            found.append(Violation("empty-set-mass", f"m(empty set) = {p}, must be 0", modulus(p)))
        unknown = [e for e in subset if e not in m.frame]
        if unknown:
            found.append(
                Violation("unknown-event", f"subset mentions {unknown!r} outside the frame")
            )
    if not m.assignments:
        found.append(Violation("empty", "no subsets are assigned", 1.0))
        return ValidationReport(tuple(found), 0.0)
    total = m.total_squared_modulus()
    residual = total - 1.0
    if abs(residual) > NORMALIZATION_TOL:
        kind = "normalization-deficit" if residual < 0 else "normalization-excess"
        found.append(
            Violation(
                kind,
                f"squared moduli sum to {total:.12g}, residual {abs(residual):.12g}",
                abs(residual),
            )
        )
    return ValidationReport(tuple(found), total)


# -- evidence -----------------------------------------------------------------


@dataclass(frozen=True)
class EvidenceSet:
    """Ordered, labelled quantum probabilities from independent sources."""

    entries: tuple[tuple[str, QuantumProbability], ...]

    def __init__(self, entries: Iterable[tuple[str, QuantumProbability]]):
        entries = tuple((str(label), p) for label, p in entries)
        if not entries:
            raise EmptyEvidence("evidence set has no entries")
        seen = set()
        for label, p in entries:
            if not isinstance(p, QuantumProbability):
                raise TypeError(f"entry {label!r} is not a QuantumProbability")
            if label in seen:
                raise DuplicateLabel(f"duplicate source label {label!r}")
            seen.add(label)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_values(
        cls, values: Sequence[complex | float], labels: Sequence[str] | None = None
    ) -> "EvidenceSet":
        """Wrap plain numbers; labels default to ``p1 .. pn``."""
        if labels is None:
            labels = [f"p{k}" for k in range(1, len(values) + 1)]
        if len(labels) != len(values):
            raise ValueError("labels and values differ in length")
        return cls(
            (lab, from_cartesian(complex(v).real, complex(v).imag))
            for lab, v in zip(labels, values)
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def probabilities(self) -> tuple[QuantumProbability, ...]:
        return tuple(p for _, p in self.entries)

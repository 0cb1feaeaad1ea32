"""Reading and writing evidence and mass-function documents.

Evidence documents are JSON objects with a ``sources`` list.  Each record
carries a ``label`` and exactly one of two number pairs::

    {"sources": [
        {"label": "p1", "re": 0.3, "im": -0.7},
        {"label": "p2", "amplitude": 0.9849, "angle_rad": -1.1526}
    ]}

Mass-function documents name the frame and list assigned subsets::

    {"frame": ["A", "B"],
     "masses": [{"subset": ["A"], "re": 0.7071067811865476, "im": 0.0}, ...]}

Angles are radians only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from numbers import Real
from pathlib import Path
from typing import Any

from .core import (
    EvidenceSet,
    QuantumMassFunction,
    QuantumProbability,
    from_cartesian,
    from_polar,
)
from .errors import DuplicateLabel, EmptyEvidence, ModulusExceedsOne, ParseError

CARTESIAN = ("re", "im")
POLAR = ("amplitude", "angle_rad")


@dataclass(frozen=True)
class RawRecord:
    """A structurally valid record whose numbers have not been range-checked."""

    label: str
    re: float
    im: float
    location: str
    amplitude: float | None = None  # set only for polar records
    angle: float | None = None

    @property
    def modulus(self) -> float:
        if self.amplitude is not None:
            return self.amplitude
        return math.hypot(self.re, self.im)

    def to_probability(self) -> QuantumProbability:
        try:
            if self.amplitude is not None:
                return from_polar(self.amplitude, self.angle)
            return from_cartesian(self.re, self.im)
        except ModulusExceedsOne as exc:
            raise ModulusExceedsOne(
                f"source {self.label!r} ({self.location}): modulus {self.modulus:.6g} exceeds 1",
                label=self.label,
                modulus=self.modulus,
            ) from exc


def read_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_json(text)


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc


def _number(record: dict, key: str, where: str) -> float:
    v = record[key]
    if isinstance(v, bool) or not isinstance(v, Real):
        raise ParseError(f"expected a number, got {v!r}", f"{where}.{key}")
    v = float(v)
    if not math.isfinite(v):
        raise ParseError(f"non-finite number {v!r}", f"{where}.{key}")
    return v


def _numbers(record: Any, where: str, extra: tuple[str, ...]) -> tuple:
    """Return ``(re, im, amplitude, angle)``; the last two are None for cartesian records."""
    if not isinstance(record, dict):
        raise ParseError("record must be an object", where)
    keys = set(record)
    allowed = set(CARTESIAN) | set(POLAR) | set(extra)
    unknown = keys - allowed
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", where)
    has_cart = keys & set(CARTESIAN)
    has_polar = keys & set(POLAR)
    if has_cart and has_polar:
        raise ParseError("give either re/im or amplitude/angle_rad, not both", where)
    if has_cart:
        if has_cart != set(CARTESIAN):
            missing = (set(CARTESIAN) - has_cart).pop()
            raise ParseError("missing field", f"{where}.{missing}")
        return _number(record, "re", where), _number(record, "im", where), None, None
    if has_polar:
        if has_polar != set(POLAR):
            missing = (set(POLAR) - has_polar).pop()
            raise ParseError("missing field", f"{where}.{missing}")
        a = _number(record, "amplitude", where)
        theta = _number(record, "angle_rad", where)
        return a * math.cos(theta), a * math.sin(theta), a, theta
    raise ParseError("record needs re/im or amplitude/angle_rad", where)


def parse_evidence_records(doc: Any) -> list[RawRecord]:
    """Structural parse of an evidence document; no range checks yet."""
    if not isinstance(doc, dict) or "sources" not in doc:
        raise ParseError("top level must be an object with a 'sources' list", "document")
    unknown = set(doc) - {"sources"}
    if unknown:
        raise ParseError(f"unknown top-level field(s) {sorted(unknown)}", "document")
    sources = doc["sources"]
    if not isinstance(sources, list):
        raise ParseError("'sources' must be a list", "sources")
    records = []
    for k, rec in enumerate(sources):
        where = f"sources[{k}]"
        if not isinstance(rec, dict):
            raise ParseError("record must be an object", where)
        label = rec.get("label")
        if not isinstance(label, str) or not label:
            raise ParseError("missing or non-string label", f"{where}.label")
        re, im, a, theta = _numbers(rec, where, extra=("label",))
        records.append(RawRecord(label, re, im, where, a, theta))
    return records


def evidence_from_records(records: list[RawRecord]) -> EvidenceSet:
    if not records:
        raise EmptyEvidence("evidence document has no sources")
    seen = set()
    for r in records:
        if r.label in seen:
            raise DuplicateLabel(f"duplicate source label {r.label!r} ({r.location})")
        seen.add(r.label)
    return EvidenceSet((r.label, r.to_probability()) for r in records)


def load_evidence(path) -> EvidenceSet:
    """Read an evidence document into an :class:`EvidenceSet`, in file order."""
    return evidence_from_records(parse_evidence_records(read_json(path)))


def loads_evidence(text: str) -> EvidenceSet:
    return evidence_from_records(parse_evidence_records(parse_json(text)))


def dumps_evidence(e: EvidenceSet) -> str:
    """Canonical cartesian document; ``loads_evidence`` inverts it exactly."""
    doc = {"sources": [{"label": lab, "re": p.re, "im": p.im} for lab, p in e]}
    return json.dumps(doc, indent=2) + "\n"


def parse_mass_records(doc: Any) -> tuple[list, list[tuple[frozenset, RawRecord]]]:
    if not isinstance(doc, dict) or "masses" not in doc or "frame" not in doc:
        raise ParseError("top level must be an object with 'frame' and 'masses'", "document")
    frame = doc["frame"]
    if not isinstance(frame, list) or not all(isinstance(e, str) for e in frame):
        raise ParseError("'frame' must be a list of event labels", "frame")
    masses = doc["masses"]
    if not isinstance(masses, list):
        raise ParseError("'masses' must be a list", "masses")
    out = []
    for k, rec in enumerate(masses):
        where = f"masses[{k}]"
        if not isinstance(rec, dict):
            raise ParseError("record must be an object", where)
        subset = rec.get("subset")
        if not isinstance(subset, list) or not all(isinstance(e, str) for e in subset):
            raise ParseError("'subset' must be a list of event labels", f"{where}.subset")
        re, im, a, theta = _numbers(rec, where, extra=("subset",))
        label = "{" + ", ".join(subset) + "}"
        out.append((frozenset(subset), RawRecord(label, re, im, where, a, theta)))
    return frame, out


def load_mass_function(path) -> QuantumMassFunction:
    frame, records = parse_mass_records(read_json(path))
    return QuantumMassFunction(frame, [(s, r.to_probability()) for s, r in records])


def document_kind(doc: Any) -> str:
    """``"evidence"`` or ``"mass"`` depending on the top-level keys."""
    if isinstance(doc, dict):
        if "sources" in doc:
            return "evidence"
        if "masses" in doc:
            return "mass"
    raise ParseError("expected an evidence ('sources') or mass-function ('masses') document", "document")


__all__ = [
    "RawRecord",
    "read_json",
    "load_evidence",
    "loads_evidence",
    "dumps_evidence",
    "load_mass_function",
    "parse_evidence_records",
    "parse_mass_records",
    "document_kind",
]

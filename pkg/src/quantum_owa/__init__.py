"""Quantum soft likelihood functions built on ordered weighted averaging.

Evidence probabilities are complex numbers ``a * exp(i * theta)``.  They are
ranked by modulus, multiplied cumulatively, and the running products are
combined with attitudinal OWA weights.  With all angles at zero the result
is the classical OWA soft likelihood.

>>> from quantum_owa import EvidenceSet, quantum_soft_likelihood
>>> e = EvidenceSet.from_values([0.3-0.7j, 0.4-0.9j, 0.5+0.3j, 0.6+0.8j, 0.2+0.5j])
>>> print(quantum_soft_likelihood(e, 0.5).result)
0.4409 - 0.0817i
"""

from .core import (
    EvidenceSet,
    FrameOfDiscernment,
    QuantumMassFunction,
    QuantumProbability,
    ValidationReport,
    Violation,
    angle,
    format_complex,
    from_cartesian,
    from_polar,
    modulus,
    multiply,
    validate_mass_function,
)
from .errors import (
    DegenerateLength,
    DuplicateLabel,
    EmptyEvidence,
    InvalidAlpha,
    InvalidLength,
    InvalidProbability,
    InvalidRange,
    LengthMismatch,
    ModulusExceedsOne,
    NegativeAmplitude,
    ParseError,
    QuantumOWAError,
    ValueOutOfRange,
)
from .io import dumps_evidence, load_evidence, load_mass_function, loads_evidence
from .likelihood import (
    LikelihoodTrace,
    SortedEvidence,
    SweepResult,
    SweepRow,
    alpha_grid,
    alpha_sweep,
    classical_soft_likelihood,
    cumulative_products,
    product_likelihood,
    quantum_owa_direct,
    quantum_soft_likelihood,
    sort_by_modulus,
)
from .weights import (
    MAX_LIMIT,
    MIN_LIMIT,
    AttitudeLimit,
    WeightVector,
    attitudinal_weights,
    classical_owa,
    dispersion,
    orness,
)

__version__ = "0.1.0"

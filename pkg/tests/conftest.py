from pathlib import Path

import pytest

from quantum_owa import EvidenceSet

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Suspect A: five sources of complex-valued evidence
PAPER_VALUES = [0.3 - 0.7j, 0.4 - 0.9j, 0.5 + 0.3j, 0.6 + 0.8j, 0.2 + 0.5j]


@pytest.fixture
def paper_evidence():
    return EvidenceSet.from_values(PAPER_VALUES)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])

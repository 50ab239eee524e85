from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ffil.lattice import BOOL, CHAIN3, DIAMOND, LUK3

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def lattices():
    return {"BOOL": BOOL(), "CHAIN3": CHAIN3(), "LUK3": LUK3(), "DIAMOND": DIAMOND()}


@pytest.fixture
def record():
    """Print and keep one PASS/FAIL line per acceptance criterion."""
    def _record(number: int, ok: bool, detail: str) -> bool:
        line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

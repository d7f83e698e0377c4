import sys
from pathlib import Path

import pytest

from tptlmon.trace import load_trace

DATA = Path(__file__).parent / "data"

EXAMPLE1 = "G x.(F ((x <= 1 -> a) /\\ y.(F (y <= 1 -> !b))))"

# final table of the running example, rows 1..13, columns tau_0..tau_6
EXAMPLE1_TABLE = [
    "FFFFFFF",
    "TTTTFFF",
    "TTTTFFF",
    "FFTTFFF",
    "FFTTTFF",
    "TTTTFFF",
    "TTTTTTT",
    "FFTTTFF",
    "TTTTFFF",
    "TTFTFFF",
    "TTTTTTT",
    "TTFTFFF",
    "FFTFTTT",
]


@pytest.fixture
def example1_trace():
    return load_trace(DATA / "example1.csv")


def bits(cells):
    return "".join("T" if c else "F" for c in cells)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])

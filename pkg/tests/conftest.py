from pathlib import Path

import pytest

from renner import build_lattice, build_root_system, enumerate_group

DATA = Path(__file__).parent / "data"

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def e6():
    rs = build_root_system("E6")
    return rs, enumerate_group(rs)


@pytest.fixture(scope="session")
def e6_lattice(e6):
    return build_lattice(e6[0], 1)


_groups = {}


def small_group(name):
    if name not in _groups:
        rs = build_root_system(name)
        _groups[name] = (rs, enumerate_group(rs))
    return _groups[name]


ACCEPTANCE_LINES = {}


@pytest.fixture
def criterion(request):
    """Record a one-line acceptance verdict; printed in the terminal summary."""

    def record(number, title, passed, detail=""):
        ACCEPTANCE_LINES[number] = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}" + (
            f" ({detail})" if detail else ""
        )
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])

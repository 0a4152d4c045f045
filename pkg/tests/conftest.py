from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

H1_KEY, H1_IDENT = "This is the first key.", "theveninester"
H2_KEY, H2_IDENT = "Boomerang", "theveninthistle"


def fixture_bytes(name):
    return (FIXTURES / name).read_bytes()


@pytest.fixture
def hope():
    return [fixture_bytes(f"hope_{i}.txt") for i in (1, 2, 3)]


@pytest.fixture
def crazy():
    return [fixture_bytes(f"crazy_{i}.txt") for i in (1, 2, 3)]


ACCEPTANCE_LINES = []


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    def _report(criterion, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from contextlib import contextmanager

import pytest

from betadic import NumberRing

# the three fields used across the suite; Z[theta] is maximal for each
SHIPPED = {
    "Q": [0, 1],
    "Q(i)": [1, 0, 1],
    "Q(sqrt2)": [-2, 0, 1],
}

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def Z():
    return NumberRing(SHIPPED["Q"])


@pytest.fixture(scope="session")
def G():
    return NumberRing(SHIPPED["Q(i)"])


@pytest.fixture(scope="session")
def R2():
    return NumberRing(SHIPPED["Q(sqrt2)"])


@pytest.fixture(scope="session")
def shipped_rings():
    return {name: NumberRing(poly) for name, poly in SHIPPED.items()}


@pytest.fixture
def acceptance_log():
    def log(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return log


@pytest.fixture
def criterion(acceptance_log):
    """Context manager logging PASS with a detail string, or FAIL with the exception."""

    @contextmanager
    def run(name):
        state = {"detail": ""}
        try:
            yield state
        except BaseException as exc:
            acceptance_log(name, False, f"{type(exc).__name__}: {exc}")
            raise
        acceptance_log(name, True, state["detail"])

    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import random

import pytest

# criterion number -> {check name: (passed, detail)}, filled by the acceptance module
ACCEPTANCE_RESULTS: dict = {}


def acceptance_lines(results):
    lines = []
    for crit in sorted(results):
        checks = results[crit]
        ok = all(passed for passed, _ in checks.values())
        parts = [f"{name} {'ok' if passed else 'FAIL'} ({detail})" for name, (passed, detail) in checks.items()]
        lines.append(f"criterion {crit}: {'PASS' if ok else 'FAIL'}  " + "; ".join(parts))
    return lines


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_lines(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_RESULTS

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hibi.lattice import builtin_family  # noqa: E402

_acceptance = []


@pytest.fixture
def lat():
    """Family lattice by descriptor, cached for the session."""
    cache = {}

    def get(descriptor):
        if descriptor not in cache:
            cache[descriptor] = builtin_family(descriptor)
        return cache[descriptor]

    return get


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")

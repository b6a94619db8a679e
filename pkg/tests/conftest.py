from fractions import Fraction

import pytest

from isocut import tight_instance

from .strategies import star

_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture
def s112():
    return star(2)


@pytest.fixture
def s113():
    return star(3)


@pytest.fixture
def g3():
    return tight_instance(3, Fraction(1, 2))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    num, text = marker.args
    status = "PASS" if report.passed else "FAIL"
    if _criteria.get(num, ("PASS",))[0] == "FAIL":
        status = "FAIL"
    _criteria[num] = (status, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, text = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {text}")

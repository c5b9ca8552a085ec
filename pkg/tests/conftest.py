import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20070401)


# One PASS/FAIL line per acceptance criterion at the end of the run.
_criteria: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in getattr(report, "criteria", ()):
        prev = _criteria.get(mark, True)
        _criteria[mark] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        verdict = "PASS" if _criteria[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}")

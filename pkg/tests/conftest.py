import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

# nodeid -> (criterion number, label, detail list, outcome)
_CRITERIA: dict[str, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is None or report.when != "call":
        return
    details = item.funcargs.get("detail", [])
    _CRITERIA[item.nodeid] = [number, item.function.label, details, report.outcome]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, details, outcome in sorted(_CRITERIA.values(), key=lambda r: r[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        note = f" ({'; '.join(details)})" if details else ""
        terminalreporter.write_line(f"{status} criterion {number}: {label}{note}")


@pytest.fixture
def detail():
    """Short notes a criterion wants printed next to its pass/fail line."""
    return []

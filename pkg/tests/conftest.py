"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line each."""

import pytest

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    previous = _OUTCOMES.get(number, (title, "PASS"))[1]
    if report.failed:
        status = "FAIL"
    elif report.skipped and previous == "PASS" and report.when != "teardown":
        status = "SKIP"
    else:
        status = previous
    _OUTCOMES[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        title, status = _OUTCOMES[number]
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}")

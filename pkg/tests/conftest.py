"""Collects outcomes of tests marked ``acceptance(n, title)`` and prints one
PASS/FAIL line per criterion at the end of the run."""

import pytest

_criteria = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            number, title = mark.args
            _criteria[item.nodeid] = (number, title)


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.failed or (report.when == "call" and report.skipped):
        _outcomes[report.nodeid] = "FAIL"
    else:
        _outcomes.setdefault(report.nodeid, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    by_number = {}
    for nodeid, (number, title) in _criteria.items():
        status = _outcomes.get(nodeid, "NOT RUN")
        prev = by_number.get(number, (title, "PASS"))[1]
        worst = status if status != "PASS" else prev
        by_number[number] = (title, worst)
    terminalreporter.section("acceptance criteria")
    for number in sorted(by_number):
        title, status = by_number[number]
        terminalreporter.write_line(f"AC{number:<2} {status:4}  {title}")

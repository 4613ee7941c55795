import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _criterion_of.get(report.nodeid)
    if marker is not None:
        _criteria.setdefault(marker, []).append(report.outcome)


_criterion_of: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(
            f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({outcomes.count('passed')}/{len(outcomes)})")

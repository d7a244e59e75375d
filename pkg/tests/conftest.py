import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_acceptance = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[name] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        if name in _acceptance:
            outcome, secs = _acceptance[name]
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"{status}  criterion {label}  [{secs:.1f}s]")

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.failed:
        _criteria[name] = "FAIL"
    elif report.when == "call" and name not in _criteria:
        _criteria[name] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def number(name):
        return int(name.split("_")[2])

    for name in sorted(_criteria, key=number):
        terminalreporter.write_line(f"{_criteria[name]}  criterion {number(name)}: {name}")

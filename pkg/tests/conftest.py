import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[tuple[str, bool]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "acceptance" not in report.keywords:
        return
    label = report.nodeid.split("::")[-1]
    _ACCEPTANCE.append((label, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")

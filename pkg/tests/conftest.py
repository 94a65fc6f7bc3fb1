import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        passed, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {name}: {detail}")

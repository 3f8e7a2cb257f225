import sys

import pytest

sys.set_int_max_str_digits(0)

# criterion id -> (passed, detail), filled in by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(key, passed, detail=""):
        ACCEPTANCE[key] = (bool(passed), detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[key]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {key:>2}: {status}  {detail}")

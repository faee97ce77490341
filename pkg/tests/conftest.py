import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from suspsplit.constructions import builtin_spaces  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def builtins():
    return builtin_spaces(4, 3)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k:>2}: {line}")

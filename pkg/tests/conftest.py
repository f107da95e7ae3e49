import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lspav import gen_cycle  # noqa: E402


@pytest.fixture
def rectangle():
    return gen_cycle(3)


@pytest.fixture
def pentagon():
    return gen_cycle(4)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    results = getattr(test_acceptance, "RESULTS", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(results, key=lambda c: int(c[1:])):
        ok, detail = results[name]
        terminalreporter.write_line(f"{name:>4} {'PASS' if ok else 'FAIL'}  {detail}")

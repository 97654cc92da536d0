import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from partition_crt import (CrtIdentityParams, CrtParams, build_crt)  # noqa: E402

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def crt_235():
    return build_crt(CrtIdentityParams(CrtParams((2, 3, 5), (1, 1, 1)), k=1, l=1))


@pytest.fixture(scope="session")
def crt_23_unbounded():
    return build_crt(CrtIdentityParams(CrtParams((2, 3), (1, 1)), k=1, l=None, r=(3, 4)))


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = []

    def report(n, ok, detail=""):
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        lines.append(line)
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    yield report
    if not lines:
        ACCEPTANCE_LINES.append(f"criterion ??: FAIL  {request.node.name} raised before reporting")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

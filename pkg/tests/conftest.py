import os

import pytest


def pytest_report_header(config):
    from twocat import BACKEND

    forced = " (forced)" if os.environ.get("TWOCAT_PURE_PYTHON") else ""
    return f"twocat kernel backend: {BACKEND}{forced}"


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the outcome is filled in after the test runs."""
    entry = {"name": request.node.name, "label": None, "ok": None}
    _ACCEPTANCE.append(entry)

    def label(text):
        entry["label"] = text

    yield label


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        for entry in _ACCEPTANCE:
            if entry["name"] == item.name:
                entry["ok"] = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"[{status}] {entry['label'] or entry['name']}")

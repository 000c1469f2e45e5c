import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


@pytest.fixture
def note(request):
    """Attach a short detail string to the current acceptance criterion."""
    def add(text):
        request.node.user_properties.append(("detail", text))
    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if not item.nodeid.split("::")[0].endswith("test_acceptance.py"):
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        details = "; ".join(v for k, v in item.user_properties if k == "detail")
        _CRITERIA.append(({"passed": "PASS", "failed": "FAIL"}.get(rep.outcome, rep.outcome.upper()), title, details, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, title, details, duration in _CRITERIA:
        line = f"{outcome:6} {title} ({duration:.2f}s)"
        if details:
            line += f" -- {details}"
        terminalreporter.write_line(line)

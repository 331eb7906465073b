import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from siteswap import _backend  # noqa: E402


@pytest.fixture(params=_backend.available())
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} {detail}".rstrip())

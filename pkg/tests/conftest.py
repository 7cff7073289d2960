import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from listaccess import _backend  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(params=_backend.available())
def kernels(request):
    return _backend.load(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section(f"acceptance criteria (kernel backend: {_backend.BACKEND})")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)

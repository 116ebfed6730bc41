import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_line():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip("."))):
        terminalreporter.write_line(line)

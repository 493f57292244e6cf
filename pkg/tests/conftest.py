import pytest

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, print it, and fail the test when ``ok`` is false."""

    def record(number: int, title: str, failures: list):
        line = f"criterion {number} {'PASS' if not failures else 'FAIL'}: {title}"
        _CRITERIA.append(line)
        print(line)
        assert not failures, failures

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

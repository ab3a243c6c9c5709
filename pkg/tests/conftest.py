import pytest

ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_record():
    def record(number: int, name: str, ok: bool, detail: str):
        ACCEPTANCE_LINES[number] = f"criterion {number} {name}: {'PASS' if ok else 'FAIL'} ({detail})"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])

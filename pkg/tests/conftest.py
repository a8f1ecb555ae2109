import pytest

_criterion_lines: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line for a numbered acceptance criterion.

    Lines are printed after the run by the terminal-summary hook so the
    per-criterion status is visible without -s.
    """

    def log(number: int, label: str, passed: bool) -> bool:
        status = "pass" if passed else "FAIL"
        _criterion_lines[number] = f"criterion {number:2d}: {status}  {label}"
        return passed

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criterion_lines):
        terminalreporter.write_line(_criterion_lines[number])

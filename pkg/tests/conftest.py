import pytest

ACCEPTANCE_LINES = {}


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line for an acceptance criterion and return a reporter."""

    def report(number, passed, detail=""):
        line = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f"  {detail}"
        ACCEPTANCE_LINES[number] = line
        with request.config.pluginmanager.getplugin("capturemanager").global_and_fixture_disabled():
            print("\n" + line)
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])

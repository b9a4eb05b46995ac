import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def record_criterion():
    def record(number, ok, detail=""):
        ACCEPTANCE_RESULTS.append((number, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {detail}")

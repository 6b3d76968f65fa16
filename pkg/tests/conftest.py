import pytest

from weightsmith import audits

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def q9_report():
    return audits.q9_audit_report(9)


@pytest.fixture(scope="session")
def radical_report():
    return audits.radical_audit_report(3, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {text}")

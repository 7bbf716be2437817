import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with ``(number, description)`` before asserting."""
    entry = {}

    def record(number, description):
        entry.update(number=number, description=description, node=request.node)
        ACCEPTANCE.append(entry)

    yield record
    if entry:
        rep = getattr(entry["node"], "rep_call", None)
        entry["passed"] = bool(rep and rep.passed)


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(ACCEPTANCE, key=lambda e: e["number"]):
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(f"[{status}] {entry['number']:>2}. {entry['description']}")

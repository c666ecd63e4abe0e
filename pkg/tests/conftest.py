import pytest

from incpoly import parse

H_SAMPLE = ["1", "2", "x", "x^2 + 1", "3*x"]


@pytest.fixture(params=H_SAMPLE)
def h(request):
    return parse(request.param)


@pytest.fixture
def x():
    return parse("x")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines, key=lambda t: int(t[0].split()[0])):
            mark = "PASS" if outcome == "PASSED" else "FAIL"
            terminalreporter.write_line(f"[{mark}] criterion {name}")

import pytest

from elep.tree import enumerate_tree, nodes_up_to

_acceptance = []


@pytest.fixture(scope="session")
def nodes_1e6():
    return nodes_up_to(10**6)


@pytest.fixture(scope="session")
def depth6():
    return list(enumerate_tree(6).walk())


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        if hasattr(report, "wasxfail"):
            verdict = "FAIL (known-unattainable, see xfail reason)"
        else:
            verdict = "PASS" if report.passed else "FAIL"
        _acceptance.append(f"{verdict:5}  {name}")
    elif report.when == "setup" and report.failed:
        _acceptance.append(f"FAIL   {name} (setup error)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance:
            terminalreporter.write_line(line)

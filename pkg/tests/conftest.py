import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def inst59():
    from sidh_torsion.sidh import build_instance
    return build_instance(59, 3, 5, 4, seed=0)


@pytest.fixture(scope="session")
def inst3119():
    from sidh_torsion.sidh import build_instance
    return build_instance(3119, 16, 65, 3, seed=0)

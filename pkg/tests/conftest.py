import pytest

from squarekit import examples as ex

# acceptance criterion number -> (passed, description); filled by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def finset2():
    return ex.finset_squares(2)


@pytest.fixture(scope="session")
def finset1():
    return ex.finset_squares(1)


@pytest.fixture(scope="session")
def pm():
    return ex.partial_monoid_squares(ex.pmonoid_1x())


@pytest.fixture(scope="session")
def edge_graph():
    return ex.graph_squares(1, ex.single_edge())


@pytest.fixture(scope="session")
def intervals12():
    return ex.interval_polytopes(1, 2)


@pytest.fixture(scope="session")
def z2path():
    return ex.path_double_category(ex.z2_nerve(4))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {desc}")

import pytest

from permcover import fixtures
from permcover.assembly import enumerate_complex
from permcover.coxeter import d_closure
from permcover.cycles import barycentric_subdivide, colorize

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def double_cc():
    return {n: colorize(fixtures.double_simplex(n)) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def tet_cc():
    """Coloured barycentric subdivision of the boundary of the tetrahedron."""
    return colorize(barycentric_subdivide(fixtures.boundary_simplex(2)))


@pytest.fixture(scope="session")
def torus_cc():
    return colorize(barycentric_subdivide(fixtures.torus7()))


@pytest.fixture(scope="session")
def tet_closure(tet_cc):
    return d_closure(tet_cc)


@pytest.fixture(scope="session")
def tet_complex(tet_cc):
    return enumerate_complex(tet_cc)


@pytest.fixture(scope="session")
def double_complex(double_cc):
    return {n: enumerate_complex(cc) for n, cc in double_cc.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

import hypothesis.strategies as st
from hypothesis import settings

from latkit import intmat
from latkit.core import Lattice

settings.register_profile("latkit", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("latkit")


@st.composite
def int_matrices(draw, max_rows=4, max_cols=4, bound=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [[draw(st.integers(-bound, bound)) for _ in range(n)] for _ in range(m)]


@st.composite
def lattices(draw, min_rank=1, max_rank=4, bound=4):
    n = draw(st.integers(min_rank, max_rank))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-bound, bound))
    if intmat.det(g) == 0:
        for i in range(n):
            g[i][i] += 2 * bound + 1  # diagonally dominant, so nonsingular
    return Lattice(tuple(map(tuple, g)))


@st.composite
def even_lattices(draw, min_rank=1, max_rank=4, bound=3):
    lat = draw(lattices(min_rank, max_rank, bound))
    g = [[2 * x for x in row] for row in lat.gram]
    return Lattice(tuple(map(tuple, g)))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

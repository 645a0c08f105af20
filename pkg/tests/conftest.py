from pathlib import Path

import pytest
from hypothesis import strategies as st

from brauer_cartan import BrauerConfiguration, build_quiver

DATA = Path(__file__).parent / "data"


def example_config():
    """The four-polygon example: V1 = V2 = {1,2}, V3 = {1,1,3,3}, V4 = {3,4}."""
    return BrauerConfiguration.build(
        ["1", "2", "3", "4"],
        {"V1": ["1", "2"], "V2": ["1", "2"], "V3": ["1", "1", "3", "3"], "V4": ["3", "4"]},
        {"1": 2, "2": 2, "3": 1, "4": 1},
        {"1": ["V1", "V2", "V3", "V3"], "2": ["V1", "V2"], "3": ["V3", "V4", "V3"]},
    )


EXAMPLE_CARTAN = [[4, 4, 4, 0], [4, 4, 4, 0], [4, 4, 10, 2], [0, 0, 2, 2]]


@pytest.fixture
def ex():
    return example_config()


@pytest.fixture
def ex_quiver(ex):
    return build_quiver(ex)


@st.composite
def configurations(draw, max_vertices=4, max_polygons=4, max_occ=3, max_mu=3):
    """Valid configurations built directly from hypothesis draws.

    C2 is repaired by topping a polygon up with its first vertex, and C3 by
    raising the multiplicity of one member, so nothing is filtered out.
    """
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(1, max_polygons))
    vertices = [f"x{i}" for i in range(n)]
    occ = [[draw(st.integers(0, max_occ)) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        if not any(occ[i]):
            occ[i][draw(st.integers(0, m - 1))] = 1
    for j in range(m):
        while sum(occ[i][j] for i in range(n)) < 2:
            i = draw(st.integers(0, n - 1))
            occ[i][j] += 1
    mu = [draw(st.integers(1, max_mu)) for _ in range(n)]
    val = [sum(row) for row in occ]
    for j in range(m):
        members = [i for i in range(n) if occ[i][j]]
        if not any(val[i] * mu[i] > 1 for i in members):
            mu[members[0]] = 2
    polygons = {
        f"P{j}": [vertices[i] for i in range(n) for _ in range(occ[i][j])] for j in range(m)
    }
    orientation = {}
    for i, a in enumerate(vertices):
        if val[i] == 1 and mu[i] == 1:
            continue
        listing = [f"P{j}" for j in range(m) for _ in range(occ[i][j])]
        orientation[a] = draw(st.permutations(listing))
    return BrauerConfiguration.build(vertices, polygons, dict(zip(vertices, mu)), orientation)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)

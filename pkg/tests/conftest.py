import pytest

from weakly_closed.classify import bigclaw, claw
from weakly_closed.graph import complete_graph, cycle_graph, graph_from_edges, path_graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow stretch tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="stretch test; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_criteria: list[tuple[int, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _criteria.append((marker.args[0], report.outcome.upper(), doc))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, doc in sorted(_criteria):
        verdict = "PASS" if outcome == "PASSED" else "FAIL" if outcome == "FAILED" else outcome
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {doc}")


# small example graphs


@pytest.fixture
def c4_example():
    """Four-cycle 1-2-3-4-1 used for the first interchange example."""
    return graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture
def six_vertex_example():
    """Weakly closed six-vertex example with its standard labeling."""
    return graph_from_edges(6, [(1, 2), (1, 4), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)])


@pytest.fixture
def chordal_not_wc_graphs():
    g1 = graph_from_edges(6, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (2, 6), (4, 5), (5, 6)])
    g2 = graph_from_edges(6, [(1, 2), (1, 3), (1, 5), (2, 5), (2, 6), (4, 5)])
    return g1, g2


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def small_zoo():
    return {
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K4": complete_graph(4),
        "claw": claw(),
        "bigclaw": bigclaw(),
    }

import pytest

from maximin_lp import LPProblem, MatrixGame

WILLIAMS_PAYOFF = [
    [4, 3, 3, 2, 2, 6],
    [0, 7, 3, 6, 2, 2],
    [6, 0, 4, 2, 6, 2],
]

_acceptance = []


@pytest.fixture
def williams():
    return LPProblem(c=[1] * 6, A=WILLIAMS_PAYOFF, b=[1, 1, 1])


@pytest.fixture
def williams_game():
    return MatrixGame(WILLIAMS_PAYOFF)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _acceptance.append((marker.args[0], marker.args[1], rep.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_acceptance):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {title}")

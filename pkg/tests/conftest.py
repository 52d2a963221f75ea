from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cusp_char.series import EXACT, TruncSeries

EXAMPLE_X = {12: 1, 13: 1, 14: Fraction(37, 28)}
EXAMPLE_Y = {
    18: 1,
    19: Fraction(3, 2),
    20: Fraction(33, 14),
    21: Fraction(13, 14),
    22: Fraction(675, 1568),
    23: Fraction(-675, 3136),
}


@pytest.fixture
def example_xy():
    return TruncSeries(EXAMPLE_X), TruncSeries(EXAMPLE_Y)


rationals = st.builds(
    Fraction,
    st.integers(-20, 20),
    st.integers(1, 12),
)


@st.composite
def polynomials(draw, max_degree=12, min_order=0):
    exps = draw(st.lists(st.integers(min_order, max_degree), max_size=6, unique=True))
    return TruncSeries({e: draw(rationals) for e in exps})


@st.composite
def series(draw, max_degree=12):
    f = draw(polynomials(max_degree))
    prec = draw(st.one_of(st.just(EXACT), st.integers(0, max_degree + 3)))
    return f.truncate(prec)


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, outcome in sorted(_ACCEPTANCE):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}")

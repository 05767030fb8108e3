import pytest
from hypothesis import settings, strategies as st

from cfcolor.core import Instance

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def instances(draw, max_n=12, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = st.tuples(st.integers(1, n), st.integers(1, n)).map(lambda p: (min(p), max(p)))
    ivs = draw(st.lists(pairs, max_size=min(25, n * (n + 1) // 2)))
    return Instance(n, ivs)


@pytest.fixture
def i2_pairs():
    return {(1, 2), (3, 3), (2, 4)}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)

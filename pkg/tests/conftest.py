import random

import pytest

from codetops import field_of_order, make_field


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture(params=[2, 3, 4, 5, 9])
def small_field(request):
    return field_of_order(request.param)


@pytest.fixture
def gf3():
    return make_field(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

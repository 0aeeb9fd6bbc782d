import random

import pytest
from hypothesis import settings

from toricirc.corpus import CONFIGURATIONS, GRAPHS

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def corpus_configurations():
    return CONFIGURATIONS


@pytest.fixture(scope="session")
def corpus_graphs():
    return GRAPHS


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

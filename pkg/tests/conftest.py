import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gradedrham.corpus import load_corpus  # noqa: E402
from gradedrham.ringfile import parse_ring  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def ring(text):
    return parse_ring(text.replace(" / ", "\n"))


@pytest.fixture(scope="session")
def cusp():
    return ring("ring cusp / vars x:2 y:3 / rels y^2 - x^3")


@pytest.fixture(scope="session")
def torus():
    return ring("ring torus / vars t:1 s:-1 / rels t*s - 1")


@pytest.fixture(scope="session")
def dual():
    return ring("ring dual / vars x:1 / rels x^2")


@pytest.fixture(scope="session")
def artinian():
    return ring("ring artinian / vars x:0 / rels x^3")


@pytest.fixture(scope="session")
def etale():
    return ring("ring etale / vars x:0 / rels x^2 - 1")


@pytest.fixture(scope="session")
def line():
    return ring("ring line / vars x:1")


@pytest.fixture(scope="session")
def plane():
    return ring("ring plane / vars x:1 y:1")


@pytest.fixture(scope="session")
def fermat():
    return ring("ring fermat / vars x:1 y:1 z:1 / rels x^3 + y^3 + z^3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

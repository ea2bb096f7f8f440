from functools import lru_cache

import pytest

from reslat.corpus import commutative_specs, example3
from reslat.ideal_lattice import build_ideal_lattice
from reslat.rings import build_ring, spec_name


@lru_cache(maxsize=None)
def corpus_lattices():
    return tuple((spec_name(s), build_ideal_lattice(build_ring(s))) for s in commutative_specs())


@pytest.fixture(scope="session")
def ideal_lattices():
    return corpus_lattices()


@pytest.fixture
def ex3():
    return example3()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])

from pathlib import Path

import pytest

from braided import BraidedHopfAlgebra
from rootdata import builtin_datum, empty_sub_datum, load_sub_datum


FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'


@pytest.fixture(scope='session')
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture(scope='session')
def a3_a2():
    """The A2 in A3 engine, shared because its B_3 is the slowest thing in the suite."""
    return BraidedHopfAlgebra(load_sub_datum(FIXTURES / 'a2_in_a3.json'), max_degree=3)


@pytest.fixture(scope='session')
def empty_a1():
    return BraidedHopfAlgebra(empty_sub_datum(builtin_datum('A', 1, 'gl')), max_degree=3)


@pytest.fixture(scope='session')
def empty_a2():
    return BraidedHopfAlgebra(empty_sub_datum(builtin_datum('A', 2, 'gl')), max_degree=3)

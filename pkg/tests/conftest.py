import pytest

from ldicode import CodeSpec

from .codes import DOUBLE_CODE, FOUR_QUBIT_EA


@pytest.fixture
def four_qubit():
    return CodeSpec(2, FOUR_QUBIT_EA, c=1, d=3)


@pytest.fixture
def double_code():
    return CodeSpec(5, DOUBLE_CODE, unbounded=True, c=2, d=2)


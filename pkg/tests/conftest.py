import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from qzeta import QContext


@pytest.fixture(scope="session")
def ctx_half():
    return QContext(Fraction(1, 2))


@pytest.fixture(scope="session")
def ctx_third():
    return QContext(Fraction(1, 3))


@pytest.fixture(scope="session")
def ctx_nine_tenths():
    return QContext(Fraction(9, 10))

import os
from pathlib import Path

import pytest
from hypothesis import settings

from narylie.fields import QQ
from narylie.generators import cross_product, heisenberg

settings.register_profile("ci", max_examples=50, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def cross():
    return cross_product(QQ)


@pytest.fixture
def heis():
    return heisenberg(QQ)

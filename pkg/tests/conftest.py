"""Shared fixtures for the pireason test suite."""

import pytest
from hypothesis import HealthCheck, settings

from pireason.config import DATA_DIR
from pireason.main import Services
from pireason.services.inference_rules import RuleSweeper
from pireason.services.formula import Theory
from pireason.services.parser import parse
from pireason.storage import FileStore

settings.register_profile(
    "pireason",
    derandomize=True,
    deadline=None,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.filter_too_much,
        HealthCheck.function_scoped_fixture,
    ],
)
settings.load_profile("pireason")


@pytest.fixture
def empty_theory():
    return Theory()


@pytest.fixture
def example3_theory():
    return Theory.of(parse("x | y"), parse("z -> y"))


@pytest.fixture
def example3_formula():
    return parse("(x & r) | (y & s)")


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def services():
    return Services(store=FileStore(base_dir=DATA_DIR), rules=RuleSweeper(workers=1))

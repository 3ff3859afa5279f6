import pathlib

import pytest

from cohomotopy import load_algebraic_model, model_from_simplicial
from cohomotopy.catalog import (ALGEBRAIC_MODELS, SIMPLICIAL_FIXTURES,
                                model_json)

FIXTURE_DIR = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def algebraic_models():
    """Every built-in algebraic model, loaded once."""
    return {name: load_algebraic_model(model_json(name))
            for name in ALGEBRAIC_MODELS}


@pytest.fixture(scope="session")
def complexes():
    """Every built-in simplicial complex, built once."""
    return {name: build() for name, build in SIMPLICIAL_FIXTURES.items()}


@pytest.fixture(scope="session")
def simplicial_models(complexes):
    """Cohomology models of the cheap simplicial fixtures (everything but
    the 4-dimensional product, which has its own session fixture)."""
    return {name: model_from_simplicial(X)
            for name, X in complexes.items()}


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR

from __future__ import annotations

import pytest

import helpers


@pytest.fixture(scope="session")
def corpus():
    return helpers.monomial_corpus()


@pytest.fixture(scope="session")
def sf_corpus():
    return helpers.squarefree_corpus()

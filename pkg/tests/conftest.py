"""Shared fixtures: the searched pair corpus and small reference pairs."""

from __future__ import annotations

import pytest

from syncqec.cyclic import parse_code_spec, search_pairs
from syncqec.pairing import build_pairing_basis

CORPUS_NS = (7, 15, 17, 21, 23, 31)


@pytest.fixture(scope="session")
def corpus():
    """All valid nested pairs per length, keyed by n."""
    return {n: search_pairs(n) for n in CORPUS_NS}


@pytest.fixture(scope="session")
def n7_pair():
    return parse_code_spec("n=7; p=1+x+x^3; q=1")


@pytest.fixture(scope="session")
def n7_basis(n7_pair):
    return build_pairing_basis(n7_pair)


@pytest.fixture(scope="session")
def n15_pair():
    return parse_code_spec("n=15; p=1+x+x^4; q=1")


@pytest.fixture(scope="session")
def n21_d3_pair():
    """A length-21 pair whose supercode has distance 3."""
    return parse_code_spec("n=21; p=1+x^3+x^9; q=1+x^2+x^4+x^5+x^6")

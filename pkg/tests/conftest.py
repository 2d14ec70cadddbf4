from __future__ import annotations

import pytest

from hopfseq import (
    alternating,
    bicrossed_product,
    drinfeld_double,
    from_factorization,
    subgroup_classes,
    symmetric,
)
from hopfseq.perm import parse_cycles


@pytest.fixture(scope="session")
def a5():
    return alternating(5)


@pytest.fixture(scope="session")
def a6():
    return alternating(6)


@pytest.fixture(scope="session")
def s6():
    return symmetric(6)


@pytest.fixture(scope="session")
def a6_rows(a6):
    return subgroup_classes(a6)


@pytest.fixture(scope="session")
def a5_rows(a5):
    return subgroup_classes(a5)


@pytest.fixture(scope="session")
def double_s3():
    return drinfeld_double(symmetric(3))


@pytest.fixture(scope="session")
def a5_matched_pair(a5):
    a4 = a5.subgroup([parse_cycles("(1 2 3)", 5), parse_cycles("(1 2)(3 4)", 5)])
    c5 = a5.subgroup([parse_cycles("(1 2 3 4 5)", 5)])
    return from_factorization(a5, c5, a4)


@pytest.fixture(scope="session")
def bicrossed60(a5_matched_pair):
    return bicrossed_product(a5_matched_pair)

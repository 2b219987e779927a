"""
Shared fixtures: the builtin categories over QQ, built once per test session.
"""
import pytest

from superhc.utils.catalog import builtin


@pytest.fixture(scope="session")
def point():
    return builtin("point")

@pytest.fixture(scope="session")
def clifford1():
    return builtin("clifford1")

@pytest.fixture(scope="session")
def dual_even():
    return builtin("dual_even")

@pytest.fixture(scope="session")
def dual_odd():
    return builtin("dual_odd")

@pytest.fixture(scope="session")
def arrow():
    return builtin("arrow")

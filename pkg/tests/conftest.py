"""
公共夹具
"""

import pytest

from core.arith import QuadraticSurd
from core.data import get_registry, set_registry
from core.spectra import freiman_sequence, rho


@pytest.fixture(autouse=True)
def fresh_registry():
    """每个测试结束后恢复默认注册表，防止 --registry 之类的替换泄漏"""
    yield
    set_registry(None)


@pytest.fixture
def registry():
    return get_registry()


@pytest.fixture
def rho_sequence():
    return rho()


@pytest.fixture
def sigma_sequence():
    return freiman_sequence("")


@pytest.fixture
def sqrt2():
    return QuadraticSurd(0, 1, 2, 1)


@pytest.fixture
def sqrt3():
    return QuadraticSurd(0, 1, 3, 1)

import pytest

from cspqubo.core import validate_instance
from cspqubo.sets import BENCHMARK_SETS


@pytest.fixture(params=sorted(BENCHMARK_SETS))
def set_id(request):
    return request.param


@pytest.fixture
def sets():
    return {k: validate_instance(v) for k, v in BENCHMARK_SETS.items()}

import pytest
from hypothesis import HealthCheck, settings

from susypiv import kernels

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run a test once per available kernel backend, then restore the default."""
    previous = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)

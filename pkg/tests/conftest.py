import os

import pytest
from hypothesis import HealthCheck, settings

from braidcover import _pykernels

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def _kernel_modules():
    mods = [pytest.param(_pykernels, id="python")]
    try:
        from braidcover import _ckernels
    except ImportError:
        mods.append(pytest.param(None, id="cython", marks=pytest.mark.skip(reason="compiled kernels not built")))
    else:
        mods.append(pytest.param(_ckernels, id="cython"))
    return mods


@pytest.fixture(params=_kernel_modules())
def kernels(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)

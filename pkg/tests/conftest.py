import random

import pytest

from optb import _pykernels

try:
    from optb import _ckernels
except ImportError:
    _ckernels = None

KERNELS = [pytest.param(_pykernels, id="python")]
KERNELS.append(pytest.param(
    _ckernels, id="cython",
    marks=pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")))


@pytest.fixture(params=KERNELS)
def kernels(request):
    return request.param


def random_word_letters(rng: random.Random, max_len=12, max_exp=6):
    """Random (generator symbol, exponent) pairs, exponents nonzero."""
    out = []
    for _ in range(rng.randint(0, max_len)):
        k = 0
        while k == 0:
            k = rng.randint(-max_exp, max_exp)
        out.append((rng.choice("xydw"), k))
    return out


ACCEPTANCE_REPORT = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)

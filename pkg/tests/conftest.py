import itertools

import pytest

from bmfrenet.lie_model import LieModel
from bmfrenet.null_frenet import SlantParams
from bmfrenet.structure import model_structure

SLANT_VALUES = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
SLANT_GRID = [
    SlantParams(a, b) for a, b in itertools.product(SLANT_VALUES, repeat=2) if (a, b) != (0.0, 0.0)
]
ALPHAS = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)
BETAS = (-1.0, 0.0, 1.0)

# filled by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def S():
    return model_structure()


@pytest.fixture(params=ALPHAS, ids=lambda a: f"alpha={a}")
def model(request):
    return LieModel(request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

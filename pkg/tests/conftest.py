import random

import pytest

DEFAULT_SEED = 20240611
_ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized property tests")


@pytest.fixture
def seed(request):
    value = request.config.getoption("--seed")
    print(f"random seed: {value}")
    return value


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

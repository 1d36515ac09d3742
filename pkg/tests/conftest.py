import os
import random

import pytest

from koszulgerst.fields import QQ, PrimeField
from koszulgerst.presets import load_complex

SEED = int(os.environ.get("KOSZUL_GERST_SEED", "20260808"))


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    lines = getattr(terminalreporter.config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def record_criterion(request):
    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  [{detail}]"
        request.config._acceptance_lines.append(line)
        return ok
    return record


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def short8():
    return load_complex("short", QQ, 8)


@pytest.fixture(scope="session")
def family8():
    return load_complex("family", QQ, 8, q=1)


@pytest.fixture(scope="session")
def family8_f5():
    return load_complex("family", PrimeField(5), 8, q=1)

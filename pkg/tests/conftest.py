import numpy as np
import pytest

from trinom.config import CONFIG_ENV_VAR

# (criterion, passed, detail) rows collected by the acceptance suite
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _no_ambient_config(monkeypatch):
    # a stray TRINOM_CONFIG in the environment must not leak into the tests
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

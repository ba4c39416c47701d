from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from iqspec.iq_io import write_iq  # noqa: E402

ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def make_capture(tmp_path):
    """Write complex samples as a .dat capture and return its path."""

    def _make(samples, name="capture.dat"):
        return write_iq(tmp_path / name, np.asarray(samples))

    return _make

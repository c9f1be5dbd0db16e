from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import fixture_data
from roughwork import ApproximationSpace


@pytest.fixture(scope="session")
def example_space() -> ApproximationSpace:
    return ApproximationSpace.from_pairs(
        fixture_data.UNIVERSE_ATOMS, fixture_data.GENERATING_PAIRS
    )

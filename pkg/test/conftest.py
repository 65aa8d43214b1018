"""Pytest configuration shared by all tests."""

import random

import pytest
from hypothesis import settings as hypothesis_settings

hypothesis_settings.register_profile("default", max_examples=200, deadline=None)
hypothesis_settings.load_profile("default")


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source, so failures are reproducible."""
    return random.Random(20140113)

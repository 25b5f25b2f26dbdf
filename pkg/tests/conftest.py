import os
import sys
from pathlib import Path

import hypothesis
import pytest

from multiwinner.election import Election

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def E():
    """``E("abc", "bca")``: shorthand for single-letter elections over sorted labels."""
    return lambda *orders: Election.from_strings(orders)

import random
import sys

import pytest
from hypothesis import strategies as st

from nckschur.affine import from_word


@pytest.fixture
def rng():
    return random.Random(20261016)


@st.composite
def affine_elements(draw, k_max=4, max_len=8):
    k = draw(st.integers(1, k_max))
    word = draw(st.lists(st.integers(0, k), max_size=max_len))
    return from_word(k, word)


def pytest_terminal_summary(terminalreporter):
    acceptance = next((m for name, m in sys.modules.items()
                       if name.endswith("test_acceptance") and hasattr(m, "RESULTS")), None)
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.status_line(n))

from __future__ import annotations

import pytest

from convexcodes import code_of_arrangement
from convexcodes.generators import corpus


@pytest.fixture(scope="session")
def corpus_entries():
    return corpus()


@pytest.fixture(scope="session")
def extracted_codes(corpus_entries):
    """Arrangement codes computed once per session, keyed by realization stem."""
    out = {}
    for entry in corpus_entries:
        for real in entry.realizations:
            out[real.stem] = code_of_arrangement(real.arrangement)
    return out

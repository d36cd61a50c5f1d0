import random

import pytest

from helpers import enumerate_sanitized_classes, random_sanitized_instance


@pytest.fixture(scope="session")
def classes6():
    """Every sanitized graph with at most 6 vertices, one per class."""
    return enumerate_sanitized_classes(6)


@pytest.fixture(scope="session")
def classes7():
    """Every sanitized graph with at most 7 vertices, one per class."""
    return enumerate_sanitized_classes(7)


@pytest.fixture(scope="session")
def random_graphs_300():
    rng = random.Random(20240811)
    return [random_sanitized_instance(rng, 12) for _ in range(300)]

import re
from functools import lru_cache

import pytest

from bruhat_atlas.coxeter import WeylGroup
from bruhat_atlas.rootdata import DynkinSpec, cartan_from_spec


@lru_cache(maxsize=None)
def group_of(name: str) -> WeylGroup:
    """'A2', 'C2xC2', 'D4', ... -> a cached WeylGroup."""
    factors = []
    for part in name.split("x"):
        m = re.fullmatch(r"([ABCD])(\d+)", part)
        assert m, f"bad group name {name}"
        factors.append((m.group(1), int(m.group(2))))
    return WeylGroup(cartan_from_spec(DynkinSpec(tuple(factors))))


# groups small enough for exhaustive all-pairs / all-subsets checks
SMALL_GROUPS = [
    "A1", "A2", "A3", "A4", "B2", "C2", "C3", "C4",
    "D4", "A1xA1", "A2xA2", "C2xC2",
]

# the full oracle-agreement matrix (includes A5, 720 elements)
MATRIX_GROUPS = SMALL_GROUPS + ["A5"]


@pytest.fixture
def a2():
    return group_of("A2")


@pytest.fixture
def c2():
    return group_of("C2")


@pytest.fixture
def a1a1():
    return group_of("A1xA1")

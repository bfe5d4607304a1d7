from pathlib import Path

import pytest

from epgcolour.groups import construct_group

FIXTURES = Path(__file__).parent / "fixtures"
Q8 = f"perm:{FIXTURES / 'q8.perm'}"

BATTERY = (
    [f"cyclic:{n}" for n in range(1, 49)]
    + [f"dihedral:{n}" for n in range(2, 25)]
    + ["sym:3", "sym:4", "sym:5", "sym:6", "alt:4", "alt:5", "alt:6", Q8]
)

_groups = {}


def group(descriptor):
    """Groups are immutable; build each one once per session."""
    G = _groups.get(descriptor)
    if G is None:
        G = _groups[descriptor] = construct_group(descriptor)
    return G


@pytest.fixture(scope="session")
def s8():
    return group("sym:8")


@pytest.fixture(scope="session")
def a7():
    return group("alt:7")

import pytest

from kacoh.rootdata import SimpleType


def simple_types(max_rank: int):
    """Every simple type up to the given rank, aliases included."""
    out = []
    for family, lo in [("A", 1), ("B", 2), ("C", 2), ("D", 3)]:
        out.extend(SimpleType(family, r) for r in range(lo, max_rank + 1))
    out.extend(SimpleType("E", r) for r in (6, 7, 8) if r <= max_rank)
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    out.append(SimpleType("G", 2))
    return out


@pytest.fixture(scope="session")
def types_rank8():
    return simple_types(8)


@pytest.fixture(scope="session")
def types_rank6():
    return simple_types(6)

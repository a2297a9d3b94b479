import pytest
from hypothesis import strategies as st

from morcohom.graded import BigradedTable, projective_space_table


def tables(max_index: int = 3, max_dim: int = 3, max_size: int = 4):
    key = st.tuples(*(st.integers(0, max_index) for _ in range(3)))
    return st.dictionaries(key, st.integers(1, max_dim), max_size=max_size).map(BigradedTable)


def pure_tables(max_degree: int = 4, max_dim: int = 2, max_size: int = 4):
    key = st.integers(0, max_degree).flatmap(
        lambda k: st.integers(0, k).map(lambda a: (k, a, k - a))
    )
    return st.dictionaries(key, st.integers(1, max_dim), max_size=max_size).map(BigradedTable)


@pytest.fixture
def hp1():
    return projective_space_table(1)


@pytest.fixture
def elliptic_h1():
    return BigradedTable({(1, 1, 0): 1, (1, 0, 1): 1})

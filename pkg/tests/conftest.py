from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from thetarel.config import builtin_spec
from thetarel.exactmath import determinant

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


def is_positive_definite(g):
    return all(determinant([r[:k] for r in g[:k]]) > 0 for k in range(1, len(g) + 1))


@st.composite
def even_gram(draw, dims=(2, 3), bound=6):
    """Even positive-definite Gram matrices; off-diagonal entries are bounded by bound."""
    n = draw(st.sampled_from(dims))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = draw(st.sampled_from([x for x in range(2, bound + 1, 2)]))
        for j in range(i):
            g[i][j] = g[j][i] = draw(st.integers(-bound, bound))
    if not is_positive_definite(g):
        # repair instead of filtering: strict diagonal dominance forces definiteness
        for i in range(n):
            off = sum(abs(g[i][j]) for j in range(n) if j != i)
            if g[i][i] <= off:
                g[i][i] = off + 2 - off % 2
    return g


small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@pytest.fixture(scope="session")
def d4():
    return builtin_spec("D4")


@pytest.fixture(scope="session")
def a2():
    return builtin_spec("A2")


@pytest.fixture(scope="session")
def a3():
    return builtin_spec("A3")


def F(x):
    return Fraction(x)

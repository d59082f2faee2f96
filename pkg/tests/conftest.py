import itertools

import pytest
from hypothesis import strategies as st

from locdom.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, edges)


def brute_min_ld(src, n):
    """Smallest LD set by trying every subset in order of size."""
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            s = sum(1 << v for v in combo)
            codes = [src[v] & s for v in range(n) if not s >> v & 1]
            if all(codes) and len(set(codes)) == len(codes):
                return k
    return n


@pytest.fixture
def brute():
    return brute_min_ld

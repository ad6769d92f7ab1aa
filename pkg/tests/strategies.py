"""
Hypothesis strategies for random finite posets.
"""

import numpy as np
from hypothesis import strategies as st

from core.poset import Poset, bound_extension, transitive_closure


@st.composite
def posets(draw, min_size=0, max_size=6):
    """Random posets: an upper-triangular relation closed under transitivity."""
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            rel[i, j] = draw(st.booleans())
    return Poset([f"e{i}" for i in range(n)], transitive_closure(rel))


@st.composite
def bounded_posets(draw, max_middle=5):
    return bound_extension(draw(posets(max_size=max_middle)))


def subset_masks(p):
    return st.integers(min_value=0, max_value=p.full_mask)

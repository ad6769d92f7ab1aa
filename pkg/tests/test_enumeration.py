"""
Tests for the enumeration of posets up to isomorphism.
"""

import itertools

import numpy as np
import pytest

from core.enumeration import (
    count_bounded, enumerate_bounded, enumerate_posets, middle_names, order_ideals,
    poset_classes, poset_from_canonical
)
from core.errors import PosetkitError, SizeCapExceeded
from core.poset import Poset, canonical_form, order_axiom_violation

# Unlabeled posets on k elements
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318}


def labeled_classes(k):
    """Canonical forms of every partial order on range(k), by brute force."""
    off_diagonal = [(i, j) for i in range(k) for j in range(k) if i != j]
    found = set()
    for choice in itertools.product((False, True), repeat=len(off_diagonal)):
        leq = np.eye(k, dtype=bool)
        for (i, j), on in zip(off_diagonal, choice):
            leq[i, j] = on
        if order_axiom_violation(leq) is None:
            found.add(canonical_form(Poset(middle_names(k), leq)))
    return found


@pytest.mark.parametrize('k, expected', sorted(KNOWN_COUNTS.items()))
def test_class_counts(k, expected):
    assert len(poset_classes(k)) == expected


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_matches_brute_force(k):
    assert set(poset_classes(k)) == labeled_classes(k)


def test_classes_are_pairwise_distinct():
    forms = [canonical_form(p) for p in enumerate_posets(5)]
    assert len(set(forms)) == len(forms) == 63


def test_decoded_posets_are_in_linear_extension_order():
    for form in poset_classes(4):
        p = poset_from_canonical(form)
        assert canonical_form(p) == form
        assert not any(p.leq[y, x] for x in range(p.size) for y in range(x + 1, p.size))


def test_order_ideals_of_antichain():
    p = Poset(['a', 'b'], np.eye(2, dtype=bool))
    assert order_ideals(p) == [0, 1, 2, 3]


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6, 7])
def test_bounded_count(n):
    assert count_bounded(n) == KNOWN_COUNTS[n - 2]
    assert sum(1 for _ in enumerate_bounded(n)) == KNOWN_COUNTS[n - 2]


def test_bounded_names():
    bp = next(enumerate_bounded(4))
    assert bp.names[0] == '0' and bp.names[-1] == '1'
    assert bp.bottom == 0 and bp.top == 3


def test_size_limits():
    with pytest.raises(PosetkitError):
        list(enumerate_bounded(1))
    with pytest.raises(SizeCapExceeded):
        list(enumerate_bounded(13))
    with pytest.raises(SizeCapExceeded):
        count_bounded(6, cap=5)


def test_middle_names_extend_past_alphabet():
    names = middle_names(28)
    assert names[:3] == ['a', 'b', 'c']
    assert names[26:] == ['a2', 'b2']

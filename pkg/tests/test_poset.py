"""
Tests for the poset core: construction, bounds, subsets and canonical forms.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from core.errors import (
    CycleDetected, DuplicateName, ForeignSubset, NoBottom, NoTop, PosetkitError, Trivial, UnknownName
)
from core.poset import (
    Poset, as_bounded, bound_extension, canonical_form, from_covers, horizontal_sum, is_isomorphic,
    transitive_closure
)
from strategies import posets


def diamond():
    return from_covers(['0', 'a', 'b', '1'], [('0', 'a'), ('0', 'b'), ('a', '1'), ('b', '1')])


class TestConstruction:

    def test_covers_generate_order(self):
        p = diamond()
        assert p.size == 4
        assert p.le('0', '1')
        assert p.le('a', 'a')
        assert not p.le('a', 'b')
        assert not p.le('1', '0')

    def test_cover_pairs_drop_transitive_edges(self):
        p = from_covers(['x', 'y', 'z'], [('x', 'y'), ('y', 'z'), ('x', 'z')])
        assert p.cover_pairs() == [(0, 1), (1, 2)]

    def test_singleton(self):
        p = from_covers(['x'], [])
        assert p.size == 1
        assert p.le('x', 'x')
        assert p.cover_pairs() == []

    def test_duplicate_name(self):
        with pytest.raises(DuplicateName):
            from_covers(['a', 'a'], [])

    def test_unknown_name_in_cover(self):
        with pytest.raises(UnknownName):
            from_covers(['a', 'b'], [('a', 'c')])

    def test_cycle_is_reported(self):
        with pytest.raises(CycleDetected) as info:
            from_covers(['a', 'b', 'c'], [('a', 'b'), ('b', 'c'), ('c', 'a')])
        assert set(info.value.cycle) == {'a', 'b', 'c'}

    def test_relation_must_be_partial_order(self):
        with pytest.raises(PosetkitError):
            Poset(['a', 'b'], np.array([[True, True], [True, True]]))

    def test_index_of_rejects_unknown(self):
        with pytest.raises(UnknownName):
            diamond().index_of('z')
        with pytest.raises(UnknownName):
            diamond().index_of(7)

    def test_heights_follow_longest_chain(self):
        p = from_covers(['0', 'a', 'b', '1'], [('0', 'a'), ('a', 'b'), ('0', 'b'), ('b', '1')])
        assert p.heights == (0, 1, 2, 3)

    @given(posets())
    def test_linear_extension_respects_order(self, p):
        position = {x: i for i, x in enumerate(p.linear_extension)}
        for x in range(p.size):
            for y in range(p.size):
                if p.leq[x, y]:
                    assert position[x] <= position[y]

    @given(posets())
    def test_covers_regenerate_order(self, p):
        rel = np.zeros((p.size, p.size), dtype=bool)
        for lo, hi in p.cover_pairs():
            rel[lo, hi] = True
        assert (transitive_closure(rel) == p.leq).all()


class TestBounds:

    def test_as_bounded(self):
        bp = as_bounded(diamond())
        assert bp.names[bp.bottom] == '0'
        assert bp.names[bp.top] == '1'

    def test_antichain_has_no_bottom(self):
        with pytest.raises(NoBottom):
            as_bounded(from_covers(['a', 'b'], []))

    def test_missing_top(self):
        with pytest.raises(NoTop):
            as_bounded(from_covers(['0', 'a', 'b'], [('0', 'a'), ('0', 'b')]))

    def test_singleton_is_trivial(self):
        with pytest.raises(Trivial):
            as_bounded(from_covers(['x'], []))

    def test_bound_extension_of_empty_is_two_chain(self):
        bp = bound_extension(Poset([], np.zeros((0, 0), dtype=bool)))
        assert bp.size == 2
        assert bp.names == ('0', '1')


class TestSubsets:

    def test_subset_algebra(self):
        p = diamond()
        a = p.subset(['0', 'a'])
        b = p.subset(['a', '1'])
        assert (a | b).names() == ['0', 'a', '1']
        assert (a & b).names() == ['a']
        assert (a - b).names() == ['0']
        assert (a & b).issubset(a)
        assert 'a' in a and 'b' not in a

    def test_subsets_of_other_posets_are_rejected(self):
        with pytest.raises(ForeignSubset):
            diamond().subset(['a']) | diamond().subset(['b'])


class TestHorizontalSum:

    def test_sum_glues_bounds(self, fixture):
        total = horizontal_sum(fixture('fig4'), fixture('chain4'))
        assert total.size == 12
        assert is_isomorphic(total, fixture('fig6'))

    def test_name_clash_gets_suffix(self):
        bp = as_bounded(diamond())
        total = horizontal_sum(bp, bp)
        assert total.names == ('0', 'a', 'b', '1', "a'", "b'")
        assert not total.base.le('a', "a'")


class TestCanonicalForm:

    @given(posets(max_size=7), st.randoms(use_true_random=False))
    def test_invariant_under_relabelling(self, p, rnd):
        order = list(range(p.size))
        rnd.shuffle(order)
        relabelled = Poset([f"x{i}" for i in range(p.size)], p.leq[np.ix_(order, order)])
        assert canonical_form(relabelled) == canonical_form(p)

    def test_distinguishes_non_isomorphic(self, fixture):
        assert not is_isomorphic(fixture('fig9'), fixture('chain4'))
        assert is_isomorphic(fixture('n5'), fixture('fig2'))

    def test_dual_of_n5_is_n5(self, fixture):
        n5 = fixture('n5').base
        dual = Poset(n5.names, n5.leq.T)
        assert is_isomorphic(dual, n5)

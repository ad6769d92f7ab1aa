"""
Tests for complements, the ⁺ operator and the lattice of closed subsets.
"""

import pytest
from hypothesis import given, strategies as st

from core.complementation import (
    bi_plus_mask, closed_sets, is_closed, perp, plus_elem, plus_greatest, plus_least, plus_mask,
    plus_set, plus_table
)
from core.errors import EmptyComplementSet
from core.poset import is_isomorphic
from core.structure import is_orthocomplementation
from strategies import bounded_posets


def names(subset):
    return sorted(subset.names())


class TestComplements:

    def test_pentagon(self, fixture):
        bp = fixture('n5')
        assert names(plus_elem(bp, 'b')) == ['a', 'c']
        assert names(plus_elem(bp, 'a')) == ['b']
        assert names(plus_elem(bp, '0')) == ['1']
        assert perp(bp, 'c', 'b')
        assert not perp(bp, 'a', 'c')

    def test_equal_complement_sets(self, fixture):
        bp = fixture('fig4')
        assert names(plus_elem(bp, 'b')) == ['f', 'g']
        assert names(plus_elem(bp, 'c')) == ['f', 'g']

    def test_plus_of_sets(self, fixture):
        bp = fixture('n5')
        p = bp.base
        assert plus_set(bp, p.empty()) == p.full()
        assert plus_set(bp, p.full()) == p.empty()
        assert names(plus_set(bp, p.subset(['a', 'c']))) == ['b']

    def test_least_and_greatest_complement(self, fixture):
        bp = fixture('n5')
        p = bp.base
        assert plus_least(bp, 'b') == p.index['a']
        assert plus_greatest(bp, 'b') == p.index['c']

    def test_missing_complement(self, fixture):
        with pytest.raises(EmptyComplementSet):
            plus_least(fixture('chain4'), 'i')

    @given(bounded_posets())
    def test_perp_is_symmetric(self, bp):
        table = plus_table(bp)
        for x in range(bp.size):
            for y in range(bp.size):
                assert (table[x] >> y & 1) == (table[y] >> x & 1)

    @given(bounded_posets(), st.data())
    def test_bi_plus_is_closure(self, bp, data):
        mask = data.draw(st.integers(0, bp.base.full_mask))
        closed = bi_plus_mask(bp, mask)
        assert mask & ~closed == 0
        assert bi_plus_mask(bp, closed) == closed
        assert plus_mask(bp, closed) == plus_mask(bp, mask)


class TestClosedSets:

    def test_pentagon_closed_sets(self, fixture):
        cl = closed_sets(fixture('n5'))
        assert len(cl) == 6
        assert cl.axioms.holds
        assert sorted(cl.labels()) == sorted(['{}', '{0}', '{b}', '{a,c}', '{1}', '{0,a,b,c,1}'])
        assert is_isomorphic(cl.as_bounded(), fixture('fig3'))

    def test_pentagon_orthocomplement_under_names(self, fixture):
        cl = closed_sets(fixture('n5'))
        target = fixture('fig3')
        labels = cl.labels()
        index = [target.names.index(label) for label in labels]
        mapping = [0] * len(cl)
        for i, j in enumerate(cl.ortho):
            mapping[index[i]] = index[j]
        assert [target.names[x] for x in mapping] == ['{0,a,b,c,1}', '{1}', '{a,c}', '{b}', '{0}', '{}']
        assert is_orthocomplementation(target, mapping).holds

    def test_ten_element_closed_sets(self, fixture):
        cl = closed_sets(fixture('fig4'))
        assert len(cl) == 10
        assert is_isomorphic(cl.as_bounded(), fixture('fig5'))

    def test_orthocomplement_is_involution(self, fixture):
        cl = closed_sets(fixture('fig4'))
        for i in range(len(cl)):
            assert cl.ortho[cl.ortho[i]] == i

    def test_members_are_closed(self, fixture):
        bp = fixture('fig8')
        for subset in closed_sets(bp).elements:
            assert is_closed(bp, subset)

    @given(bounded_posets())
    def test_always_an_ortholattice(self, bp):
        assert closed_sets(bp).axioms.holds

"""
Tests for the set-valued operators and their laws.
"""

import pytest
from hypothesis import given

from core import registry
from core.errors import SizeCapExceeded
from core.residuation import (
    MONOTONICITY, THEOREM_NAMES, adjointness_report, apply_operator, circ, condition, condition_sides,
    hook, imp, odot, operator_identities, theorem_implications
)
from strategies import bounded_posets


def names(subset):
    return subset.names()


class TestOperators:

    def test_circ_is_max_of_lower_cone(self, fixture):
        bp = fixture('n5')
        assert names(circ(bp, 'c', 'a')) == ['a']
        assert names(circ(bp, 'a', 'b')) == ['0']

    def test_imp(self, fixture):
        bp = fixture('n5')
        assert names(imp(bp, 'b', 'a')) == ['c']
        assert names(imp(bp, 'a', 'c')) == ['1']
        assert names(imp(bp, '1', 'b')) == ['b']

    def test_hook_and_odot(self, fixture):
        bp = fixture('n5')
        assert names(hook(bp, 'a', 'b')) == ['b']
        assert names(odot(bp, 'a', '1')) == ['a']

    def test_apply_operator_by_index(self, fixture):
        bp = fixture('n5')
        assert apply_operator(bp, 'circ', 3, 1) == circ(bp, 'c', 'a')

    @given(bounded_posets())
    def test_identities_hold_everywhere(self, bp):
        assert operator_identities(bp).holds

    @given(bounded_posets())
    def test_monotonicities_hold_everywhere(self, bp):
        for name in ('circ-monotone-left', 'odot-monotone-left',
                     'imp-monotone-right', 'hook-monotone-right'):
            assert MONOTONICITY[name](bp).holds


class TestAdjointness:

    @pytest.mark.parametrize('name', ['fig9', 'twochain'])
    def test_boolean_posets_are_adjoint(self, fixture, name):
        report = adjointness_report(fixture(name))
        assert report.holds

    def test_circ_imp_forward_on_complemented_non_lattice(self, fixture):
        assert registry.check('circ-imp-forward', fixture('fig8')).holds


class TestConditions:

    def test_element_conditions_on_fig8(self, fixture):
        bp = fixture('fig8')
        assert condition(bp, 1).holds
        assert condition(bp, 3).holds

    def test_condition_sides_are_masks(self, fixture):
        bp = fixture('fig9')
        contained, container = condition_sides(bp, 1, bp.bottom, bp.top)
        assert contained & ~container == 0

    def test_subset_conditions_respect_cap(self, fixture):
        bp = fixture('fig8')
        with pytest.raises(SizeCapExceeded):
            condition(bp, 5, cap=4)
        report = condition(bp, 6, cap=4, sample=20, seed=3)
        assert not report.exhaustive
        assert report.samples == 20

    def test_unknown_condition(self, fixture):
        with pytest.raises(ValueError):
            condition(fixture('fig9'), 7)
        with pytest.raises(ValueError):
            condition_sides(fixture('fig9'), 5, 0, 1)


class TestTheoremInstances:

    def test_vacuous_without_complements(self, fixture):
        reports = theorem_implications(fixture('chain4'))
        assert [r.property for r in reports] == list(THEOREM_NAMES)
        assert all(r.holds and r.vacuous for r in reports)

    def test_boolean_remark(self, fixture):
        reports = {r.property: r for r in theorem_implications(fixture('fig9'))}
        assert reports['boolean-remark'].holds
        assert not reports['boolean-remark'].vacuous

"""
Tests for the named operation dispatch and derived posets.
"""

import pytest

from core.errors import PosetkitError, SizeCapExceeded, UnknownName
from core.operations import derive, evaluate, evaluate_names, format_result, parse_set


class TestEvaluate:

    def test_plus_of_element_and_set(self, fixture):
        bp = fixture('fig8')
        assert format_result(evaluate(bp, 'plus', ['a'])) == '{c,d,g,h}'
        assert evaluate_names(bp, 'plus', ['{a,b}']) == ['c', 'd', 'g', 'h']
        assert evaluate_names(bp, 'plus', ['{}']) == list(bp.names)

    def test_binary_operator(self, fixture):
        bp = fixture('n5')
        assert evaluate_names(bp, 'imp', ['b', 'a']) == ['c']

    def test_cones_and_hull(self, fixture):
        bp = fixture('fig9')
        assert evaluate_names(bp, 'U', ['a,b']) == ['1']
        assert evaluate_names(bp, 'L', ['{a,b}']) == ['0']
        assert evaluate_names(bp, 'min', ['a,b,1']) == ['a', 'b']
        assert evaluate_names(bp, 'hull', ['0,1']) == ['0', 'a', 'b', '1']

    def test_bounds(self, fixture):
        assert evaluate(fixture('fig9'), 'sup', ['a,b']) == '1'
        assert evaluate(fixture('fig9'), 'inf', ['a,b']) == '0'
        assert evaluate(fixture('fig8'), 'sup', ['a,b']) is None
        assert format_result(None) == 'none'

    def test_errors(self, fixture):
        bp = fixture('fig9')
        with pytest.raises(PosetkitError):
            evaluate(bp, 'sqrt', ['a'])
        with pytest.raises(PosetkitError):
            evaluate(bp, 'circ', ['a'])
        with pytest.raises(UnknownName):
            evaluate(bp, 'plus', ['z'])

    def test_parse_set(self, fixture):
        bp = fixture('fig9')
        assert parse_set(bp, ' { a , b } ').names() == ['a', 'b']
        assert parse_set(bp, '{}').names() == []


class TestDerive:

    def test_closed_sets(self, fixture):
        derived = derive(fixture('n5'), 'cl')
        assert derived.poset.size == 6
        assert derived.verification.holds
        assert derived.orthocomplement['{b}'] == '{a,c}'
        assert derived.orthocomplement['{}'] == '{0,a,b,c,1}'
        assert derived.embedding is None

    def test_completion_embedding(self, fixture):
        derived = derive(fixture('twochain'), 'dm')
        assert derived.poset.size == 2
        assert set(derived.embedding) == {'0', '1'}

    def test_convex_sets(self, fixture):
        derived = derive(fixture('fig9'), 'conv')
        assert derived.poset.size == 12
        with pytest.raises(SizeCapExceeded):
            derive(fixture('fig8'), 'conv', conv_cap=4)

    def test_unknown_kind(self, fixture):
        with pytest.raises(PosetkitError):
            derive(fixture('fig9'), 'powerset')

"""
Tests for the structural properties: lattices, distributivity, complements,
antitone conditions and the De Morgan laws.
"""

import pytest
from hypothesis import given

from core import registry
from core.structure import (
    antitone_pair, complement_map, de_morgan_sides, is_boolean, is_complemented, is_distributive,
    is_lattice, is_modular, is_orthocomplementation, is_pseudocomplemented, is_uniquely_complemented
)
from strategies import bounded_posets


@pytest.mark.parametrize('name, prop, expected', [
    ('n5', 'lattice', True),
    ('n5', 'distributive', False),
    ('n5', 'modular', False),
    ('n5', 'complemented', True),
    ('n5', 'uniquely-complemented', False),
    ('n5', 'n5-with-bounds', True),
    ('n5', 'pseudocomplemented', True),
    ('fig9', 'boolean', True),
    ('fig9', 'modular', True),
    ('fig9', 'uniquely-complemented', True),
    ('fig9', 'de-morgan', True),
    ('fig9', 'n5-with-bounds', False),
    ('twochain', 'boolean', True),
    ('chain4', 'complemented', False),
    ('chain4', 'distributive', True),
    ('fig8', 'lattice', False),
    ('fig8', 'complemented', True),
])
def test_fixture_properties(fixture, name, prop, expected):
    assert registry.check(prop, fixture(name)).holds is expected


def test_missing_complement_witness(fixture):
    report = is_complemented(fixture('chain4'))
    assert report.witness == {'x': 'i'}


def test_uniquely_complemented_reports_complements(fixture):
    report = is_uniquely_complemented(fixture('n5'))
    assert not report.holds
    assert report.witness == {'x': 'b'}
    assert report.details['complements'] == ['a', 'c']


def test_lattice_failure_names_missing_bound(fixture):
    report = is_lattice(fixture('fig8'))
    assert not report.holds
    assert report.details['missing']


def test_boolean_needs_both_conditions(fixture):
    report = is_boolean(fixture('n5'))
    assert not report.holds
    assert report.details['complemented'] is True
    assert report.details['distributive'] is False


def test_orthocomplementation_of_square(fixture):
    bp = fixture('fig9')
    mapping = complement_map(bp)
    assert [bp.names[x] for x in mapping] == ['1', 'b', 'a', '0']
    assert is_orthocomplementation(bp, mapping).holds


def test_complement_map_needs_unique_complements(fixture):
    assert complement_map(fixture('n5')) is None


def test_antitone_premise_is_order(fixture):
    bp = fixture('n5')
    a, b = bp.base.index['a'], bp.base.index['b']
    for condition in ('i', 'ii', 'iii'):
        assert antitone_pair(bp, condition, a, b)


def test_de_morgan_fails_without_unique_complements(fixture):
    bp = fixture('fig8')
    p = bp.base
    left, right = de_morgan_sides(bp, 'join', p.index['a'], p.index['0'])
    assert left != right
    left, right = de_morgan_sides(bp, 'meet', p.index['a'], p.index['1'])
    assert left != right


def test_unknown_forms_are_rejected(fixture):
    with pytest.raises(ValueError):
        de_morgan_sides(fixture('fig9'), 'sideways', 0, 1)


@given(bounded_posets())
def test_boolean_implies_unique_complements(bp):
    if is_boolean(bp).holds:
        assert is_uniquely_complemented(bp).holds


@given(bounded_posets())
def test_distributive_forms_agree(bp):
    forms = {is_distributive(bp, form).holds for form in (1, 2, 3, 4)}
    assert len(forms) == 1


@given(bounded_posets())
def test_distributive_lattices_are_modular(bp):
    if is_lattice(bp).holds and is_distributive(bp).holds:
        assert is_modular(bp).holds


def test_pseudocomplement_failure_names_maximal_annihilators(fixture):
    report = is_pseudocomplemented(fixture('fig1'))
    assert not report.holds
    assert report.witness['a'] == 'a'
    assert sorted(report.witness['maximal']) == ["a'", "f'"]

"""
Tests for predicate searches and universal verification over enumerated posets.
"""

import pickle
from functools import partial

import pytest

from config.settings import TestingConfig
from core.errors import PosetkitError, PredicateUnknown, SizeCapExceeded
from core.search import SearchSpec, Term, evaluate_class, parse_predicate, run_search
from core.theorems import CheckOptions

NON_UNIQUE = 'complemented & !uniquely-complemented'


def search(**kwargs):
    return run_search(SearchSpec(**kwargs), TestingConfig)


class TestPredicates:

    def test_parse(self):
        assert parse_predicate('lattice & !boolean') == [Term('lattice'), Term('boolean', negated=True)]
        assert parse_predicate('¬modular ∧ complemented') == [Term('modular', negated=True),
                                                              Term('complemented')]

    @pytest.mark.parametrize('expression', ['', '  ', 'lattice & ', 'no-such-property', 'lattice | boolean'])
    def test_rejects_bad_predicates(self, expression):
        with pytest.raises(PredicateUnknown):
            parse_predicate(expression)


class TestFind:

    def test_find_all(self):
        result = search(max_size=5, predicate=NON_UNIQUE)
        assert result.examined == 9
        assert result.per_size == {2: 1, 3: 1, 4: 2, 5: 5}
        assert [m.size for m in result.matches] == [5, 5]
        assert result.passed is None

    def test_find_first_stops_at_first_size(self):
        result = search(max_size=6, predicate=NON_UNIQUE, mode='find-first')
        assert len(result.matches) == 1
        assert 6 not in result.per_size

    def test_smallest_size_has_one_class(self):
        result = search(max_size=2, predicate='boolean')
        assert result.examined == 1
        assert len(result.matches) == 1

    def test_min_size(self):
        result = search(max_size=5, min_size=5, predicate='lattice')
        assert result.per_size == {5: 5}

    def test_result_independent_of_workers(self):
        single = search(max_size=6, predicate=NON_UNIQUE, threads=1)
        several = search(max_size=6, predicate=NON_UNIQUE, threads=4)
        assert [m.canonical for m in single.matches] == [m.canonical for m in several.matches]
        assert single.per_size == several.per_size
        assert [r.holds for m in several.matches for r in m.reports] == \
            [r.holds for m in single.matches for r in m.reports]

    def test_class_evaluation_pickles(self, fixture):
        evaluate = partial(evaluate_class, parse_predicate(NON_UNIQUE), None, CheckOptions(sample=5, seed=1))
        again = pickle.loads(pickle.dumps(evaluate))
        assert again(fixture('n5')) == evaluate(fixture('n5'))

    def test_size_cap_error_pickles(self):
        error = pickle.loads(pickle.dumps(SizeCapExceeded('conv-star', 18, 14)))
        assert (error.operation, error.size, error.cap) == ('conv-star', 18, 14)
        assert str(error) == 'conv-star: size 18 exceeds cap 14'

    def test_included_posets_keep_their_names(self, fixture):
        result = search(max_size=2, predicate='complemented & !lattice',
                        include=[fixture('fig8')], enumerate=False)
        assert result.examined == 1
        assert result.matches[0].poset.names == fixture('fig8').names


class TestVerify:

    def test_universal_suite_passes(self):
        result = search(max_size=5, suite='galois-lemma', mode='verify-universal')
        assert result.passed is True
        assert result.matches == []
        assert result.statistics['galois-lemma']['verified'] == 9

    def test_suite_requires_verify_mode(self):
        with pytest.raises(PosetkitError):
            search(max_size=4, suite='cone-laws')

    def test_unknown_suite(self):
        with pytest.raises(PredicateUnknown):
            search(max_size=4, suite='no-such-suite', mode='verify-universal')

    def test_predicate_xor_suite(self):
        with pytest.raises(PosetkitError):
            search(max_size=4)
        with pytest.raises(PosetkitError):
            search(max_size=4, predicate='lattice', suite='cone-laws', mode='verify-universal')

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            search(max_size=13, predicate='lattice')

"""
Tests for the fixture corpus: manifest validation and the recorded facts.
"""

import pytest

from config.settings import TestingConfig
from core.errors import ManifestError
from core.fixtures import FixtureCorpus

FIXTURE_NAMES = ['fig1', 'fig2', 'fig3', 'fig4', 'fig5', 'fig6', 'fig7', 'fig8', 'fig9', 'fig10',
                 'n5', 'twochain', 'chain4']


def corpus_in(directory, manifest):
    (directory / 'manifest.yaml').write_text(manifest, encoding='utf-8')
    config = type('TmpConfig', (TestingConfig,), {
        'FIXTURES_DIR': directory,
        'MANIFEST_FILE': directory / 'manifest.yaml',
    })
    return FixtureCorpus(config)


def test_manifest_lists_every_fixture(corpus):
    assert corpus.names() == FIXTURE_NAMES


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_recorded_facts_hold(corpus, name):
    outcomes = corpus.check_fixture(name)
    assert outcomes
    failed = [(o.claim, o.observed) for o in outcomes if not o.passed]
    assert failed == []


def test_sizes(corpus):
    sizes = {name: corpus.load(name).size for name in ('fig2', 'fig3', 'fig5', 'fig9', 'fig10')}
    assert sizes == {'fig2': 5, 'fig3': 6, 'fig5': 10, 'fig9': 4, 'fig10': 12}


def test_fact_that_does_not_hold(corpus):
    outcome = corpus.check_fact('n5', {'property': 'distributive', 'holds': True})
    assert not outcome.passed
    assert outcome.observed is False


def test_fails_at_reports_sides(corpus):
    outcome = corpus.check_fact('fig8', {'fails_at': 'de-morgan-join', 'at': {'x': 'a', 'y': '0'}})
    assert outcome.passed
    left, right = outcome.observed['sides']
    assert left != right


def test_unknown_fixture(corpus):
    with pytest.raises(ManifestError):
        corpus.entry('fig99')


class TestManifestValidation:

    def test_missing_manifest(self, tmp_path):
        config = type('TmpConfig', (TestingConfig,), {
            'FIXTURES_DIR': tmp_path, 'MANIFEST_FILE': tmp_path / 'manifest.yaml'})
        with pytest.raises(ManifestError):
            FixtureCorpus(config).names()

    def test_invalid_yaml(self, tmp_path):
        with pytest.raises(ManifestError):
            corpus_in(tmp_path, "fixtures: [unclosed\n").names()

    def test_missing_file(self, tmp_path):
        manifest = "version: 1\nfixtures:\n  p:\n    file: p.poset\n    facts: []\n"
        with pytest.raises(ManifestError):
            corpus_in(tmp_path, manifest).names()

    def test_fact_without_claim(self, tmp_path):
        (tmp_path / 'p.poset').write_text("elements: 0 1\ncovers:\n0 < 1\n", encoding='utf-8')
        manifest = ("version: 1\nfixtures:\n  p:\n    file: p.poset\n    facts:\n"
                    "      - property: lattice\n")
        with pytest.raises(ManifestError):
            corpus_in(tmp_path, manifest).names()

    def test_dangling_reference(self, tmp_path):
        (tmp_path / 'p.poset').write_text("elements: 0 1\ncovers:\n0 < 1\n", encoding='utf-8')
        manifest = ("version: 1\nfixtures:\n  p:\n    file: p.poset\n    facts:\n"
                    "      - derive: dm\n        isomorphic_to: q\n")
        with pytest.raises(ManifestError):
            corpus_in(tmp_path, manifest).names()

    def test_minimal_manifest(self, tmp_path):
        (tmp_path / 'p.poset').write_text("elements: 0 1\ncovers:\n0 < 1\n", encoding='utf-8')
        manifest = ("version: 1\nfixtures:\n  p:\n    file: p.poset\n    facts:\n"
                    "      - property: boolean\n        holds: true\n")
        corpus = corpus_in(tmp_path, manifest)
        assert corpus.names() == ['p']
        assert all(o.passed for o in corpus.check_all())


def test_duplicate_fixture_name(tmp_path):
    (tmp_path / 'p.poset').write_text("elements: 0 1\ncovers:\n0 < 1\n", encoding='utf-8')
    entry = "  p:\n    file: p.poset\n    facts:\n      - property: lattice\n        holds: true\n"
    with pytest.raises(ManifestError, match='duplicate key'):
        corpus_in(tmp_path, "version: 1\nfixtures:\n" + entry + entry).names()


def test_orthocomplement_fact_is_checked_on_target(corpus):
    fact = next(f for f in corpus.entry('fig2')['facts'] if 'orthocomplement' in f)
    outcome = corpus.check_fact('fig2', fact)
    assert outcome.passed
    assert outcome.details['orthocomplement_on_target'] is True

    swapped = dict(fact['orthocomplement'], **{'{0}': '{b}', '{b}': '{0}'})
    outcome = corpus.check_fact('fig2', dict(fact, orthocomplement=swapped))
    assert not outcome.passed


def test_witness_sets_compare_in_any_order(corpus):
    fact = {'property': 'pseudocomplemented', 'holds': False,
            'witness': {'a': 'a', 'maximal': ["f'", "a'"]}}
    assert corpus.check_fact('fig1', fact).passed

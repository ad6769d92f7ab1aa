"""
Tests for the posetkit command line.
"""

import json

import pytest
from click.testing import CliRunner

from app import create_cli
from core.poset_file import parse_poset


@pytest.fixture(scope='module')
def cli():
    return create_cli('testing')


@pytest.fixture
def run(cli):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args))
    return invoke


class TestOp:

    def test_plus(self, run):
        result = run('op', 'fig8', 'plus', 'a')
        assert result.exit_code == 0
        assert result.output == '{c,d,g,h}\n'

    def test_missing_supremum(self, run):
        assert run('op', 'fig8', 'sup', 'a,b').output == 'none\n'

    def test_binary_operator(self, run):
        assert run('op', 'n5', 'imp', 'b', 'a').output == '{c}\n'

    def test_poset_file_source(self, run, tmp_path):
        path = tmp_path / 'v.poset'
        path.write_text("elements: 0 a b 1\ncovers:\n0 < a\n0 < b\na < 1\nb < 1\n", encoding='utf-8')
        assert run('op', str(path), 'plus', 'a').output == '{b}\n'

    def test_unknown_element_exits_2(self, run):
        result = run('op', 'fig8', 'plus', 'z')
        assert result.exit_code == 2
        assert 'error:' in result.output

    def test_unknown_operation_is_usage_error(self, run):
        assert run('op', 'fig8', 'sqrt', 'a').exit_code == 2


class TestCheck:

    def test_text_reports(self, run):
        result = run('check', 'fig9', '--props', 'lattice,boolean')
        assert result.exit_code == 0
        assert result.output.splitlines() == ['lattice: true', 'boolean: true']

    def test_witness_is_printed(self, run):
        result = run('check', 'chain4', '--props', 'complemented')
        assert result.output == 'complemented: false  at x=i\n'

    def test_capped_property_is_skipped(self, run):
        result = run('check', 'fig7', '--props', 'conv-poset,lattice')
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == 'conv-poset: true (skipped: conv_star: size 18 exceeds cap 14)'
        assert lines[1].startswith('lattice: ')

    def test_sampled_witnesses_repeat_for_a_seed(self, run):
        args = ('check', 'fig7', '--props', 'condition-5,condition-6', '--sample', '30',
                '--seed', '5', '--json')
        first, second = run(*args), run(*args)
        assert first.exit_code == 0
        assert first.output == second.output
        reports = json.loads(first.output)['reports']
        assert all(not r['exhaustive'] and r['samples'] == 30 for r in reports)

    def test_failed_expectation_exits_1(self, run):
        result = run('check', 'n5', '--props', 'lattice', '--expect', 'distributive=true')
        assert result.exit_code == 1
        assert 'expectation failed: distributive expected true, got false' in result.output

    def test_met_expectation_adds_property(self, run):
        result = run('check', 'n5', '--props', 'lattice', '--expect', 'modular=false')
        assert result.exit_code == 0
        assert 'modular: false' in result.output

    def test_bad_expectation_syntax(self, run):
        assert run('check', 'n5', '--expect', 'modular').exit_code == 2

    def test_json(self, run):
        result = run('check', 'fig9', '--props', 'lattice', '--json')
        document = json.loads(result.output)
        assert document['size'] == 4
        assert document['reports'][0]['property'] == 'lattice'
        assert document['reports'][0]['holds'] is True

    def test_unknown_property_exits_2(self, run):
        assert run('check', 'fig9', '--props', 'nonsense').exit_code == 2

    def test_unknown_source_exits_2(self, run):
        result = run('check', 'no-such-poset')
        assert result.exit_code == 2
        assert "No poset file or fixture named 'no-such-poset'" in result.output

    def test_syntax_error_exits_2(self, run, tmp_path):
        path = tmp_path / 'bad.poset'
        path.write_text("elements: a b\ncovers:\na < c\n", encoding='utf-8')
        result = run('check', str(path))
        assert result.exit_code == 2
        assert ':3:5:' in result.output

    def test_properties_listing(self, run):
        lines = run('properties').output.splitlines()
        assert 'lattice' in lines
        assert lines == sorted(lines)


class TestDerive:

    def test_closed_sets_as_poset_file(self, run):
        result = run('derive', 'n5', 'cl')
        assert result.exit_code == 0
        assert result.output.startswith('# closed subsets of n5: 6 elements\n')
        assert parse_poset(result.output).size == 6

    def test_json(self, run):
        document = json.loads(run('derive', 'fig9', 'conv', '--json').output)
        assert document['kind'] == 'conv'
        assert document['size'] == 12
        assert document['verification']['holds'] is True

    def test_yaml(self, run):
        result = run('derive', 'twochain', 'dm', '--format', 'yaml')
        assert result.exit_code == 0
        assert 'kind: dm' in result.output

    def test_completion_of_unbounded_poset(self, run, tmp_path):
        path = tmp_path / 'antichain.poset'
        path.write_text('elements: x y\n', encoding='utf-8')
        result = run('derive', str(path), 'dm')
        assert result.exit_code == 0
        assert parse_poset(result.output).size == 4

    def test_closed_sets_need_bounds(self, run, tmp_path):
        path = tmp_path / 'antichain.poset'
        path.write_text('elements: x y\n', encoding='utf-8')
        result = run('derive', str(path), 'cl')
        assert result.exit_code == 2
        assert 'no least element' in result.output

    def test_dot_side_output(self, run, tmp_path):
        path = tmp_path / 'cl.dot'
        assert run('derive', 'n5', 'cl', '--dot', str(path)).exit_code == 0
        assert path.read_text(encoding='utf-8').startswith('digraph')


class TestDot:

    def test_stdout(self, run):
        result = run('dot', 'fig9', '-')
        assert result.output.startswith('digraph "poset" {')
        assert '  n0 -> n1 [arrowhead=none];' in result.output

    def test_file(self, run, tmp_path):
        path = tmp_path / 'square.dot'
        assert run('dot', 'fig9', str(path)).exit_code == 0
        assert 'rankdir=BT;' in path.read_text(encoding='utf-8')

    def test_unbounded_poset(self, run, tmp_path):
        path = tmp_path / 'antichain.poset'
        path.write_text('elements: x y\n', encoding='utf-8')
        result = run('dot', str(path), '-')
        assert result.exit_code == 0
        assert 'n0 [label="x"];' in result.output
        assert '->' not in result.output


class TestSearch:

    def test_find(self, run):
        result = run('search', '--max-n', '5', '--find', 'complemented & !uniquely-complemented')
        assert result.exit_code == 0
        assert 'matches: 2' in result.output.splitlines()

    def test_verify(self, run):
        result = run('search', '--max-n', '4', '--verify', 'galois-lemma')
        assert result.exit_code == 0
        assert 'passed: true' in result.output.splitlines()

    def test_json(self, run):
        document = json.loads(run('search', '--max-n', '4', '--find', 'lattice', '--json').output)
        assert document['mode'] == 'find-all'
        assert document['per_size'] == {'2': 1, '3': 1, '4': 2}
        assert 'elapsed' not in document

    def test_unknown_predicate_exits_2(self, run):
        assert run('search', '--max-n', '4', '--find', 'nonsense').exit_code == 2

    def test_find_and_verify_conflict(self, run):
        result = run('search', '--max-n', '4', '--find', 'lattice', '--verify', 'cone-laws')
        assert result.exit_code == 2


class TestFixtures:

    def test_listing(self, run):
        lines = run('fixtures').output.splitlines()
        assert len(lines) == 13
        assert lines[0].split('\t')[:3] == ['fig1', '14', 'fig1.poset']

    def test_check(self, run):
        result = run('fixtures', 'n5', 'fig9', '--check')
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == '0 failed'

"""
Tests for the poset file format and structured poset documents.
"""

import pytest
import yaml

from core.errors import CycleDetected, PosetkitError, PosetSyntaxError
from core.poset_file import (
    dump_yaml, load_poset, load_yaml, parse_poset, poset_document, poset_from_document,
    read_poset_file, serialize_poset
)

SQUARE = """\
# a comment
elements: 0 a b 1

covers:
0 < a
0 < b   # trailing text is not allowed here
"""


class TestGrammar:

    def test_parse(self):
        p = parse_poset("elements: 0 a b 1\ncovers:\n0 < a\n0 < b\na < 1\nb < 1\n")
        assert p.names == ('0', 'a', 'b', '1')
        assert p.le('0', '1')

    def test_comments_blank_lines_and_indentation(self):
        text = "# header\n\n  elements: x y\n covers:\n   x < y\n"
        parsed = read_poset_file(text)
        assert parsed.names == ['x', 'y']
        assert parsed.covers == [('x', 'y')]
        assert parsed.cover_lines == [5]

    def test_covers_section_may_be_empty(self):
        p = parse_poset("elements: a b\ncovers:\n")
        assert not p.le('a', 'b')

    @pytest.mark.parametrize('text, line, column', [
        ("covers:\n", 1, 1),
        ("", 1, 1),
        ("elements: a b\nelements: c\n", 2, 1),
        ("elements: a a\n", 1, 13),
        ("elements: a<b\n", 1, 12),
        ("elements: a #b\n", 1, 13),
        ("elements:\n", 1, 1),
        ("elements: a b\na < b\n", 2, 1),
        ("elements: a b\ncovers:\ncovers:\n", 3, 1),
        ("elements: a b\ncovers:\na b\n", 3, 1),
        ("elements: a b\ncovers:\na < b < a\n", 3, 1),
        ("elements: a b\ncovers:\na < z\n", 3, 5),
        ("elements: a b\ncovers:\n  q < b\n", 3, 3),
        ("elements: a b\ncovers:\na < b\nelements: c\n", 4, 1),
    ])
    def test_errors_carry_position(self, text, line, column):
        with pytest.raises(PosetSyntaxError) as info:
            read_poset_file(text, path='bad.poset')
        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"bad.poset:{line}:{column}: ")

    def test_trailing_text_on_cover_line(self):
        with pytest.raises(PosetSyntaxError) as info:
            read_poset_file(SQUARE)
        assert info.value.line == 6

    def test_cycle(self):
        with pytest.raises(CycleDetected):
            parse_poset("elements: a b\ncovers:\na < b\nb < a\n")


class TestSerialization:

    @pytest.mark.parametrize('name', ['fig4', 'fig7', 'n5'])
    def test_round_trip(self, corpus, name):
        p = corpus.load(name)
        again = parse_poset(serialize_poset(p))
        assert again.names == p.names
        assert (again.leq == p.leq).all()

    def test_comment_lines(self, corpus):
        text = serialize_poset(corpus.load('twochain'), comment='first\nsecond')
        assert text == "# first\n# second\nelements: 0 1\ncovers:\n0 < 1\n"

    def test_missing_file(self, tmp_path):
        with pytest.raises(PosetkitError):
            load_poset(tmp_path / 'absent.poset')

    def test_load_from_disk(self, tmp_path):
        path = tmp_path / 'v.poset'
        path.write_text("elements: 0 a b\ncovers:\n0 < a\n0 < b\n", encoding='utf-8')
        assert load_poset(path).size == 3


class TestDocuments:

    def test_document_of_bounded_poset(self, fixture):
        document = poset_document(fixture('fig9'), name='square')
        assert list(document) == ['name', 'elements', 'covers', 'bottom', 'top']
        assert document['covers'][0] == ['0', 'a']
        assert (document['bottom'], document['top']) == ('0', '1')

    def test_document_round_trip(self, fixture):
        bp = fixture('fig8')
        again = poset_from_document(poset_document(bp))
        assert (again.leq == bp.base.leq).all()

    @pytest.mark.parametrize('document', [
        {'elements': []},
        {'elements': ['a', 'a']},
        {'elements': ['a b']},
        {'elements': ['a', 'b'], 'covers': [['a', 'c']]},
        {'elements': ['a', 'b'], 'covers': [['a']]},
        {'elements': ['a', 'b'], 'bottom': 'a', 'top': 'a'},
    ])
    def test_invalid_documents(self, document):
        with pytest.raises(PosetkitError):
            poset_from_document(document)

    def test_yaml_keeps_key_order(self, fixture):
        text = dump_yaml(poset_document(fixture('fig9')))
        assert text.splitlines()[0].startswith('name:')
        assert list(load_yaml(text)) == ['name', 'elements', 'covers', 'bottom', 'top']

    def test_yaml_writes_names_and_covers_inline(self, fixture):
        text = dump_yaml(poset_document(fixture('fig9')))
        assert "elements: ['0', a, b, '1']" in text
        assert "- ['0', a]" in text
        assert load_yaml(text)['covers'][0] == ['0', 'a']

    def test_yaml_rejects_duplicate_keys(self):
        with pytest.raises(yaml.YAMLError, match='duplicate key'):
            load_yaml("elements: [a]\nelements: [b]\n")

"""
Posetkit - Poset Files

Reads and writes the line-oriented poset file format and the structured
(JSON/YAML) poset documents used for machine-readable output.

File format::

    # comment
    elements: 0 a b 1
    covers:
    0 < a
    0 < b
    a < 1
    b < 1
"""

import logging
import re
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from marshmallow import ValidationError

from api.validators.poset_schema import PosetDocumentSchema
from core.errors import PosetkitError, PosetSyntaxError
from core.poset import BoundedPoset, Poset, PosetLike, as_bounded, from_covers, poset_of

logger = logging.getLogger('posetkit.poset_file')

_TOKEN = re.compile(r'[^\s<]+')


class UniqueKeyLoader(yaml.SafeLoader):
    """Safe YAML loader that rejects a mapping key given twice, such as a repeated fixture name."""
    pass


class PosetYAMLDumper(yaml.SafeDumper):
    """Safe YAML dumper that keeps schema key order and writes name lists and cover pairs inline."""
    pass


def construct_unique_mapping(loader, node, deep=False):
    loader.flatten_mapping(node)
    mapping = {}
    for key_node, value_node in node.value:
        key = loader.construct_object(key_node, deep=deep)
        if key in mapping:
            raise yaml.constructor.ConstructorError(
                'while constructing a mapping', node.start_mark,
                f"found duplicate key {key!r}", key_node.start_mark)
        mapping[key] = loader.construct_object(value_node, deep=deep)
    return mapping


def represent_mapping_in_order(dumper, data):
    return dumper.represent_mapping('tag:yaml.org,2002:map', data.items())


def represent_name_list(dumper, data):
    inline = all(isinstance(item, (str, int, bool)) for item in data)
    return dumper.represent_sequence('tag:yaml.org,2002:seq', data, flow_style=inline or None)


UniqueKeyLoader.add_constructor(yaml.resolver.BaseResolver.DEFAULT_MAPPING_TAG, construct_unique_mapping)
PosetYAMLDumper.add_representer(OrderedDict, represent_mapping_in_order)
PosetYAMLDumper.add_representer(list, represent_name_list)


def dump_yaml(data: Any) -> str:
    return yaml.dump(data, Dumper=PosetYAMLDumper, default_flow_style=False,
                     allow_unicode=True, sort_keys=False)


def load_yaml(text: str) -> Any:
    """
    Parse YAML with the safe loader.

    Raises:
        yaml.YAMLError: on malformed input or a duplicate mapping key
    """
    return yaml.load(text, Loader=UniqueKeyLoader)


@dataclass
class PosetFile:
    """
    Parsed content of a poset file before the order is built.

    Attributes:
        path: source path, if read from disk
        names: element names in file order
        covers: (lower, upper) name pairs in file order
        cover_lines: source line of each cover pair
    """

    path: Optional[str]
    names: List[str]
    covers: List[Tuple[str, str]] = field(default_factory=list)
    cover_lines: List[int] = field(default_factory=list)

    def build(self) -> Poset:
        return from_covers(self.names, self.covers)


def _tokens(line: str) -> List[Tuple[int, str]]:
    """Tokens of a line with their 1-based columns."""
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]


def read_poset_file(text: str, path: Optional[str] = None) -> PosetFile:
    """
    Tokenize a poset file.

    Args:
        text: file content
        path: shown in error messages

    Returns:
        PosetFile: names and cover pairs, not yet checked for cycles

    Raises:
        PosetSyntaxError: with the line and column of the first violation
    """
    names: Optional[List[str]] = None
    covers: List[Tuple[str, str]] = []
    cover_lines: List[int] = []
    in_covers = False
    known: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        indent = len(raw) - len(raw.lstrip())

        if stripped.startswith('elements:'):
            if names is not None:
                raise PosetSyntaxError("'elements:' may appear only once", lineno, indent + 1, path)
            if in_covers:
                raise PosetSyntaxError("'elements:' must precede 'covers:'", lineno, indent + 1, path)
            offset = indent + len('elements:')
            names = []
            for column, token in _tokens(raw[offset:]):
                if token.startswith('#'):
                    raise PosetSyntaxError(f"Element name may not start with '#': '{token}'",
                                           lineno, offset + column, path)
                if token in known:
                    raise PosetSyntaxError(f"Duplicate element name '{token}'", lineno, offset + column, path)
                known[token] = len(names)
                names.append(token)
            if '<' in raw[offset:]:
                raise PosetSyntaxError("Element names may not contain '<'",
                                       lineno, offset + raw[offset:].index('<') + 1, path)
            if not names:
                raise PosetSyntaxError("'elements:' lists no elements", lineno, indent + 1, path)
            continue

        if stripped == 'covers:':
            if names is None:
                raise PosetSyntaxError("missing 'elements:' header before 'covers:'", lineno, indent + 1, path)
            if in_covers:
                raise PosetSyntaxError("'covers:' may appear only once", lineno, indent + 1, path)
            in_covers = True
            continue

        if names is None:
            raise PosetSyntaxError("missing 'elements:' header", lineno, indent + 1, path)
        if not in_covers:
            raise PosetSyntaxError("cover line outside the 'covers:' section", lineno, indent + 1, path)

        parts = raw.split('<')
        if len(parts) != 2:
            raise PosetSyntaxError("expected '<lower> < <upper>'", lineno, indent + 1, path)
        lower = _tokens(parts[0])
        upper = _tokens(parts[1])
        if len(lower) != 1 or len(upper) != 1:
            raise PosetSyntaxError("expected exactly one element on each side of '<'",
                                   lineno, indent + 1, path)
        upper_offset = len(parts[0]) + 1
        for column, token in ((lower[0][0], lower[0][1]), (upper_offset + upper[0][0], upper[0][1])):
            if token not in known:
                raise PosetSyntaxError(f"unknown element '{token}'", lineno, column, path)
        covers.append((lower[0][1], upper[0][1]))
        cover_lines.append(lineno)

    if names is None:
        raise PosetSyntaxError("missing 'elements:' header", max(1, len(text.splitlines())), 1, path)
    return PosetFile(path=path, names=names, covers=covers, cover_lines=cover_lines)


def parse_poset(text: str, path: Optional[str] = None) -> Poset:
    """
    Parse poset file text into a Poset.

    Raises:
        PosetSyntaxError: on grammar violations
        CycleDetected: if the covers close a cycle
    """
    parsed = read_poset_file(text, path)
    poset = parsed.build()
    logger.debug(f"Parsed {path or '<text>'}: {poset.size} elements, {len(parsed.covers)} covers")
    return poset


def serialize_poset(p: PosetLike, comment: Optional[str] = None) -> str:
    """
    Render a poset in the file format, covers in element order.

    parse_poset(serialize_poset(p)) has the same names and order as p.
    """
    base = poset_of(p)
    lines = []
    if comment:
        lines.extend(f"# {line}".rstrip() for line in comment.splitlines())
    lines.append('elements: ' + ' '.join(base.names))
    lines.append('covers:')
    for lo, hi in base.cover_pairs():
        lines.append(f"{base.names[lo]} < {base.names[hi]}")
    return '\n'.join(lines) + '\n'


def load_poset(path: Union[str, Path]) -> Poset:
    """Read and parse a poset file."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise PosetkitError(f"Cannot read poset file {path}: {e}") from e
    return parse_poset(text, str(path))


def load_bounded(path: Union[str, Path]) -> BoundedPoset:
    """Read a poset file and locate its bounds."""
    return as_bounded(load_poset(path))


# Structured documents

def poset_document(p: PosetLike, name: Optional[str] = None) -> Dict[str, Any]:
    """Poset as an ordered document validated by PosetDocumentSchema."""
    base = poset_of(p)
    document = {
        'name': name,
        'elements': list(base.names),
        'covers': [[base.names[lo], base.names[hi]] for lo, hi in base.cover_pairs()],
        'bottom': base.names[p.bottom] if isinstance(p, BoundedPoset) else None,
        'top': base.names[p.top] if isinstance(p, BoundedPoset) else None,
    }
    return PosetDocumentSchema().dump(document)


def poset_from_document(document: Dict[str, Any]) -> Poset:
    """
    Build a poset from a structured document.

    Raises:
        PosetkitError: if the document fails schema validation
    """
    try:
        data = PosetDocumentSchema().load(document)
    except ValidationError as e:
        raise PosetkitError(f"Invalid poset document: {e.messages}") from e
    return from_covers(data['elements'], [tuple(pair) for pair in data['covers']])

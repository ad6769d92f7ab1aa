"""
Posetkit - DOT Emitter

Renders the cover relation of a poset as a Graphviz digraph. Elements of
equal height share a rank so the drawing reads as a Hasse diagram.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.errors import PosetkitError
from core.poset import PosetLike, poset_of

logger = logging.getLogger('posetkit.dot_emitter')


def _quote(label: str) -> str:
    return '"' + label.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(p: PosetLike, name: str = 'poset') -> str:
    """
    DOT source for the Hasse diagram of p.

    Edges point from lower to upper element; the graph is drawn bottom-up.

    Args:
        p: poset or bounded poset
        name: graph identifier

    Returns:
        str: digraph source, stable for a fixed poset
    """
    base = poset_of(p)
    lines = [f"digraph {_quote(name)} {{", '  rankdir=BT;', '  node [shape=plaintext];']
    for x, label in enumerate(base.names):
        lines.append(f"  n{x} [label={_quote(label)}];")

    ranks: Dict[int, List[int]] = {}
    for x, height in enumerate(base.heights):
        ranks.setdefault(height, []).append(x)
    for height in sorted(ranks):
        members = ' '.join(f"n{x};" for x in ranks[height])
        lines.append(f"  {{ rank=same; {members} }}")

    for lo, hi in base.cover_pairs():
        lines.append(f"  n{lo} -> n{hi} [arrowhead=none];")
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(p: PosetLike, path: Union[str, Path], name: Optional[str] = None) -> Path:
    """Write the DOT rendering of p to path."""
    path = Path(path)
    try:
        path.write_text(to_dot(p, name or path.stem), encoding='utf-8')
    except OSError as e:
        raise PosetkitError(f"Cannot write DOT file {path}: {e}") from e
    logger.info(f"Wrote DOT diagram of {poset_of(p).size} elements to {path}")
    return path

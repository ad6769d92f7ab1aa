"""
Posetkit - Named Operations

Dispatch table behind `posetkit op`, `posetkit derive` and the operation
facts of the fixture manifest. Arguments arrive as text: element names, or sets written
as comma-separated names with optional braces ("a,c", "{a,c}", "{}").
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Union

from config.settings import Config
from core import cones
from core.complementation import closed_sets, plus_elem, plus_set
from core.completion import conv_star, convex_hull, dm_completion
from core.errors import PosetkitError
from core.poset import BoundedPoset, PosetLike, Subset, as_bounded, poset_of
from core.report import PropertyReport
from core.residuation import OPERATORS, apply_operator

logger = logging.getLogger('posetkit.operations')

OpResult = Union[Subset, Optional[str]]

SET_OPERATIONS: Dict[str, Callable[[BoundedPoset, Subset], Subset]] = {
    'U': cones.upper,
    'L': cones.lower,
    'min': cones.min_of,
    'max': cones.max_of,
    'hull': convex_hull,
}

BOUND_OPERATIONS = {'sup': cones.sup_of, 'inf': cones.inf_of}

OPERATION_NAMES = ('plus',) + tuple(OPERATORS) + tuple(SET_OPERATIONS) + tuple(BOUND_OPERATIONS)


def parse_set(bp: BoundedPoset, text: str) -> Subset:
    """
    Parse "a,b", "{a,b}" or "{}" into a subset of bp.

    Raises:
        UnknownName: for a name that is not an element
    """
    body = text.strip()
    if body.startswith('{') and body.endswith('}'):
        body = body[1:-1]
    names = [token.strip() for token in body.split(',') if token.strip()]
    return bp.base.subset(names)


def format_result(result: OpResult) -> str:
    """Sets render as {a,b}, bounds as the element name or 'none'."""
    if isinstance(result, Subset):
        return '{' + ','.join(result.names()) + '}'
    return 'none' if result is None else result


def evaluate(bp: BoundedPoset, op: str, args: Sequence[str]) -> OpResult:
    """
    Evaluate a named operation.

    Args:
        bp: bounded poset
        op: plus, circ, imp, odot, hook, U, L, min, max, hull, sup or inf
        args: one argument, two elements for the binary operators

    Returns:
        A Subset, or for sup/inf the element name or None when absent

    Raises:
        PosetkitError: for an unknown operation or a wrong argument count
        UnknownName: for an argument naming no element
    """
    if op not in OPERATION_NAMES:
        raise PosetkitError(f"Unknown operation '{op}'; expected one of {', '.join(OPERATION_NAMES)}")
    arity = 2 if op in OPERATORS else 1
    if len(args) != arity:
        raise PosetkitError(f"Operation '{op}' takes {arity} argument(s), got {len(args)}")
    logger.debug(f"Evaluating {op}({', '.join(args)})")

    if op in OPERATORS:
        return apply_operator(bp, op, args[0].strip(), args[1].strip())
    if op == 'plus':
        text = args[0].strip()
        if text in bp.base.index:
            return plus_elem(bp, text)
        return plus_set(bp, parse_set(bp, text))
    subset = parse_set(bp, args[0])
    if op in SET_OPERATIONS:
        return SET_OPERATIONS[op](bp, subset)
    bound = BOUND_OPERATIONS[op](bp, subset)
    return None if bound is None else bp.names[bound]


def evaluate_names(bp: BoundedPoset, op: str, args: Sequence[str]) -> Union[List[str], Optional[str]]:
    """evaluate() with sets rendered as name lists."""
    result = evaluate(bp, op, args)
    return result.names() if isinstance(result, Subset) else result


# Derived posets

DERIVATIONS = ('cl', 'dm', 'conv')


@dataclass
class Derived:
    """
    A derived bounded poset with the maps that come with it.

    Attributes:
        kind: cl, dm or conv
        poset: the derived bounded poset, elements named by their subsets
        verification: the structure's own axiom report
        orthocomplement: Cl(P) only, element label to complement label
        embedding: D(P) only, source element to principal cut label
    """

    kind: str
    poset: BoundedPoset
    verification: PropertyReport
    orthocomplement: Optional[Dict[str, str]] = None
    embedding: Optional[Dict[str, str]] = None


def derive(p: PosetLike, kind: str, conv_cap: int = Config.CONV_STAR_CAP) -> Derived:
    """
    Build Cl(P), D(P) or Conv★(P).

    D(P) is built from any poset; Cl(P) and Conv★(P) need a bounded one.

    Raises:
        PosetkitError: for an unknown kind
        NoBottom, NoTop: for cl or conv of a poset without bounds
        SizeCapExceeded: for conv above conv_cap
    """
    if kind in ('cl', 'conv') and not isinstance(p, BoundedPoset):
        p = as_bounded(p)
    if kind == 'cl':
        lattice = closed_sets(p)
        labels = lattice.labels()
        ortho = {labels[i]: labels[j] for i, j in enumerate(lattice.ortho)}
        derived = Derived(kind, lattice.as_bounded(), lattice.axioms, orthocomplement=ortho)
    elif kind == 'dm':
        lattice = dm_completion(p)
        labels = lattice.labels()
        embedding = {lattice.base.names[x]: labels[i] for x, i in enumerate(lattice.embedding)}
        derived = Derived(kind, lattice.as_bounded(), lattice.axioms, embedding=embedding)
    elif kind == 'conv':
        conv = conv_star(p, conv_cap)
        derived = Derived(kind, conv.as_bounded(), conv.axioms)
    else:
        raise PosetkitError(f"Unknown derivation '{kind}'; expected one of {', '.join(DERIVATIONS)}")
    logger.info(f"Derived {kind} of size {derived.poset.size} from a poset of size {poset_of(p).size}")
    return derived

"""
Posetkit - Residuation Operators

The set-valued operators ∘, →, ⊙ and ↪ on a bounded poset, their
monotonicity properties, the adjointness of (∘, →) and (⊙, ↪), the
conditions (1)-(6) and the implications between them.

a ∘ b := Max L(a, b)
a → b := Min U(a⁺, b)
a ⊙ b := Max L(b, U(a, b⁺))
a ↪ b := Min U(a⁺, L(a, b))

Orders between a set and an element use the set order: "A <= z" is
set_le(A, {z}) and "x <= A" is set_le({x}, A).
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from config.settings import Config
from core.complementation import plus_table
from core.completion import cut_masks
from core.cones import (
    le1_mask, le2_mask, lower_mask, max_mask, min_mask, set_le_mask, upper_mask
)
from core.errors import SizeCapExceeded
from core.poset import BoundedPoset, ElementRef, Subset, submasks
from core.report import PropertyReport, bind, mask_names, vacuous_report
from core.structure import is_boolean, is_complemented, is_uniquely_complemented

logger = logging.getLogger('posetkit.residuation')

OperatorMask = Callable[[BoundedPoset, int, int], int]


def _pair(x: int, y: int) -> int:
    return (1 << x) | (1 << y)


# Operators

def circ_mask(bp: BoundedPoset, a: int, b: int) -> int:
    return max_mask(bp, lower_mask(bp, _pair(a, b)))


def imp_mask(bp: BoundedPoset, a: int, b: int) -> int:
    return min_mask(bp, upper_mask(bp, plus_table(bp)[a] | 1 << b))


def odot_mask(bp: BoundedPoset, a: int, b: int) -> int:
    cone = upper_mask(bp, 1 << a | plus_table(bp)[b])
    return max_mask(bp, lower_mask(bp, 1 << b | cone))


def hook_mask(bp: BoundedPoset, a: int, b: int) -> int:
    return min_mask(bp, upper_mask(bp, plus_table(bp)[a] | lower_mask(bp, _pair(a, b))))


def hook_via_max_mask(bp: BoundedPoset, a: int, b: int) -> int:
    """a ↪ b computed as Min U(a⁺, Max L(a, b))."""
    return min_mask(bp, upper_mask(bp, plus_table(bp)[a] | max_mask(bp, lower_mask(bp, _pair(a, b)))))


OPERATORS: Dict[str, OperatorMask] = {
    'circ': circ_mask,
    'imp': imp_mask,
    'odot': odot_mask,
    'hook': hook_mask,
}

SYMBOLS = {'circ': '∘', 'imp': '→', 'odot': '⊙', 'hook': '↪'}


def apply_operator(bp: BoundedPoset, op: str, a: ElementRef, b: ElementRef) -> Subset:
    """
    Evaluate a named operator on two elements.

    Args:
        bp: bounded poset
        op: one of 'circ', 'imp', 'odot', 'hook'
        a, b: element names or indices

    Returns:
        Subset: the operator value
    """
    x, y = bp.base.index_of(a), bp.base.index_of(b)
    return bp.base.from_mask(OPERATORS[op](bp, x, y))


def circ(bp: BoundedPoset, a: ElementRef, b: ElementRef) -> Subset:
    """a ∘ b = Max L(a, b)."""
    return apply_operator(bp, 'circ', a, b)


def imp(bp: BoundedPoset, a: ElementRef, b: ElementRef) -> Subset:
    """a → b = Min U(a⁺ ∪ {b})."""
    return apply_operator(bp, 'imp', a, b)


def odot(bp: BoundedPoset, a: ElementRef, b: ElementRef) -> Subset:
    """a ⊙ b = Max L({b} ∪ U({a} ∪ b⁺))."""
    return apply_operator(bp, 'odot', a, b)


def hook(bp: BoundedPoset, a: ElementRef, b: ElementRef) -> Subset:
    """a ↪ b = Min U(a⁺ ∪ L(a, b))."""
    return apply_operator(bp, 'hook', a, b)


# Easily verified identities

def operator_identities(bp: BoundedPoset) -> PropertyReport:
    """
    Commutativity of ∘, absorption at 1 and under <= for all four operators,
    and the Max L form of ↪.

    x ≤ y ⟹ x → y = {1} and x ≤ y ⟹ x ↪ y = {1} need a complement of x and
    are only checked on complemented posets.
    """
    name = 'operator-identities'
    n = bp.size
    leq = bp.base.leq
    top = 1 << bp.top
    complemented = all(plus_table(bp))

    def fail(identity, **values):
        return PropertyReport(property=name, holds=False, witness=bind(bp, **values),
                              details={'identity': identity})

    for x in range(n):
        if imp_mask(bp, bp.top, x) != 1 << x:
            return fail('1→x=x', x=x)
        if odot_mask(bp, x, bp.top) != 1 << x:
            return fail('x⊙1=x', x=x)
        if hook_mask(bp, bp.top, x) != 1 << x:
            return fail('1↪x=x', x=x)
        for y in range(n):
            if circ_mask(bp, x, y) != circ_mask(bp, y, x):
                return fail('x∘y=y∘x', x=x, y=y)
            if hook_mask(bp, x, y) != hook_via_max_mask(bp, x, y):
                return fail('x↪y=Min U(x⁺,Max L(x,y))', x=x, y=y)
            if not leq[x, y]:
                continue
            if circ_mask(bp, x, y) != 1 << x:
                return fail('x∘y=x', x=x, y=y)
            if odot_mask(bp, y, x) != 1 << x:
                return fail('y⊙x=x', x=x, y=y)
            if complemented and imp_mask(bp, x, y) != top:
                return fail('x→y=1', x=x, y=y)
            if complemented and hook_mask(bp, x, y) != top:
                return fail('x↪y=1', x=x, y=y)
    return PropertyReport(property=name, holds=True, details={'complemented': complemented})


# Monotonicity

def _monotone_left(bp: BoundedPoset, op: OperatorMask, name: str) -> PropertyReport:
    """x <= y implies x*z <=1 y*z."""
    n = bp.size
    leq = bp.base.leq
    for x in range(n):
        for y in range(n):
            if not leq[x, y]:
                continue
            for z in range(n):
                if not le1_mask(bp, op(bp, x, z), op(bp, y, z)):
                    return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y, z=z))
    return PropertyReport(property=name, holds=True)


def _monotone_right(bp: BoundedPoset, op: OperatorMask, name: str) -> PropertyReport:
    """x <= y implies z*x <=2 z*y."""
    n = bp.size
    leq = bp.base.leq
    for x in range(n):
        for y in range(n):
            if not leq[x, y]:
                continue
            for z in range(n):
                if not le2_mask(bp, op(bp, z, x), op(bp, z, y)):
                    return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y, z=z))
    return PropertyReport(property=name, holds=True)


def hook_weakly_antitone_left(bp: BoundedPoset) -> PropertyReport:
    """x ↪ y >= 1 ↪ y, read as set_le(1 ↪ y, x ↪ y)."""
    name = 'hook-weakly-antitone-left'
    for x in range(bp.size):
        for y in range(bp.size):
            if not set_le_mask(bp, hook_mask(bp, bp.top, y), hook_mask(bp, x, y)):
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y))
    return PropertyReport(property=name, holds=True)


def odot_weakly_monotone_right(bp: BoundedPoset) -> PropertyReport:
    """x ⊙ y <= x ⊙ 1, read as set_le(x ⊙ y, x ⊙ 1)."""
    name = 'odot-weakly-monotone-right'
    for x in range(bp.size):
        for y in range(bp.size):
            if not set_le_mask(bp, odot_mask(bp, x, y), odot_mask(bp, x, bp.top)):
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y))
    return PropertyReport(property=name, holds=True)


MONOTONICITY = {
    'circ-monotone-left': lambda bp: _monotone_left(bp, circ_mask, 'circ-monotone-left'),
    'odot-monotone-left': lambda bp: _monotone_left(bp, odot_mask, 'odot-monotone-left'),
    'imp-monotone-right': lambda bp: _monotone_right(bp, imp_mask, 'imp-monotone-right'),
    'hook-monotone-right': lambda bp: _monotone_right(bp, hook_mask, 'hook-monotone-right'),
    'hook-weakly-antitone-left': hook_weakly_antitone_left,
    'odot-weakly-monotone-right': odot_weakly_monotone_right,
}


def monotonicity_report(bp: BoundedPoset) -> List[PropertyReport]:
    """The four monotonicities of the operators and the two weak conditions."""
    return [check(bp) for check in MONOTONICITY.values()]


# Adjointness

ADJOINT_PAIRS: Dict[str, Tuple[OperatorMask, OperatorMask]] = {
    'circ-imp': (circ_mask, imp_mask),
    'odot-hook': (odot_mask, hook_mask),
}


def adjoint_direction(bp: BoundedPoset, pair: str = 'circ-imp', direction: str = 'forward') -> PropertyReport:
    """
    One direction of x * y <= z iff x <= y -> z over all triples.

    forward: set_le(x*y, {z}) implies set_le({x}, y->z).
    backward: the converse.
    """
    product, residual = ADJOINT_PAIRS[pair]
    name = f'{pair}-{direction}'
    n = bp.size
    for x in range(n):
        for y in range(n):
            left_value = product(bp, x, y)
            for z in range(n):
                below = set_le_mask(bp, left_value, 1 << z)
                above = set_le_mask(bp, 1 << x, residual(bp, y, z))
                premise, conclusion = (below, above) if direction == 'forward' else (above, below)
                if premise and not conclusion:
                    return PropertyReport(property=name, holds=False,
                                          witness=bind(bp, x=x, y=y, z=z),
                                          details={'product': mask_names(bp, left_value),
                                                   'residual': mask_names(bp, residual(bp, y, z))})
    return PropertyReport(property=name, holds=True)


def adjointness_report(bp: BoundedPoset, pair: str = 'circ-imp') -> PropertyReport:
    """
    Both directions of the adjointness law and their conjunction.

    Returns:
        PropertyReport: 'adjoint-pair' for (∘, →), 'odot-hook-adjoint' otherwise
    """
    name = 'adjoint-pair' if pair == 'circ-imp' else f'{pair}-adjoint'
    forward = adjoint_direction(bp, pair, 'forward')
    backward = adjoint_direction(bp, pair, 'backward')
    details = {'forward': forward.holds, 'backward': backward.holds}
    failing = forward if not forward.holds else backward
    if forward.holds and backward.holds:
        return PropertyReport(property=name, holds=True, details=details)
    details['direction'] = 'forward' if failing is forward else 'backward'
    return PropertyReport(property=name, holds=False, witness=failing.witness, details=details)


# Conditions (1)-(6)

def condition_sides(bp: BoundedPoset, k: int, x: int, y: int) -> Tuple[int, int]:
    """
    (contained, container) masks for conditions (1)-(4) at (x, y).

    (1) U(x⁺, L(x,y)) ⊆ U(y)
    (2) L(x, U(x⁺,y)) ⊆ L(y)
    (3) U(x⁺, L(x, U(x⁺,y))) ⊆ U(y)
    (4) L(x, U(x⁺, L(x,y))) ⊆ L(y)
    """
    plus_x = plus_table(bp)[x]
    if k == 1:
        return upper_mask(bp, plus_x | lower_mask(bp, _pair(x, y))), bp.base.up_masks[y]
    if k == 2:
        return lower_mask(bp, 1 << x | upper_mask(bp, plus_x | 1 << y)), bp.base.down_masks[y]
    if k == 3:
        inner = lower_mask(bp, 1 << x | upper_mask(bp, plus_x | 1 << y))
        return upper_mask(bp, plus_x | inner), bp.base.up_masks[y]
    if k == 4:
        inner = upper_mask(bp, plus_x | lower_mask(bp, _pair(x, y)))
        return lower_mask(bp, 1 << x | inner), bp.base.down_masks[y]
    raise ValueError(f"Condition ({k}) is not an element condition")


def _element_condition(bp: BoundedPoset, k: int) -> PropertyReport:
    name = f'condition-{k}'
    for x in range(bp.size):
        for y in range(bp.size):
            contained, container = condition_sides(bp, k, x, y)
            if contained & ~container:
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y),
                                      details={'left': mask_names(bp, contained),
                                               'right': mask_names(bp, container)})
    return PropertyReport(property=name, holds=True)


def condition5_sides(bp: BoundedPoset, a: int, c: int, y: int) -> Tuple[int, int]:
    """U(L(A,y), C) and UL(A, U(y,C)) for non-empty A, C with C <= A."""
    lower_a = lower_mask(bp, a)
    left = upper_mask(bp, (lower_a & bp.base.down_masks[y]) | c)
    right = upper_mask(bp, lower_a & lower_mask(bp, upper_mask(bp, c) & bp.base.up_masks[y]))
    return left, right


def condition6_sides(bp: BoundedPoset, a: int, b: int, z: int) -> Tuple[int, int]:
    """L(U(A,B), z) and LU(A, L(B,z)) for non-empty A, B with A <= z."""
    down_z = bp.base.down_masks[z]
    left = lower_mask(bp, upper_mask(bp, a | b)) & down_z
    right = lower_mask(bp, upper_mask(bp, a) & upper_mask(bp, lower_mask(bp, b) & down_z))
    return left, right


def _distinct_by(masks: Iterable[int], key: Callable[[int], object]) -> List[int]:
    """First mask (in iteration order) for each distinct key."""
    seen: Dict[object, int] = {}
    for mask in masks:
        seen.setdefault(key(mask), mask)
    return list(seen.values())


def _condition5_exhaustive(bp: BoundedPoset) -> Iterable[Tuple[int, int, int]]:
    # Both sides depend on A only through L(A) and on C only through U(C).
    for cut in cut_masks(bp):
        a = min_mask(bp, upper_mask(bp, cut))
        cs = _distinct_by(sorted(submasks(cut)), lambda c: upper_mask(bp, c))
        for c in cs:
            for y in range(bp.size):
                yield a, c, y


def _condition6_exhaustive(bp: BoundedPoset) -> Iterable[Tuple[int, int, int]]:
    # A matters through U(A); B through the pair (U(B), L(B)).
    bs = _distinct_by(range(1, bp.base.full_mask + 1),
                      lambda b: (upper_mask(bp, b), lower_mask(bp, b)))
    for z in range(bp.size):
        as_ = _distinct_by(sorted(submasks(bp.base.down_masks[z])), lambda a: upper_mask(bp, a))
        for a in as_:
            for b in bs:
                yield a, b, z


def _sampled_triples(bp: BoundedPoset, k: int, sample: int, seed: int) -> List[Tuple[int, int, int]]:
    rng = np.random.default_rng(seed)
    full = bp.base.full_mask
    out = []
    for _ in range(sample):
        first = int(rng.integers(1, full + 1))
        second = int(rng.integers(1, full + 1))
        element = int(rng.integers(0, bp.size))
        if k == 5:
            allowed = lower_mask(bp, first)
            second &= allowed
            if not second:
                second = allowed & -allowed
            out.append((first, second, element))
        else:
            allowed = bp.base.down_masks[element]
            first &= allowed
            if not first:
                first = 1 << element
            out.append((first, second, element))
    return out


def _subset_condition(bp: BoundedPoset, k: int, cap: int, sample: Optional[int],
                      seed: int) -> PropertyReport:
    name = f'condition-{k}'
    n = bp.size
    if n <= cap:
        triples = _condition5_exhaustive(bp) if k == 5 else _condition6_exhaustive(bp)
        exhaustive, samples = True, None
    elif sample is not None:
        logger.info(f"Sampling {sample} instances of condition ({k}) (size {n} > cap {cap})")
        triples = _sampled_triples(bp, k, sample, seed)
        exhaustive, samples = False, sample
    else:
        raise SizeCapExceeded(f'condition ({k})', n, cap)

    sides = condition5_sides if k == 5 else condition6_sides
    for first, second, element in triples:
        left, right = sides(bp, first, second, element)
        if left != right:
            if k == 5:
                witness = bind(bp, A=('set', first), C=('set', second), y=element)
            else:
                witness = bind(bp, A=('set', first), B=('set', second), z=element)
            return PropertyReport(property=name, holds=False, witness=witness,
                                  exhaustive=exhaustive, samples=samples,
                                  details={'left': mask_names(bp, left),
                                           'right': mask_names(bp, right)})
    return PropertyReport(property=name, holds=True, exhaustive=exhaustive, samples=samples)


def condition(bp: BoundedPoset, k: int,
              cap: int = Config.CONDITION_SUBSET_CAP,
              sample: Optional[int] = None,
              seed: int = Config.DEFAULT_SEED) -> PropertyReport:
    """
    Check condition (k).

    (1)-(4) quantify over element pairs. (5) and (6) quantify over pairs of
    non-empty subsets and an element; they run exhaustively up to cap
    elements and on a seeded sample above it.

    Args:
        bp: bounded poset
        k: condition number 1..6
        cap: largest size checked exhaustively for (5) and (6)
        sample: number of random instances above the cap
        seed: sampling seed

    Returns:
        PropertyReport: 'condition-<k>'

    Raises:
        SizeCapExceeded: (5)/(6) above cap with no sample requested
    """
    if k in (1, 2, 3, 4):
        return _element_condition(bp, k)
    if k in (5, 6):
        return _subset_condition(bp, k, cap, sample, seed)
    raise ValueError(f"Unknown condition ({k})")


# Theorem instances

def _implication(name: str, hypothesis: PropertyReport,
                 conclusion: Callable[[], PropertyReport]) -> PropertyReport:
    if not hypothesis.holds:
        return vacuous_report(name, f'{hypothesis.property} fails')
    result = conclusion()
    return PropertyReport(property=name, holds=result.holds, witness=result.witness,
                          exhaustive=hypothesis.exhaustive and result.exhaustive,
                          samples=hypothesis.samples or result.samples,
                          details={'hypothesis': hypothesis.property,
                                   'conclusion': result.property, **result.details})


THEOREM_NAMES = (
    'hook-antitone-adjoint', 'odot-monotone-adjoint',
    'condition-1-adjoint', 'condition-2-adjoint',
    'condition-3-adjoint', 'condition-4-adjoint',
    'condition-5-adjoint', 'condition-6-adjoint',
    'condition-5-implies-3', 'condition-6-implies-4',
    'adjoint-pair-corollary', 'odot-monotone-unique', 'boolean-remark',
)


def boolean_remark(bp: BoundedPoset) -> PropertyReport:
    """Boolean posets: ↪ weakly antitone-left, ⊙ weakly monotone-right and (1)-(4)."""
    name = 'boolean-remark'
    boolean = is_boolean(bp)
    if not boolean.holds:
        return vacuous_report(name, 'not boolean')
    checks = [hook_weakly_antitone_left(bp), odot_weakly_monotone_right(bp)]
    checks += [condition(bp, k) for k in (1, 2, 3, 4)]
    for report in checks:
        if not report.holds:
            return PropertyReport(property=name, holds=False, witness=report.witness,
                                  details={'failed': report.property})
    return PropertyReport(property=name, holds=True)


def theorem_implications(bp: BoundedPoset,
                         cap: int = Config.CONDITION_SUBSET_CAP,
                         sample: Optional[int] = None,
                         seed: int = Config.DEFAULT_SEED) -> List[PropertyReport]:
    """
    Every adjointness theorem instance on bp.

    Each hypothesis is evaluated first; a failed hypothesis yields a vacuous
    report. All theorems assume a complemented poset.
    """
    if not is_complemented(bp).holds:
        logger.debug(f"Theorem instances are vacuous on non-complemented {bp!r}")
        return [vacuous_report(name, 'not complemented') for name in THEOREM_NAMES]

    hook_antitone = hook_weakly_antitone_left(bp)
    odot_monotone = odot_weakly_monotone_right(bp)
    forward = lambda: adjoint_direction(bp, 'circ-imp', 'forward')
    backward = lambda: adjoint_direction(bp, 'circ-imp', 'backward')
    odot_forward = lambda: adjoint_direction(bp, 'odot-hook', 'forward')
    odot_backward = lambda: adjoint_direction(bp, 'odot-hook', 'backward')
    conditions = {k: condition(bp, k) for k in (1, 2, 3, 4)}
    conditions[5] = condition(bp, 5, cap, sample, seed)
    conditions[6] = condition(bp, 6, cap, sample, seed)

    both_weak = PropertyReport(property='weak-monotonicities',
                               holds=hook_antitone.holds and odot_monotone.holds)

    reports = [
        _implication('hook-antitone-adjoint', hook_antitone, forward),
        _implication('odot-monotone-adjoint', odot_monotone, backward),
        _implication('condition-1-adjoint', conditions[1], forward),
        _implication('condition-2-adjoint', conditions[2], backward),
        _implication('condition-3-adjoint', conditions[3], odot_forward),
        _implication('condition-4-adjoint', conditions[4], odot_backward),
        _implication('condition-5-adjoint', conditions[5], odot_forward),
        _implication('condition-6-adjoint', conditions[6], odot_backward),
        _implication('condition-5-implies-3', conditions[5], lambda: conditions[3]),
        _implication('condition-6-implies-4', conditions[6], lambda: conditions[4]),
        _implication('adjoint-pair-corollary', both_weak, lambda: adjointness_report(bp)),
        _implication('odot-monotone-unique', odot_monotone, lambda: is_uniquely_complemented(bp)),
        boolean_remark(bp),
    ]
    if conditions[6].holds:
        # the literal reading of the second corollary conclusion, reported alongside
        reports[7].details['forward'] = odot_forward().holds
    return reports

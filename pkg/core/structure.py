"""
Posetkit - Structure Checks

Structural predicates on bounded posets: distributivity in its four cone
forms, modularity, (unique) complementation, Boolean and pseudocomplemented
posets, lattices, N₅ sublattices containing the bounds, the shape of the
complement sets x⁺, the antitone conditions (i)-(v) and the generalized
De Morgan laws.

Every check scans its quantified variables in canonical element order and
stops at the first failure, so witnesses are reproducible.
"""

import logging
from typing import Dict, List, Optional, Tuple

from core.complementation import plus_mask, plus_table
from core.completion import hull_mask
from core.cones import (
    greatest_of_mask, inf_mask, le1_mask, le2_mask, least_of_mask,
    lower_mask, max_mask, min_mask, set_le_mask, sup_mask, upper_mask
)
from core.poset import BoundedPoset, bits, popcount
from core.report import PropertyReport, bind, mask_names, vacuous_report

logger = logging.getLogger('posetkit.structure')

DISTRIBUTIVE_FORMS = (1, 2, 3, 4)
ANTITONE_CONDITIONS = ('i', 'ii', 'iii', 'iv', 'v')
DE_MORGAN_LAWS = ('join', 'meet')


def _pair(x: int, y: int) -> int:
    return (1 << x) | (1 << y)


# Distributivity and modularity

def distributive_sides(bp: BoundedPoset, form: int, x: int, y: int, z: int) -> Tuple[int, int]:
    """
    Both sides of a distributive identity at (x, y, z), as masks.

    L(A, z) abbreviates L(A ∪ {z}) and likewise for U.

    Args:
        bp: bounded poset
        form: 1 for L(U(x,y),z) = LU(L(x,z),L(y,z)), 2 for its U-closed
            companion, 3 and 4 for the dual identities
        x, y, z: element indices

    Returns:
        tuple: (left, right) masks
    """
    z_bit = 1 << z
    if form == 1:
        left = lower_mask(bp, upper_mask(bp, _pair(x, y)) | z_bit)
        right = lower_mask(bp, upper_mask(bp, lower_mask(bp, _pair(x, z)) | lower_mask(bp, _pair(y, z))))
    elif form == 2:
        left = upper_mask(bp, lower_mask(bp, upper_mask(bp, _pair(x, y)) | z_bit))
        right = upper_mask(bp, lower_mask(bp, _pair(x, z)) | lower_mask(bp, _pair(y, z)))
    elif form == 3:
        left = upper_mask(bp, lower_mask(bp, _pair(x, y)) | z_bit)
        right = upper_mask(bp, lower_mask(bp, upper_mask(bp, _pair(x, z)) | upper_mask(bp, _pair(y, z))))
    elif form == 4:
        left = lower_mask(bp, upper_mask(bp, lower_mask(bp, _pair(x, y)) | z_bit))
        right = lower_mask(bp, upper_mask(bp, _pair(x, z)) | upper_mask(bp, _pair(y, z)))
    else:
        raise ValueError(f"Unknown distributive form {form}")
    return left, right


def is_distributive(bp: BoundedPoset, form: int = 1) -> PropertyReport:
    """
    Check one of the four distributive identities over all triples.

    Args:
        bp: bounded poset
        form: identity number 1..4

    Returns:
        PropertyReport: 'distributive' (form 1) or 'distributive-<form>'
    """
    name = 'distributive' if form == 1 else f'distributive-{form}'
    n = bp.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left, right = distributive_sides(bp, form, x, y, z)
                if left != right:
                    return PropertyReport(property=name, holds=False,
                                          witness=bind(bp, x=x, y=y, z=z),
                                          details={'form': form,
                                                   'left': mask_names(bp, left),
                                                   'right': mask_names(bp, right)})
    return PropertyReport(property=name, holds=True, details={'form': form})


def modular_sides(bp: BoundedPoset, form: str, x: int, y: int, z: int) -> Optional[Tuple[int, int]]:
    """
    Both sides of a modular identity, or None when the side condition fails.

    'upper': U(L(x,y),z) = UL(x,U(y,z)) for z <= x.
    'lower': L(U(x,y),z) = LU(x,L(y,z)) for x <= z.
    """
    if form == 'upper':
        if not bp.base.leq[z, x]:
            return None
        left = upper_mask(bp, lower_mask(bp, _pair(x, y)) | 1 << z)
        right = upper_mask(bp, lower_mask(bp, (1 << x) | upper_mask(bp, _pair(y, z))))
    else:
        if not bp.base.leq[x, z]:
            return None
        left = lower_mask(bp, upper_mask(bp, _pair(x, y)) | 1 << z)
        right = lower_mask(bp, upper_mask(bp, (1 << x) | lower_mask(bp, _pair(y, z))))
    return left, right


def _first_modular_failure(bp: BoundedPoset, form: str) -> Optional[Tuple[int, int, int, int, int]]:
    n = bp.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                sides = modular_sides(bp, form, x, y, z)
                if sides is not None and sides[0] != sides[1]:
                    return x, y, z, sides[0], sides[1]
    return None


def is_modular(bp: BoundedPoset) -> PropertyReport:
    """
    Both modular identities; the report records whether they agree.

    Returns:
        PropertyReport: 'modular'
    """
    upper_fail = _first_modular_failure(bp, 'upper')
    lower_fail = _first_modular_failure(bp, 'lower')
    details: Dict = {'upper_form': upper_fail is None,
                     'lower_form': lower_fail is None,
                     'forms_agree': (upper_fail is None) == (lower_fail is None)}
    if not details['forms_agree']:
        logger.warning(f"Modular identities disagree on {bp!r}")
    failure = upper_fail or lower_fail
    if failure is None:
        return PropertyReport(property='modular', holds=True, details=details)
    x, y, z, left, right = failure
    details.update(form='upper' if upper_fail else 'lower',
                   left=mask_names(bp, left), right=mask_names(bp, right))
    return PropertyReport(property='modular', holds=False,
                          witness=bind(bp, x=x, y=y, z=z), details=details)


# Complementation

def is_complemented(bp: BoundedPoset) -> PropertyReport:
    """Every element has at least one complement."""
    table = plus_table(bp)
    for x in range(bp.size):
        if not table[x]:
            return PropertyReport(property='complemented', holds=False, witness=bind(bp, x=x))
    return PropertyReport(property='complemented', holds=True)


def is_uniquely_complemented(bp: BoundedPoset) -> PropertyReport:
    """Every element has exactly one complement."""
    table = plus_table(bp)
    for x in range(bp.size):
        if popcount(table[x]) != 1:
            return PropertyReport(property='uniquely-complemented', holds=False,
                                  witness=bind(bp, x=x),
                                  details={'complements': mask_names(bp, table[x])})
    return PropertyReport(property='uniquely-complemented', holds=True)


def is_boolean(bp: BoundedPoset) -> PropertyReport:
    """Distributive (form 1) and complemented."""
    distributive = is_distributive(bp, 1)
    complemented = is_complemented(bp)
    details = {'distributive': distributive.holds, 'complemented': complemented.holds}
    if distributive.holds and complemented.holds:
        return PropertyReport(property='boolean', holds=True, details=details)
    failing = distributive if not distributive.holds else complemented
    details.update(failing.details)
    return PropertyReport(property='boolean', holds=False, witness=failing.witness, details=details)


def is_pseudocomplemented(bp: BoundedPoset) -> PropertyReport:
    """
    For each a the set {x | L(a,x) = {0}} has a greatest element.

    On failure the witness is a together with the maximal such x.
    """
    bottom_cone = 1 << bp.bottom
    n = bp.size
    for a in range(n):
        annihilators = 0
        for x in range(n):
            if lower_mask(bp, _pair(a, x)) == bottom_cone:
                annihilators |= 1 << x
        if greatest_of_mask(bp, annihilators) is None:
            return PropertyReport(property='pseudocomplemented', holds=False,
                                  witness=bind(bp, a=a, maximal=('set', max_mask(bp, annihilators))))
    return PropertyReport(property='pseudocomplemented', holds=True)


def is_lattice(bp: BoundedPoset) -> PropertyReport:
    """Every pair has a supremum and an infimum."""
    n = bp.size
    for x in range(n):
        for y in range(x + 1, n):
            missing = [op for op, value in (('sup', sup_mask(bp, _pair(x, y))),
                                            ('inf', inf_mask(bp, _pair(x, y)))) if value is None]
            if missing:
                return PropertyReport(property='lattice', holds=False,
                                      witness=bind(bp, x=x, y=y), details={'missing': missing})
    return PropertyReport(property='lattice', holds=True)


def has_n5_with_bounds(bp: BoundedPoset) -> PropertyReport:
    """
    Search for a sublattice {0, e, f, g, 1} isomorphic to N₅.

    0 < e < f < 1 and g is a complement of both e and f, so all pairwise
    suprema and infima exist and land in the five-element set.
    """
    table = plus_table(bp)
    leq = bp.base.leq
    bounds = (bp.bottom, bp.top)
    middle = [x for x in range(bp.size) if x not in bounds]
    for e in middle:
        for f in middle:
            if e == f or not leq[e, f]:
                continue
            common = table[e] & table[f]
            for g in bits(common):
                if g not in bounds:
                    return PropertyReport(property='n5-with-bounds', holds=True,
                                          witness=bind(bp, e=e, f=f, g=g))
    return PropertyReport(property='n5-with-bounds', holds=False)


def complement_antichain_all(bp: BoundedPoset) -> PropertyReport:
    """(x⁺, <=) is an antichain for every x."""
    table = plus_table(bp)
    leq = bp.base.leq
    for x in range(bp.size):
        members = list(bits(table[x]))
        for y in members:
            for z in members:
                if y != z and leq[y, z]:
                    return PropertyReport(property='complement-antichain', holds=False,
                                          witness=bind(bp, x=x, lower=y, upper=z),
                                          details={'complements': mask_names(bp, table[x])})
    return PropertyReport(property='complement-antichain', holds=True)


def complement_convex_all(bp: BoundedPoset) -> PropertyReport:
    """(x⁺, <=) is convex for every x."""
    table = plus_table(bp)
    for x in range(bp.size):
        hull = hull_mask(bp, table[x])
        if hull != table[x]:
            return PropertyReport(property='complement-convex', holds=False,
                                  witness=bind(bp, x=x),
                                  details={'complements': mask_names(bp, table[x]),
                                           'hull': mask_names(bp, hull)})
    return PropertyReport(property='complement-convex', holds=True)


# Antitone conditions

def antitone_pair(bp: BoundedPoset, condition: str, x: int, y: int) -> bool:
    """
    Evaluate one antitone condition at the pair (x, y).

    (i)-(iii) are implications with premise x <= y and hold trivially
    otherwise; (iv) and (v) are unconditional.
    """
    table = plus_table(bp)
    if condition in ('i', 'ii', 'iii'):
        if not bp.base.leq[x, y]:
            return True
        check = {'i': set_le_mask, 'ii': le1_mask, 'iii': le2_mask}[condition]
        return check(bp, table[y], table[x])
    pair = _pair(x, y)
    if condition == 'iv':
        return le1_mask(bp, plus_mask(bp, min_mask(bp, upper_mask(bp, pair))),
                        max_mask(bp, lower_mask(bp, table[x] | table[y])))
    if condition == 'v':
        return le2_mask(bp, min_mask(bp, upper_mask(bp, table[x] | table[y])),
                        plus_mask(bp, max_mask(bp, lower_mask(bp, pair))))
    raise ValueError(f"Unknown antitone condition {condition}")


def antitone_condition(bp: BoundedPoset, condition: str) -> PropertyReport:
    """Check one antitone condition over all pairs."""
    name = f'antitone-{condition}'
    n = bp.size
    for x in range(n):
        for y in range(n):
            if not antitone_pair(bp, condition, x, y):
                table = plus_table(bp)
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y),
                                      details={'x_complements': mask_names(bp, table[x]),
                                               'y_complements': mask_names(bp, table[y])})
    return PropertyReport(property=name, holds=True)


def antitone_implications(bp: BoundedPoset,
                          reports: Optional[Dict[str, PropertyReport]] = None) -> PropertyReport:
    """
    The implications among (i)-(v) on complemented posets.

    (i) implies (ii) and (iii), (iv) implies (ii), (v) implies (iii); when
    every x⁺ has a greatest element (i) implies (iv) and when every x⁺ has
    a least element (i) implies (v).
    """
    name = 'antitone-theorem'
    if not is_complemented(bp).holds:
        return vacuous_report(name, 'not complemented')
    if reports is None:
        reports = {c: antitone_condition(bp, c) for c in ANTITONE_CONDITIONS}
    holds = {c: reports[c].holds for c in ANTITONE_CONDITIONS}
    table = plus_table(bp)
    has_greatest = all(greatest_of_mask(bp, m) is not None for m in table)
    has_least = all(least_of_mask(bp, m) is not None for m in table)

    implications = [('i', 'ii', True), ('i', 'iii', True), ('iv', 'ii', True),
                    ('v', 'iii', True), ('i', 'iv', has_greatest), ('i', 'v', has_least)]
    status = {}
    for premise, conclusion, applies in implications:
        key = f'{premise}=>{conclusion}'
        if not applies or not holds[premise]:
            status[key] = 'vacuous'
        elif holds[conclusion]:
            status[key] = 'verified'
        else:
            return PropertyReport(property=name, holds=False,
                                  witness=reports[conclusion].witness,
                                  details={'implication': key, 'conditions': holds})
    return PropertyReport(property=name, holds=True,
                          vacuous=all(s == 'vacuous' for s in status.values()),
                          details={'implications': status, 'conditions': holds})


def antitone_conditions(bp: BoundedPoset) -> List[PropertyReport]:
    """Reports for (i)-(v) followed by the implication report."""
    reports = {c: antitone_condition(bp, c) for c in ANTITONE_CONDITIONS}
    return [reports[c] for c in ANTITONE_CONDITIONS] + [antitone_implications(bp, reports)]


# De Morgan laws

def de_morgan_sides(bp: BoundedPoset, law: str, x: int, y: int) -> Tuple[int, int]:
    """
    Sides of a generalized De Morgan law at (x, y).

    'join': (Min U(x,y))⁺ = Max L(x⁺, y⁺).
    'meet': (Max L(x,y))⁺ = Min U(x⁺, y⁺).
    """
    table = plus_table(bp)
    pair = _pair(x, y)
    if law == 'join':
        return (plus_mask(bp, min_mask(bp, upper_mask(bp, pair))),
                max_mask(bp, lower_mask(bp, table[x] | table[y])))
    if law == 'meet':
        return (plus_mask(bp, max_mask(bp, lower_mask(bp, pair))),
                min_mask(bp, upper_mask(bp, table[x] | table[y])))
    raise ValueError(f"Unknown De Morgan law {law}")


def de_morgan_law(bp: BoundedPoset, law: str) -> PropertyReport:
    name = f'de-morgan-{law}'
    n = bp.size
    for x in range(n):
        for y in range(n):
            left, right = de_morgan_sides(bp, law, x, y)
            if left != right:
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y),
                                      details={'left': mask_names(bp, left),
                                               'right': mask_names(bp, right)})
    return PropertyReport(property=name, holds=True)


def de_morgan_check(bp: BoundedPoset) -> PropertyReport:
    """
    Both generalized De Morgan laws over all pairs.

    Returns:
        PropertyReport: 'de-morgan', with each law's outcome in details
    """
    laws = {law: de_morgan_law(bp, law) for law in DE_MORGAN_LAWS}
    details = {law: {'holds': r.holds, 'witness': r.witness, **r.details} for law, r in laws.items()}
    failing = next((r for r in laws.values() if not r.holds), None)
    if failing is None:
        return PropertyReport(property='de-morgan', holds=True, details=details)
    return PropertyReport(property='de-morgan', holds=False, witness=failing.witness, details=details)


# Distributive complementation

def complement_map(bp: BoundedPoset) -> Optional[List[int]]:
    """x ↦ x' for uniquely complemented posets, else None."""
    table = plus_table(bp)
    if any(popcount(m) != 1 for m in table):
        return None
    return [next(iter(bits(m))) for m in table]


def is_orthocomplementation(bp: BoundedPoset, mapping: List[int]) -> PropertyReport:
    """
    mapping is an antitone involution sending each x to a complement of x.
    """
    name = 'orthocomplementation'
    table = plus_table(bp)
    leq = bp.base.leq
    n = bp.size
    for x in range(n):
        if not table[x] >> mapping[x] & 1:
            return PropertyReport(property=name, holds=False, witness=bind(bp, x=x),
                                  details={'axiom': 'complement'})
        if mapping[mapping[x]] != x:
            return PropertyReport(property=name, holds=False, witness=bind(bp, x=x),
                                  details={'axiom': 'involution'})
        for y in range(n):
            if leq[x, y] and not leq[mapping[y], mapping[x]]:
                return PropertyReport(property=name, holds=False, witness=bind(bp, x=x, y=y),
                                      details={'axiom': 'antitone'})
    return PropertyReport(property=name, holds=True)


def prop2_check(bp: BoundedPoset) -> PropertyReport:
    """
    In a distributive bounded poset every element has at most one complement,
    and a total complementation is an orthocomplementation.

    Vacuous on non-distributive posets.
    """
    name = 'distributive-complements'
    if not is_distributive(bp, 1).holds:
        return vacuous_report(name, 'not distributive')
    table = plus_table(bp)
    for x in range(bp.size):
        if popcount(table[x]) > 1:
            return PropertyReport(property=name, holds=False, witness=bind(bp, x=x),
                                  details={'complements': mask_names(bp, table[x])})
    mapping = complement_map(bp)
    if mapping is None:
        return PropertyReport(property=name, holds=True, details={'complemented': False})
    ortho = is_orthocomplementation(bp, mapping)
    if not ortho.holds:
        return PropertyReport(property=name, holds=False, witness=ortho.witness, details=ortho.details)
    return PropertyReport(property=name, holds=True, details={'complemented': True})

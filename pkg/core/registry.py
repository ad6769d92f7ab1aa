"""
Posetkit - Property Registry

Maps property names to checkers. Every checker takes a bounded poset and
CheckOptions and returns one PropertyReport. The registry is what search
predicates and `posetkit check --props` resolve against.
"""

import logging
from dataclasses import replace
from functools import lru_cache
from typing import Callable, Dict, List, Optional

from core import completion, residuation, structure, theorems
from core.complementation import closed_sets
from core.errors import SizeCapExceeded, UnknownProperty
from core.poset import BoundedPoset
from core.report import PropertyReport, skipped_report
from core.theorems import CheckOptions

logger = logging.getLogger('posetkit.registry')

Checker = Callable[[BoundedPoset, CheckOptions], PropertyReport]

PROPERTIES: Dict[str, Checker] = {}


def _register_plain(name: str, func: Callable[[BoundedPoset], PropertyReport]):
    PROPERTIES[name] = lambda bp, options: func(bp)


@lru_cache(maxsize=32)
def _theorem_reports(bp: BoundedPoset, options: CheckOptions) -> Dict[str, PropertyReport]:
    reports = residuation.theorem_implications(bp, options.condition_cap, options.sample, options.seed)
    return {r.property: r for r in reports}


@lru_cache(maxsize=32)
def _antitone_reports(bp: BoundedPoset) -> Dict[str, PropertyReport]:
    return {r.property: r for r in structure.antitone_conditions(bp)}


def _register_all():
    # Structure
    _register_plain('lattice', structure.is_lattice)
    for form in structure.DISTRIBUTIVE_FORMS:
        name = 'distributive' if form == 1 else f'distributive-{form}'
        _register_plain(name, lambda bp, form=form: structure.is_distributive(bp, form))
    _register_plain('modular', structure.is_modular)
    _register_plain('complemented', structure.is_complemented)
    _register_plain('uniquely-complemented', structure.is_uniquely_complemented)
    _register_plain('boolean', structure.is_boolean)
    _register_plain('pseudocomplemented', structure.is_pseudocomplemented)
    _register_plain('n5-with-bounds', structure.has_n5_with_bounds)
    _register_plain('complement-antichain', structure.complement_antichain_all)
    _register_plain('complement-convex', structure.complement_convex_all)
    for condition in structure.ANTITONE_CONDITIONS:
        name = f'antitone-{condition}'
        _register_plain(name, lambda bp, name=name: _antitone_reports(bp)[name])
    _register_plain('antitone-theorem', lambda bp: _antitone_reports(bp)['antitone-theorem'])
    _register_plain('de-morgan', structure.de_morgan_check)
    for law in structure.DE_MORGAN_LAWS:
        _register_plain(f'de-morgan-{law}', lambda bp, law=law: structure.de_morgan_law(bp, law))
    _register_plain('distributive-complements', structure.prop2_check)

    # Residuation
    _register_plain('operator-identities', residuation.operator_identities)
    for name, checker in residuation.MONOTONICITY.items():
        _register_plain(name, checker)
    _register_plain('adjoint-pair', residuation.adjointness_report)
    _register_plain('odot-hook-adjoint', lambda bp: residuation.adjointness_report(bp, 'odot-hook'))
    for pair in residuation.ADJOINT_PAIRS:
        for direction in ('forward', 'backward'):
            _register_plain(f'{pair}-{direction}',
                            lambda bp, pair=pair, direction=direction:
                            residuation.adjoint_direction(bp, pair, direction))
    for k in (1, 2, 3, 4, 5, 6):
        PROPERTIES[f'condition-{k}'] = (
            lambda bp, options, k=k: residuation.condition(bp, k, options.condition_cap,
                                                           options.sample, options.seed))
    for name in residuation.THEOREM_NAMES:
        PROPERTIES[name] = lambda bp, options, name=name: _theorem_reports(bp, options)[name]

    # Closed sets, completion and convexity
    _register_plain('cl-ortholattice', lambda bp: closed_sets(bp).axioms)
    _register_plain('dm-lattice', lambda bp: completion.dm_completion(bp).axioms)
    PROPERTIES['dm-embedding'] = lambda bp, options: completion.embedding_check(bp, options.subset_cap)
    _register_plain('dm-orthogonality', completion.dm_orthogonality_check)

    # Theorem instances from the verification suites
    for func in (theorems.galois_lemma, theorems.cone_laws, theorems.distributive_forms_agree,
                 theorems.closed_sets_unique, theorems.complement_closure,
                 theorems.antichain_n5_equivalence, theorems.complement_convex_theorem,
                 theorems.closure_injectivity, theorems.injectivity_proposition,
                 theorems.de_morgan_lemma, theorems.hull_formula, theorems.conv_all_poset,
                 theorems.hull_orthogonality):
        name = func.__name__.replace('_', '-')
        PROPERTIES[name] = func
    PROPERTIES['conv-poset'] = theorems.conv_star_poset


_register_all()


def property_names() -> List[str]:
    return sorted(PROPERTIES)


def resolve(names: List[str]) -> List[str]:
    """
    Validate property names; 'all' expands to every registered property.

    Raises:
        UnknownProperty: for a name not in the registry
    """
    if names == ['all']:
        return property_names()
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise UnknownProperty(f"Unknown properties: {', '.join(unknown)}")
    return list(names)


def check(name: str, bp: BoundedPoset, options: Optional[CheckOptions] = None) -> PropertyReport:
    """
    Run one registered checker.

    Args:
        name: registered property name
        bp: bounded poset
        options: caps and sampling, defaults from Config

    Returns:
        PropertyReport: the checker's report, named after the property

    Raises:
        UnknownProperty: if name is not registered
        SizeCapExceeded: if an exponential checker exceeds its cap without sampling
    """
    if name not in PROPERTIES:
        raise UnknownProperty(f"Unknown property '{name}'")
    options = options or CheckOptions()
    logger.debug(f"Checking {name} on a poset of size {bp.size}")
    report = PROPERTIES[name](bp, options)
    if report.property != name:
        report = replace(report, property=name)
    return report


def check_many(names: List[str], bp: BoundedPoset,
               options: Optional[CheckOptions] = None) -> List[PropertyReport]:
    """
    Run several checkers in order.

    A checker that exceeds its size cap yields a skipped, non-exhaustive
    report and the remaining properties are still checked.
    """
    reports = []
    for name in resolve(names):
        try:
            reports.append(check(name, bp, options))
        except SizeCapExceeded as e:
            logger.warning(f"Skipping {name}: {e}")
            reports.append(skipped_report(name, str(e)))
    return reports

"""
Posetkit - Verification Suites

Named groups of theorem instances evaluated on one bounded poset. The
search engine runs a suite over every enumerated class; any failing report
is a counterexample.

Subset-quantified laws (Galois lemma, cone laws) run over all subset pairs
when there are few enough and over a seeded sample otherwise.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from config.settings import Config
from core.complementation import bi_plus_mask, closed_masks, closed_sets, plus_mask, plus_table
from core.completion import (
    conv_all, conv_star, dm_completion, dm_orthogonality_check, embedding_check,
    hull_by_betweenness_mask, hull_mask, hull_orthogonality_check, is_convex_mask
)
from core.cones import (
    downclose_mask, le1_mask, le2_mask, lower_mask, max_mask, min_mask,
    sqle_mask, upclose_mask, upper_mask
)
from core.errors import SizeCapExceeded, UnknownProperty
from core.poset import BoundedPoset
from core.report import PropertyReport, bind, mask_names, skipped_report, vacuous_report
from core.residuation import MONOTONICITY, operator_identities, theorem_implications
from core.structure import (
    antitone_implications, complement_antichain_all, complement_convex_all,
    de_morgan_law, has_n5_with_bounds, is_complemented, is_distributive,
    is_uniquely_complemented, prop2_check
)

logger = logging.getLogger('posetkit.theorems')


@dataclass(frozen=True)
class CheckOptions:
    """
    Caps and sampling parameters shared by all checkers.

    Attributes:
        condition_cap: largest size for exhaustive conditions (5) and (6)
        hull_cap: largest size for exhaustive hull orthogonality
        conv_cap: largest size for building Conv★
        subset_cap: largest size for laws quantified over all subsets
        sample: random instances drawn above a cap; None raises instead
        law_sample: random subset pairs for the Galois and cone laws
        seed: sampling seed
    """

    condition_cap: int = Config.CONDITION_SUBSET_CAP
    hull_cap: int = Config.HULL_PAIR_CAP
    conv_cap: int = Config.CONV_STAR_CAP
    subset_cap: int = Config.SUBSET_ENUMERATION_CAP
    sample: Optional[int] = None
    law_sample: int = Config.DEFAULT_SAMPLE
    seed: int = Config.DEFAULT_SEED

    @classmethod
    def from_config(cls, config=Config, sample: Optional[int] = None,
                    seed: Optional[int] = None) -> 'CheckOptions':
        return cls(condition_cap=config.CONDITION_SUBSET_CAP,
                   hull_cap=config.HULL_PAIR_CAP,
                   conv_cap=config.CONV_STAR_CAP,
                   subset_cap=config.SUBSET_ENUMERATION_CAP,
                   sample=sample,
                   law_sample=sample or config.DEFAULT_SAMPLE,
                   seed=config.DEFAULT_SEED if seed is None else seed)

    def for_search(self, config=Config) -> 'CheckOptions':
        """Exponential checks run exhaustively only up to EXHAUSTIVE_CHECK_MAX_N."""
        limit = config.EXHAUSTIVE_CHECK_MAX_N
        return replace(self,
                       condition_cap=min(self.condition_cap, limit),
                       hull_cap=min(self.hull_cap, limit),
                       sample=self.sample or config.DEFAULT_SAMPLE)


def subset_pairs(bp: BoundedPoset, count: int, seed: int) -> Tuple[List[Tuple[int, int]], bool]:
    """
    All subset pairs when there are at most count of them, else count seeded pairs.

    Returns:
        tuple: (pairs, exhaustive)
    """
    universe = bp.base.full_mask + 1
    if universe * universe <= count:
        return [(a, b) for a in range(universe) for b in range(universe)], True
    rng = np.random.default_rng(seed)
    drawn = rng.integers(0, universe, size=(count, 2))
    return [(int(a), int(b)) for a, b in drawn], False


def _sampled_report(name: str, exhaustive: bool, count: int, **kwargs) -> PropertyReport:
    return PropertyReport(property=name, exhaustive=exhaustive,
                          samples=None if exhaustive else count, **kwargs)


# Subset laws

def galois_lemma(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """
    The four Galois laws of ⁺ on subset pairs.

    A ⊆ (A⁺)⁺; A ⊆ B implies B⁺ ⊆ A⁺; ((A⁺)⁺)⁺ = A⁺; A ⊆ B⁺ iff B ⊆ A⁺.
    """
    name = 'galois-lemma'
    pairs, exhaustive = subset_pairs(bp, options.law_sample, options.seed)
    for a, b in pairs:
        plus_a, plus_b = plus_mask(bp, a), plus_mask(bp, b)
        failed = None
        if a & ~bi_plus_mask(bp, a):
            failed = 'extensive'
        elif plus_a & ~plus_mask(bp, a & b) or plus_mask(bp, a | b) & ~plus_a:
            failed = 'antitone'
        elif plus_mask(bp, bi_plus_mask(bp, a)) != plus_a:
            failed = 'triple'
        elif (a & ~plus_b == 0) != (b & ~plus_a == 0):
            failed = 'exchange'
        if failed:
            return _sampled_report(name, exhaustive, len(pairs), holds=False,
                                   witness=bind(bp, A=('set', a), B=('set', b)),
                                   details={'law': failed})
    return _sampled_report(name, exhaustive, len(pairs), holds=True)


def _cone_law_failure(bp: BoundedPoset, a: int, b: int) -> Optional[str]:
    sub = a & b
    if (a & ~lower_mask(bp, b) == 0) != (b & ~upper_mask(bp, a) == 0):
        return 'galois'
    if lower_mask(bp, upper_mask(bp, lower_mask(bp, a))) != lower_mask(bp, a):
        return 'LUL=L'
    if upper_mask(bp, lower_mask(bp, upper_mask(bp, a))) != upper_mask(bp, a):
        return 'ULU=U'
    for close, label in ((upclose_mask, 'up'), (downclose_mask, 'down')):
        closed = close(bp, a)
        if a & ~closed:
            return f'{label}-extensive'
        if close(bp, sub) & ~close(bp, b):
            return f'{label}-monotone'
        if close(bp, closed) != closed:
            return f'{label}-idempotent'
    if upper_mask(bp, a) != upper_mask(bp, max_mask(bp, a)):
        return 'U(A)=U(Max A)'
    if lower_mask(bp, a) != lower_mask(bp, min_mask(bp, a)):
        return 'L(A)=L(Min A)'
    if not le1_mask(bp, a, max_mask(bp, a)) or not le2_mask(bp, min_mask(bp, a), a):
        return 'Max/Min bounds'
    if not le1_mask(bp, max_mask(bp, sub), max_mask(bp, b)):
        return 'Max monotone'
    if not le1_mask(bp, max_mask(bp, lower_mask(bp, b)), max_mask(bp, lower_mask(bp, sub))):
        return 'Max L antitone'
    if not le2_mask(bp, min_mask(bp, b), min_mask(bp, sub)):
        return 'Min antitone'
    if not le2_mask(bp, min_mask(bp, upper_mask(bp, sub)), min_mask(bp, upper_mask(bp, b))):
        return 'Min U monotone'
    down_b = downclose_mask(bp, b)
    le1 = le1_mask(bp, a, b)
    if le1 != (a & ~down_b == 0) or le1 != (downclose_mask(bp, a) & ~down_b == 0):
        return 'le1 characterisation'
    return None


def cone_laws(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """Galois correspondence of (U, L), closure laws of ↑ and ↓, and the Min/Max lemma."""
    name = 'cone-laws'
    pairs, exhaustive = subset_pairs(bp, options.law_sample, options.seed)
    for a, b in pairs:
        failed = _cone_law_failure(bp, a, b)
        if failed:
            return _sampled_report(name, exhaustive, len(pairs), holds=False,
                                   witness=bind(bp, A=('set', a), B=('set', b)),
                                   details={'law': failed})
    return _sampled_report(name, exhaustive, len(pairs), holds=True)


# Structure theorems

def distributive_forms_agree(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """The four distributive identities hold or fail together."""
    forms = {form: is_distributive(bp, form) for form in (1, 2, 3, 4)}
    values = {f'form-{form}': r.holds for form, r in forms.items()}
    if len(set(values.values())) == 1:
        return PropertyReport(property='distributive-forms-agree', holds=True, details=values)
    failing = next(r for r in forms.values() if not r.holds)
    return PropertyReport(property='distributive-forms-agree', holds=False,
                          witness=failing.witness, details=values)


def closed_sets_unique(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """On uniquely complemented posets Cl(P) = {∅, P} ∪ {x⁺ | x ∈ P}."""
    name = 'closed-sets-unique'
    if not is_uniquely_complemented(bp).holds:
        return vacuous_report(name, 'not uniquely complemented')
    expected = {0, bp.base.full_mask} | set(plus_table(bp))
    actual = set(closed_masks(bp))
    if expected == actual:
        return PropertyReport(property=name, holds=True, details={'size': len(actual)})
    extra = sorted(actual ^ expected)
    return PropertyReport(property=name, holds=False,
                          witness=bind(bp, X=('set', extra[0])),
                          details={'expected': len(expected), 'actual': len(actual)})


def closed_set_axioms(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    return closed_sets(bp).axioms


def complement_closure(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """a ∈ (a⁺)⁺ and ((a⁺)⁺)⁺ = a⁺ for every element of a complemented poset."""
    name = 'complement-closure'
    if not is_complemented(bp).holds:
        return vacuous_report(name, 'not complemented')
    table = plus_table(bp)
    for a in range(bp.size):
        closure = bi_plus_mask(bp, 1 << a)
        if not closure >> a & 1 or plus_mask(bp, closure) != table[a]:
            return PropertyReport(property=name, holds=False, witness=bind(bp, a=a),
                                  details={'closure': mask_names(bp, closure)})
    return PropertyReport(property=name, holds=True)


def antichain_n5_equivalence(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """Every x⁺ is an antichain iff there is no N₅ sublattice containing 0 and 1."""
    antichains = complement_antichain_all(bp)
    n5 = has_n5_with_bounds(bp)
    details = {'antichains': antichains.holds, 'n5_with_bounds': n5.holds}
    if antichains.holds != n5.holds:
        return PropertyReport(property='antichain-n5-equivalence', holds=True, details=details)
    witness = n5.witness if n5.holds else antichains.witness
    return PropertyReport(property='antichain-n5-equivalence', holds=False,
                          witness=witness, details=details)


def complement_convex_theorem(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    if not is_complemented(bp).holds:
        return vacuous_report('complement-convex-theorem', 'not complemented')
    report = complement_convex_all(bp)
    return replace(report, property='complement-convex-theorem')


def _closure_map(bp: BoundedPoset) -> List[int]:
    return [bi_plus_mask(bp, 1 << x) for x in range(bp.size)]


def closure_injectivity(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """If x ↦ (x⁺)⁺ is not injective then (x⁺)⁺ = {x} fails for some x."""
    name = 'closure-injectivity'
    closures = _closure_map(bp)
    if len(set(closures)) == bp.size:
        return vacuous_report(name, 'closure map injective')
    if any(closures[x] != 1 << x for x in range(bp.size)):
        return PropertyReport(property=name, holds=True)
    return PropertyReport(property=name, holds=False, details={'closures': 'all singletons'})


def injectivity_proposition(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """
    For injective x ↦ (x⁺)⁺ on a complemented poset, each a with (a⁺)⁺ ≠ {a}
    has some b ∈ (a⁺)⁺ with (b⁺)⁺ = {b}.
    """
    name = 'injectivity-proposition'
    if not is_complemented(bp).holds:
        return vacuous_report(name, 'not complemented')
    closures = _closure_map(bp)
    if len(set(closures)) != bp.size:
        return vacuous_report(name, 'closure map not injective')
    fixed = {x for x in range(bp.size) if closures[x] == 1 << x}
    for a in range(bp.size):
        if a in fixed:
            continue
        if not any(closures[a] >> b & 1 for b in fixed):
            return PropertyReport(property=name, holds=False, witness=bind(bp, a=a),
                                  details={'closure': mask_names(bp, closures[a])})
    return PropertyReport(property=name, holds=True, details={'fixed_points': len(fixed)})


def de_morgan_lemma(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """
    On complemented, not uniquely complemented posets both generalized
    De Morgan laws fail.
    """
    name = 'de-morgan-lemma'
    if not is_complemented(bp).holds:
        return vacuous_report(name, 'not complemented')
    if is_uniquely_complemented(bp).holds:
        return vacuous_report(name, 'uniquely complemented')
    laws = {law: de_morgan_law(bp, law) for law in ('join', 'meet')}
    details = {law: {'holds': r.holds, 'witness': r.witness} for law, r in laws.items()}
    holding = [r for r in laws.values() if r.holds]
    if holding:
        return PropertyReport(property=name, holds=False, details=details)
    return PropertyReport(property=name, holds=True, details=details)


# Completion and convexity

def hull_formula(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """
    A↓ ∩ A↑ is the betweenness hull, is convex, contains A and is
    ⊑-equivalent to A.
    """
    name = 'hull-formula'
    if bp.size <= options.subset_cap:
        masks: Iterable[int] = range(bp.base.full_mask + 1)
        exhaustive, samples = True, None
    else:
        rng = np.random.default_rng(options.seed)
        masks = [int(m) for m in rng.integers(0, bp.base.full_mask + 1, size=options.law_sample)]
        exhaustive, samples = False, options.law_sample
    for a in masks:
        hull = hull_mask(bp, a)
        problem = None
        if hull != hull_by_betweenness_mask(bp, a):
            problem = 'betweenness'
        elif not is_convex_mask(bp, hull) or a & ~hull:
            problem = 'convex-superset'
        elif not (sqle_mask(bp, a, hull) and sqle_mask(bp, hull, a)):
            problem = 'equivalence'
        if problem:
            return PropertyReport(property=name, holds=False, exhaustive=exhaustive, samples=samples,
                                  witness=bind(bp, A=('set', a)),
                                  details={'law': problem, 'hull': mask_names(bp, hull)})
    return PropertyReport(property=name, holds=True, exhaustive=exhaustive, samples=samples)


def conv_star_poset(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    return conv_star(bp, options.conv_cap).axioms


def conv_all_poset(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    """All convex subsets, ∅ included, form a poset under ⊑."""
    return replace(conv_all(bp, options.conv_cap).verify(), property='conv-all-poset')


def hull_orthogonality(bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> PropertyReport:
    return hull_orthogonality_check(bp, cap=options.hull_cap, sample=options.sample,
                                    seed=options.seed, conv_cap=options.conv_cap)


def _one(check: Callable[[BoundedPoset, CheckOptions], PropertyReport]):
    return lambda bp, options: [check(bp, options)]


SuiteCheck = Callable[[BoundedPoset, CheckOptions], List[PropertyReport]]

SUITES: Dict[str, List[SuiteCheck]] = {
    'galois-lemma': [_one(galois_lemma)],
    'cone-laws': [_one(cone_laws)],
    'distributive-forms': [_one(distributive_forms_agree)],
    'closed-sets': [_one(closed_set_axioms), _one(closed_sets_unique)],
    'prop1': [_one(complement_closure), _one(antichain_n5_equivalence),
              _one(complement_convex_theorem), _one(closure_injectivity),
              _one(injectivity_proposition)],
    'prop2': [lambda bp, options: [prop2_check(bp)]],
    'antitone-theorem': [lambda bp, options: [antitone_implications(bp)]],
    'de-morgan-lemma': [_one(de_morgan_lemma)],
    'operator-identities': [lambda bp, options: [operator_identities(bp)]],
    'monotonicity-lemma': [lambda bp, options: [MONOTONICITY[name](bp) for name in (
        'circ-monotone-left', 'odot-monotone-left', 'imp-monotone-right', 'hook-monotone-right')]],
    'derived-theorems': [lambda bp, options: theorem_implications(
        bp, options.condition_cap, options.sample, options.seed)],
    'dm-completion': [lambda bp, options: [dm_completion(bp).axioms, embedding_check(bp, options.subset_cap),
                                           dm_orthogonality_check(bp)]],
    'hull': [_one(hull_formula), _one(conv_star_poset), _one(conv_all_poset), _one(hull_orthogonality)],
}

SUITE_NAMES = tuple(SUITES) + ('all',)


def run_suite(name: str, bp: BoundedPoset, options: CheckOptions = CheckOptions()) -> List[PropertyReport]:
    """
    Evaluate every check of a suite on one poset.

    A check that exceeds a size cap is reported as skipped.

    Args:
        name: suite name or 'all'
        bp: bounded poset
        options: caps and sampling parameters

    Returns:
        list: PropertyReports in suite order
    """
    if name == 'all':
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnknownProperty(f"Unknown verification suite '{name}'")

    reports: List[PropertyReport] = []
    for suite in names:
        for check in SUITES[suite]:
            try:
                reports.extend(check(bp, options))
            except SizeCapExceeded as e:
                logger.warning(f"Skipping part of suite {suite}: {e}")
                reports.append(skipped_report(suite, str(e)))
    return reports

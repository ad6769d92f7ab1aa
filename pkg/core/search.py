"""
Posetkit - Search Engine

Runs predicate searches and universal verification suites over the
catalogue of bounded posets up to isomorphism.

Classes are evaluated in worker processes but results are merged in
(size, canonical form) order, so output does not depend on the number of
workers.
"""

import logging
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import Config
from core import registry
from core.enumeration import enumerate_bounded
from core.errors import PosetkitError, PredicateUnknown, SizeCapExceeded
from core.poset import BoundedPoset, canonical_form
from core.report import PropertyReport
from core.theorems import SUITE_NAMES, CheckOptions, run_suite

logger = logging.getLogger('posetkit.search')

MODES = ('find-first', 'find-all', 'verify-universal')

_TERM = re.compile(r'^(?P<negated>[!¬]?)\s*(?P<name>[a-z0-9][a-z0-9-]*)$')


@dataclass(frozen=True)
class Term:
    name: str
    negated: bool = False

    def __str__(self):
        return ('!' if self.negated else '') + self.name


def parse_predicate(expression: str) -> List[Term]:
    """
    Parse a conjunction such as ``uniquely-complemented & !boolean``.

    Terms are separated by '&' (or '∧') and negated by '!' (or '¬').

    Raises:
        PredicateUnknown: on a malformed term or an unregistered property name
    """
    if not expression or not expression.strip():
        raise PredicateUnknown("Empty predicate")
    terms = []
    for raw in re.split(r'[&∧]', expression):
        match = _TERM.match(raw.strip())
        if not match:
            raise PredicateUnknown(f"Malformed predicate term '{raw.strip()}'")
        name = match.group('name')
        if name not in registry.PROPERTIES:
            raise PredicateUnknown(f"Predicate names unknown property '{name}'")
        terms.append(Term(name=name, negated=bool(match.group('negated'))))
    return terms


@dataclass
class SearchSpec:
    """
    What to search for.

    Attributes:
        max_size: largest bounded poset size enumerated
        predicate: conjunction of (negated) property names, or None with a suite
        suite: verification suite name, implies verify-universal
        mode: find-first, find-all or verify-universal
        min_size: smallest size enumerated
        seed: seed for sampled sub-checks
        sample: sample count for exponential sub-checks above their caps
        threads: worker process count, 0 uses Config.THREADS (0 there means one per CPU)
        include: extra posets added to the stream
        enumerate: whether to enumerate classes at all (False searches only include)
    """

    max_size: int
    predicate: Optional[str] = None
    suite: Optional[str] = None
    mode: str = 'find-all'
    min_size: int = Config.MIN_ENUMERATION_SIZE
    seed: int = Config.DEFAULT_SEED
    sample: Optional[int] = None
    threads: int = 0
    include: Sequence[BoundedPoset] = ()
    enumerate: bool = True


@dataclass
class SearchMatch:
    """A matching class (or counterexample) with the reports that decided it."""

    size: int
    canonical: str
    poset: BoundedPoset
    reports: List[PropertyReport]


@dataclass
class SearchResult:
    """
    Outcome of a search.

    Attributes:
        mode: search mode
        examined: number of isomorphism classes evaluated
        per_size: examined classes by size
        matches: matching classes, or counterexamples in verify-universal mode
        passed: verify-universal only, True when there is no counterexample
        statistics: per check name, counts of verified, vacuous, failed and sampled reports
        elapsed: wall time in seconds
    """

    mode: str
    examined: int = 0
    per_size: Dict[int, int] = field(default_factory=dict)
    matches: List[SearchMatch] = field(default_factory=list)
    passed: Optional[bool] = None
    statistics: Dict[str, Dict[str, int]] = field(default_factory=dict)
    elapsed: float = 0.0


def _validate(spec: SearchSpec, config) -> List[Term]:
    if spec.mode not in MODES:
        raise PosetkitError(f"Unknown search mode '{spec.mode}'")
    if spec.max_size < config.MIN_ENUMERATION_SIZE:
        raise PosetkitError(f"max_size must be at least {config.MIN_ENUMERATION_SIZE}")
    if spec.enumerate and spec.max_size > config.MAX_ENUMERATION_SIZE:
        raise SizeCapExceeded('search', spec.max_size, config.MAX_ENUMERATION_SIZE)
    if (spec.predicate is None) == (spec.suite is None):
        raise PosetkitError("Exactly one of predicate and suite is required")
    if spec.suite is not None:
        if spec.suite not in SUITE_NAMES:
            raise PredicateUnknown(f"Unknown verification suite '{spec.suite}'")
        if spec.mode != 'verify-universal':
            raise PosetkitError("Suites run in verify-universal mode only")
        return []
    return parse_predicate(spec.predicate)


def _worker_count(spec: SearchSpec, config) -> int:
    threads = spec.threads or config.THREADS
    return threads if threads > 0 else (os.cpu_count() or 1)


def _candidates(spec: SearchSpec, config) -> List[Tuple[int, bytes, BoundedPoset]]:
    """Representatives keyed by (size, canonical form), duplicates removed."""
    found: Dict[bytes, BoundedPoset] = {}
    if spec.enumerate:
        for n in range(max(spec.min_size, config.MIN_ENUMERATION_SIZE), spec.max_size + 1):
            for bp in enumerate_bounded(n, config.MAX_ENUMERATION_SIZE):
                found.setdefault(canonical_form(bp), bp)
    for bp in spec.include:
        key = canonical_form(bp)
        if key in found:
            logger.debug(f"Included poset of size {bp.size} is already in the stream")
        # the included copy keeps its own element names
        found[key] = bp
    return sorted(((bp.size, key, bp) for key, bp in found.items()), key=lambda t: (t[0], t[1]))


def _evaluate_predicate(terms: List[Term], bp: BoundedPoset,
                        options: CheckOptions) -> Tuple[bool, List[PropertyReport]]:
    reports = []
    for term in terms:
        report = registry.check(term.name, bp, options)
        reports.append(report)
        if report.holds == term.negated:
            return False, reports
    return True, reports


def evaluate_class(terms: List[Term], suite: Optional[str], options: CheckOptions,
                   bp: BoundedPoset) -> Tuple[bool, List[PropertyReport]]:
    """Decide one class; called in worker processes, so arguments must pickle."""
    if suite is not None:
        reports = run_suite(suite, bp, options)
        return not all(r.holds for r in reports), reports
    return _evaluate_predicate(terms, bp, options)


@contextmanager
def _batch_mapper(evaluate, workers: int):
    """Map evaluate over a batch of posets, in worker processes when there is more than one worker."""
    if workers <= 1:
        yield lambda batch: [evaluate(bp) for bp in batch]
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield lambda batch: list(pool.map(evaluate, batch, chunksize=max(1, len(batch) // (4 * workers))))


def _tally(statistics: Dict[str, Dict[str, int]], reports: List[PropertyReport]):
    for report in reports:
        row = statistics.setdefault(report.property,
                                    {'verified': 0, 'vacuous': 0, 'failed': 0, 'sampled': 0})
        if not report.holds:
            row['failed'] += 1
        elif report.vacuous:
            row['vacuous'] += 1
        else:
            row['verified'] += 1
        if not report.exhaustive:
            row['sampled'] += 1


def run_search(spec: SearchSpec, config=Config) -> SearchResult:
    """
    Apply a predicate or a verification suite to every enumerated class.

    Args:
        spec: search specification
        config: configuration class supplying caps and defaults

    Returns:
        SearchResult: deterministic for a fixed spec regardless of worker count

    Raises:
        PredicateUnknown: if the predicate or suite names nothing registered
        SizeCapExceeded: if max_size exceeds the enumeration cap
    """
    terms = _validate(spec, config)
    options = CheckOptions.from_config(config, spec.sample, spec.seed).for_search(config)
    started = time.monotonic()
    candidates = _candidates(spec, config)
    workers = _worker_count(spec, config)
    target = spec.suite or ' & '.join(str(t) for t in terms)
    logger.info(f"Searching {len(candidates)} classes ({spec.mode}: {target}) with {workers} workers")

    evaluate = partial(evaluate_class, terms, spec.suite, options)
    result = SearchResult(mode=spec.mode)
    sizes = sorted({size for size, _, _ in candidates})
    with _batch_mapper(evaluate, workers) as evaluate_batch:
        for size in sizes:
            batch = [c for c in candidates if c[0] == size]
            outcomes = evaluate_batch([bp for _, _, bp in batch])
            result.per_size[size] = len(batch)
            result.examined += len(batch)
            for (n, key, bp), (matched, reports) in zip(batch, outcomes):
                if spec.suite is not None:
                    _tally(result.statistics, reports)
                    reports = [r for r in reports if not r.holds]
                if matched:
                    result.matches.append(SearchMatch(size=n, canonical=key.hex(), poset=bp, reports=reports))
            logger.info(f"Size {size}: {len(batch)} classes, {len(result.matches)} matches so far")
            if spec.mode == 'find-first' and result.matches:
                result.matches = result.matches[:1]
                break

    if spec.mode == 'verify-universal':
        result.passed = not result.matches
        if result.matches:
            logger.warning(f"Verification found {len(result.matches)} counterexamples")
    result.elapsed = time.monotonic() - started
    return result

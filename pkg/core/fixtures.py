"""
Posetkit - Fixture Corpus

Loads the bundled fixture posets through data/fixtures/manifest.yaml and
checks the facts the manifest records for each of them.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
from marshmallow import ValidationError

from api.validators.manifest_schema import DERIVE_CLAIMS, ManifestSchema
from config.settings import Config
from core import registry, structure
from core.errors import ManifestError, PosetkitError
from core.operations import Derived, derive, evaluate_names
from core.poset import BoundedPoset, Poset, as_bounded, horizontal_sum, is_isomorphic
from core.poset_file import load_poset, load_yaml
from core.report import mask_names
from core.residuation import condition_sides
from core.theorems import CheckOptions

logger = logging.getLogger('posetkit.fixtures')


@dataclass
class FactOutcome:
    """Result of checking one manifest fact."""

    fixture: str
    kind: str
    claim: str
    passed: bool
    observed: Any = None
    details: Dict[str, Any] = field(default_factory=dict)


def _side_names(bp: BoundedPoset, sides) -> List[List[str]]:
    return [mask_names(bp, mask) for mask in sides]


def _sides_at(bp: BoundedPoset, identity: str, at: Dict[str, str]):
    """
    Both sides of a named identity at a variable binding.

    Returns:
        (left, right) masks; the identity fails when they differ. For the
        antitone conditions the result is (holds, None).
    """
    idx = {var: bp.base.index_of(name) for var, name in at.items()}
    if identity == 'distributive' or identity.startswith('distributive-'):
        form = 1 if identity == 'distributive' else int(identity.rsplit('-', 1)[1])
        return structure.distributive_sides(bp, form, idx['x'], idx['y'], idx['z'])
    if identity in ('de-morgan-join', 'de-morgan-meet'):
        return structure.de_morgan_sides(bp, identity.rsplit('-', 1)[1], idx['x'], idx['y'])
    if identity.startswith('antitone-'):
        return structure.antitone_pair(bp, identity.split('-', 1)[1], idx['x'], idx['y']), None
    if identity in ('modular-upper', 'modular-lower'):
        sides = structure.modular_sides(bp, identity.split('-', 1)[1], idx['x'], idx['y'], idx['z'])
        if sides is None:
            raise PosetkitError(f"{identity}: side condition does not hold at {at}")
        return sides
    if identity in ('condition-1', 'condition-2', 'condition-3', 'condition-4'):
        contained, container = condition_sides(bp, int(identity[-1]), idx['x'], idx['y'])
        return contained, contained & container
    raise PosetkitError(f"No identity named '{identity}'")


def _same_binding(observed, expected) -> bool:
    if isinstance(expected, list):
        return isinstance(observed, (list, tuple)) and sorted(observed) == sorted(expected)
    return observed == expected


def _ortho_under_names(derived: Derived, target: BoundedPoset) -> bool:
    """
    Identify derived elements with the equally named elements of target.

    True when that map is an order isomorphism and carries the derived
    orthocomplement to an orthocomplementation of target.
    """
    source = derived.poset.base
    names = list(target.base.names)
    if sorted(source.names) != sorted(names):
        return False
    index = [names.index(label) for label in source.names]
    if not (target.base.leq[np.ix_(index, index)] == source.leq).all():
        return False
    mapping = [0] * target.size
    for label, image in derived.orthocomplement.items():
        mapping[names.index(label)] = names.index(image)
    return structure.is_orthocomplementation(target, mapping).holds


class FixtureCorpus:
    """
    The fixture posets named in the manifest.

    Posets are parsed on first use and cached by fixture name.
    """

    def __init__(self, config=Config):
        self.config = config
        self.fixtures_dir = Path(config.FIXTURES_DIR)
        self.manifest_file = Path(config.MANIFEST_FILE)
        self._manifest: Optional[Dict[str, Any]] = None
        self._posets: Dict[str, Poset] = {}

    @property
    def manifest(self) -> Dict[str, Any]:
        if self._manifest is None:
            self._manifest = self.load_manifest()
        return self._manifest

    def load_manifest(self) -> Dict[str, Any]:
        """
        Read and validate the manifest.

        Raises:
            ManifestError: if the file is missing, not YAML or fails the schema
        """
        try:
            with open(self.manifest_file, 'r', encoding='utf-8') as f:
                raw = load_yaml(f.read())
        except OSError as e:
            raise ManifestError(f"Cannot read manifest {self.manifest_file}: {e}") from e
        except Exception as e:
            raise ManifestError(f"Manifest {self.manifest_file} is not valid YAML: {e}") from e
        try:
            data = ManifestSchema().load(raw or {})
        except ValidationError as e:
            raise ManifestError(f"Invalid manifest {self.manifest_file}: {e.messages}") from e
        for name, fixture in data['fixtures'].items():
            if not (self.fixtures_dir / fixture['file']).exists():
                raise ManifestError(f"Fixture '{name}' points to missing file {fixture['file']}")
        logger.info(f"Loaded manifest with {len(data['fixtures'])} fixtures")
        return data

    def names(self) -> List[str]:
        return list(self.manifest['fixtures'])

    def entry(self, name: str) -> Dict[str, Any]:
        try:
            return self.manifest['fixtures'][name]
        except KeyError:
            raise ManifestError(f"Unknown fixture '{name}'")

    def path(self, name: str) -> Path:
        return self.fixtures_dir / self.entry(name)['file']

    def load(self, name: str) -> Poset:
        if name not in self._posets:
            self._posets[name] = load_poset(self.path(name))
        return self._posets[name]

    def bounded(self, name: str) -> BoundedPoset:
        return as_bounded(self.load(name))

    # Fact checking

    def check_fact(self, name: str, fact: Dict[str, Any],
                   options: Optional[CheckOptions] = None) -> FactOutcome:
        """
        Check one fact about fixture name.

        Args:
            name: fixture name
            fact: a fact as loaded by FactSchema
            options: caps and sampling for property facts

        Returns:
            FactOutcome: passed is True when the observation matches the claim
        """
        bp = self.bounded(name)
        options = options or CheckOptions.from_config(self.config, sample=self.config.DEFAULT_SAMPLE)

        if 'property' in fact:
            report = registry.check(fact['property'], bp, options)
            passed = report.holds == fact['holds']
            expected_witness = fact.get('witness')
            if passed and expected_witness is not None:
                passed = all(report.witness and _same_binding(report.witness.get(k), v)
                             for k, v in expected_witness.items())
            return FactOutcome(name, 'property', f"{fact['property']} = {fact['holds']}", passed,
                               observed=report.holds, details={'witness': report.witness})

        if 'fails_at' in fact:
            identity = fact['fails_at']
            left, right = _sides_at(bp, identity, fact['at'])
            if right is None:
                passed = not left
                observed = {'holds': left}
            else:
                passed = left != right
                observed = {'sides': _side_names(bp, (left, right))}
                if passed and 'sides' in fact:
                    passed = observed['sides'] == [list(s) for s in fact['sides']]
            claim = f"{identity} fails at {fact['at']}"
            return FactOutcome(name, 'fails_at', claim, passed, observed=observed)

        if 'op' in fact:
            observed = evaluate_names(bp, fact['op'], fact['args'])
            expected = fact['equals']
            if isinstance(observed, list):
                passed = isinstance(expected, list) and sorted(observed) == sorted(expected)
            else:
                passed = observed == expected
            claim = f"{fact['op']}({', '.join(fact['args'])}) = {expected}"
            return FactOutcome(name, 'op', claim, passed, observed=observed)

        if 'derive' in fact:
            derived = derive(bp, fact['derive'], self.config.CONV_STAR_CAP)
            checks = {}
            if 'size' in fact:
                checks['size'] = derived.poset.size == fact['size']
            if 'labels' in fact:
                checks['labels'] = sorted(derived.poset.names) == sorted(fact['labels'])
            if 'isomorphic_to' in fact:
                checks['isomorphic_to'] = is_isomorphic(derived.poset, self.load(fact['isomorphic_to']))
            if 'orthocomplement' in fact:
                checks['orthocomplement'] = derived.orthocomplement == fact['orthocomplement']
                if 'isomorphic_to' in fact:
                    checks['orthocomplement_on_target'] = (
                        derived.orthocomplement is not None
                        and _ortho_under_names(derived, self.bounded(fact['isomorphic_to'])))
            claim = ', '.join(f"{k}={fact[k]}" for k in DERIVE_CLAIMS if k in fact)
            return FactOutcome(name, 'derive', f"{fact['derive']}: {claim}", all(checks.values()),
                               observed={'size': derived.poset.size}, details=checks)

        other = fact['horizontal_sum']
        total = horizontal_sum(bp, self.bounded(other), self.config.HORIZONTAL_SUM_SUFFIX)
        passed = is_isomorphic(total, self.load(fact['isomorphic_to']))
        return FactOutcome(name, 'horizontal_sum', f"{name} + {other} ≅ {fact['isomorphic_to']}",
                           passed, observed={'size': total.size})

    def check_fixture(self, name: str, options: Optional[CheckOptions] = None) -> List[FactOutcome]:
        outcomes = [self.check_fact(name, fact, options) for fact in self.entry(name)['facts']]
        failed = [o for o in outcomes if not o.passed]
        if failed:
            logger.warning(f"{name}: {len(failed)} of {len(outcomes)} facts do not hold")
        else:
            logger.info(f"{name}: all {len(outcomes)} facts hold")
        return outcomes

    def check_all(self, options: Optional[CheckOptions] = None) -> List[FactOutcome]:
        outcomes = []
        for name in self.names():
            outcomes.extend(self.check_fixture(name, options))
        return outcomes

"""
Posetkit - Property Reports

The result type shared by every checker: a named property, whether it
holds, and a witness binding demonstrating failure (or success for
existential searches).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from core.poset import PosetLike, Subset, poset_of

WitnessValue = Union[str, List[str]]


@dataclass
class PropertyReport:
    """
    Outcome of deciding one property on one poset.

    Attributes:
        property: registry name of the property
        holds: whether the property holds
        witness: variable bindings demonstrating failure, or success for searches
        details: extra named values (both sides of a failed identity, counts)
        vacuous: the property is a theorem instance whose hypothesis failed
        exhaustive: False when the quantifier was sampled instead of enumerated
        samples: number of sampled instances when not exhaustive
    """

    property: str
    holds: bool
    witness: Optional[Dict[str, WitnessValue]] = None
    details: Dict[str, Any] = field(default_factory=dict)
    vacuous: bool = False
    exhaustive: bool = True
    samples: Optional[int] = None

    def __bool__(self):
        return self.holds


def element_name(p: PosetLike, x: Optional[int]) -> Optional[str]:
    return None if x is None else poset_of(p).names[x]


def mask_names(p: PosetLike, mask: int) -> List[str]:
    return poset_of(p).from_mask(mask).names()


def bind(p: PosetLike, **values) -> Dict[str, WitnessValue]:
    """
    Build a witness binding with element indices and masks rendered as names.

    Integers are element indices, Subsets and ``('set', mask)`` tuples are sets.
    """
    out: Dict[str, WitnessValue] = {}
    for key, value in values.items():
        if isinstance(value, Subset):
            out[key] = value.names()
        elif isinstance(value, tuple) and len(value) == 2 and value[0] == 'set':
            out[key] = mask_names(p, value[1])
        elif isinstance(value, int):
            out[key] = element_name(p, value)
        else:
            out[key] = value
    return out


def vacuous_report(name: str, reason: str) -> PropertyReport:
    """A theorem instance whose hypothesis does not hold."""
    return PropertyReport(property=name, holds=True, vacuous=True,
                          details={'reason': reason})


def all_hold(reports: List[PropertyReport]) -> bool:
    return all(r.holds for r in reports)


def skipped_report(name: str, reason: str) -> PropertyReport:
    """A check not run because of a size cap."""
    return PropertyReport(property=name, holds=True, exhaustive=False, samples=0,
                          details={'skipped': reason})

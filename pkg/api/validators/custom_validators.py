"""
Posetkit - Custom Validators

Validation rules that span several fields or need registry context,
beyond what single marshmallow fields check.
"""

import re
from typing import Any, Dict, Iterable, List, Optional, Sequence

from marshmallow import ValidationError

TOKEN_PATTERN = re.compile(r'^[^\s<#][^\s<]*$')
PREDICATE_TERM = re.compile(r'^[!¬]?\s*[a-z0-9][a-z0-9-]*$')


def validate_token(value: str):
    """Element names are non-empty, whitespace-free and contain no '<'."""
    if not isinstance(value, str) or not TOKEN_PATTERN.match(value):
        raise ValidationError(f"Invalid element name '{value}'")


class PosetRuleValidator:
    """
    Cross-field rules for poset documents, search specs and fixture facts.

    Every method returns a list of error messages; an empty list means valid.
    """

    @staticmethod
    def validate_unique_names(names: Sequence[str]) -> List[str]:
        seen = set()
        errors = []
        for name in names:
            if name in seen:
                errors.append(f"Duplicate element name '{name}'")
            seen.add(name)
        return errors

    @staticmethod
    def validate_cover_endpoints(names: Iterable[str], covers: Iterable[Sequence[str]]) -> List[str]:
        """
        Every cover pair names two known elements.

        Args:
            names: element names
            covers: (lower, upper) pairs

        Returns:
            List of validation error messages
        """
        known = set(names)
        errors = []
        for i, pair in enumerate(covers):
            if len(pair) != 2:
                errors.append(f"Cover {i}: expected a (lower, upper) pair, got {len(pair)} values")
                continue
            for endpoint in pair:
                if endpoint not in known:
                    errors.append(f"Cover {i}: unknown element '{endpoint}'")
        return errors

    @staticmethod
    def validate_bounds(names: Sequence[str], bottom: Any, top: Any) -> List[str]:
        errors = []
        for label, value in (('bottom', bottom), ('top', top)):
            if value is not None and value not in names:
                errors.append(f"{label} '{value}' is not an element")
        if bottom is not None and bottom == top:
            errors.append("bottom and top must differ")
        return errors

    @staticmethod
    def validate_predicate_expression(expression: str, known: Iterable[str]) -> List[str]:
        """
        A conjunction of optionally negated registered property names.

        Args:
            expression: e.g. ``complemented & !uniquely-complemented``
            known: registered property names

        Returns:
            List of validation error messages
        """
        if not expression or not expression.strip():
            return ["Predicate expression is empty"]
        known = set(known)
        errors = []
        for raw in re.split(r'[&∧]', expression):
            term = raw.strip()
            if not PREDICATE_TERM.match(term):
                errors.append(f"Malformed predicate term '{term}'")
                continue
            name = term.lstrip('!¬').strip()
            if name not in known:
                errors.append(f"Unknown property '{name}'")
        return errors

    @staticmethod
    def validate_search_sizes(min_size: int, max_size: int, cap: Optional[int] = None) -> List[str]:
        errors = []
        if min_size < 2:
            errors.append("Bounded posets have at least 2 elements")
        if max_size < min_size:
            errors.append(f"max_size {max_size} is below min_size {min_size}")
        if cap is not None and max_size > cap:
            errors.append(f"max_size {max_size} exceeds the enumeration cap {cap}")
        return errors

    @staticmethod
    def validate_fact_kind(fact: Dict[str, Any], kinds: Sequence[str]) -> List[str]:
        """A manifest fact names exactly one kind of claim."""
        present = [k for k in kinds if fact.get(k) is not None]
        if len(present) != 1:
            return [f"Fact must have exactly one of {', '.join(kinds)}; found {present or 'none'}"]
        return []

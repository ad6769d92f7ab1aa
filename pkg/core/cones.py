"""
Posetkit - Cones and Closures

Upper and lower cones, minimal and maximal elements, up/down closures,
the subset quasiorders and suprema/infima in arbitrary finite posets.

Every operator has a mask-level form (suffix ``_mask``) used by the
exhaustive checkers and a Subset-level form that validates ownership.
Set-valued results are always subsets, never sorted lists.
"""

from typing import Optional

from core.poset import PosetLike, Subset, bits, poset_of


# Mask-level operators

def upper_mask(p: PosetLike, mask: int) -> int:
    """U(A): common upper bounds. U of the empty set is P."""
    base = poset_of(p)
    out = base.full_mask
    for x in bits(mask):
        out &= base.up_masks[x]
    return out


def lower_mask(p: PosetLike, mask: int) -> int:
    """L(A): common lower bounds. L of the empty set is P."""
    base = poset_of(p)
    out = base.full_mask
    for x in bits(mask):
        out &= base.down_masks[x]
    return out


def min_mask(p: PosetLike, mask: int) -> int:
    base = poset_of(p)
    out = 0
    for x in bits(mask):
        if base.down_masks[x] & mask == 1 << x:
            out |= 1 << x
    return out


def max_mask(p: PosetLike, mask: int) -> int:
    base = poset_of(p)
    out = 0
    for x in bits(mask):
        if base.up_masks[x] & mask == 1 << x:
            out |= 1 << x
    return out


def upclose_mask(p: PosetLike, mask: int) -> int:
    base = poset_of(p)
    out = 0
    for x in bits(mask):
        out |= base.up_masks[x]
    return out


def downclose_mask(p: PosetLike, mask: int) -> int:
    base = poset_of(p)
    out = 0
    for x in bits(mask):
        out |= base.down_masks[x]
    return out


def set_le_mask(p: PosetLike, a: int, b: int) -> bool:
    """A <= B: every member of A is below every member of B."""
    return b & ~upper_mask(p, a) == 0


def le1_mask(p: PosetLike, a: int, b: int) -> bool:
    """A <=1 B: A is included in the down closure of B."""
    return a & ~downclose_mask(p, b) == 0


def le2_mask(p: PosetLike, a: int, b: int) -> bool:
    """A <=2 B: B is included in the up closure of A."""
    return b & ~upclose_mask(p, a) == 0


def sqle_mask(p: PosetLike, a: int, b: int) -> bool:
    return le1_mask(p, a, b) and le2_mask(p, a, b)


def least_of_mask(p: PosetLike, mask: int) -> Optional[int]:
    """The least element of the set mask, if one exists."""
    base = poset_of(p)
    for x in bits(mask):
        if mask & ~base.up_masks[x] == 0:
            return x
    return None


def greatest_of_mask(p: PosetLike, mask: int) -> Optional[int]:
    base = poset_of(p)
    for x in bits(mask):
        if mask & ~base.down_masks[x] == 0:
            return x
    return None


def sup_mask(p: PosetLike, mask: int) -> Optional[int]:
    return least_of_mask(p, upper_mask(p, mask))


def inf_mask(p: PosetLike, mask: int) -> Optional[int]:
    return greatest_of_mask(p, lower_mask(p, mask))


# Subset-level operators

def _wrap(p: PosetLike, mask: int) -> Subset:
    return poset_of(p).from_mask(mask)


def _own(p: PosetLike, a: Subset) -> int:
    return poset_of(p).owns(a).mask


def upper(p: PosetLike, a: Subset) -> Subset:
    """
    U(A) := {x | a <= x for all a in A}.

    Args:
        p: poset owning A
        a: subset of p

    Returns:
        Subset: the upper cone; U of the empty set is the whole poset

    Raises:
        ForeignSubset: if A belongs to another poset
    """
    return _wrap(p, upper_mask(p, _own(p, a)))


def lower(p: PosetLike, a: Subset) -> Subset:
    """L(A) := {x | x <= a for all a in A}; L of the empty set is P."""
    return _wrap(p, lower_mask(p, _own(p, a)))


def min_of(p: PosetLike, a: Subset) -> Subset:
    """Minimal elements of A (empty only for empty A)."""
    return _wrap(p, min_mask(p, _own(p, a)))


def max_of(p: PosetLike, a: Subset) -> Subset:
    """Maximal elements of A (empty only for empty A)."""
    return _wrap(p, max_mask(p, _own(p, a)))


def upclose(p: PosetLike, a: Subset) -> Subset:
    """Smallest upset including A."""
    return _wrap(p, upclose_mask(p, _own(p, a)))


def downclose(p: PosetLike, a: Subset) -> Subset:
    """Smallest down set including A."""
    return _wrap(p, downclose_mask(p, _own(p, a)))


def set_le(p: PosetLike, a: Subset, b: Subset) -> bool:
    """A <= B. Holds vacuously when either side is empty."""
    return set_le_mask(p, _own(p, a), _own(p, b))


def le1(p: PosetLike, a: Subset, b: Subset) -> bool:
    """
    A <=1 B: every x in A lies below some y in B.

    Vacuously true for empty A.
    """
    return le1_mask(p, _own(p, a), _own(p, b))


def le2(p: PosetLike, a: Subset, b: Subset) -> bool:
    """
    A <=2 B: every y in B lies above some x in A.

    Vacuously true for empty B.
    """
    return le2_mask(p, _own(p, a), _own(p, b))


def sqle(p: PosetLike, a: Subset, b: Subset) -> bool:
    """A ⊑ B: both A <=1 B and A <=2 B."""
    return sqle_mask(p, _own(p, a), _own(p, b))


def sup_of(p: PosetLike, a: Subset) -> Optional[int]:
    """Index of the supremum of A, or None. In a bounded poset sup of the empty set is 0."""
    return sup_mask(p, _own(p, a))


def inf_of(p: PosetLike, a: Subset) -> Optional[int]:
    """Index of the infimum of A, or None."""
    return inf_mask(p, _own(p, a))

"""
Posetkit - Complementation

The orthogonality relation, the operator ⁺ on elements and subsets,
closed subsets and the complete ortholattice Cl(P) of closed subsets.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from core.cones import greatest_of_mask, inf_mask, least_of_mask, sup_mask
from core.errors import EmptyComplementSet
from core.poset import BoundedPoset, Poset, Subset, bits, subset_sort_key
from core.report import PropertyReport

logger = logging.getLogger('posetkit.complementation')


@lru_cache(maxsize=512)
def plus_table(bp: BoundedPoset) -> Tuple[int, ...]:
    """x⁺ as a mask, for every element x."""
    n = bp.size
    table = [0] * n
    for a in range(n):
        for b in range(a, n):
            pair = (1 << a) | (1 << b)
            if sup_mask(bp, pair) == bp.top and inf_mask(bp, pair) == bp.bottom:
                table[a] |= 1 << b
                table[b] |= 1 << a
    return tuple(table)


def perp(bp: BoundedPoset, a, b) -> bool:
    """
    a ⊥ b: the supremum of {a, b} is 1 and the infimum is 0.

    Args:
        bp: bounded poset
        a, b: element names or indices

    Returns:
        bool: True if b is a complement of a
    """
    x, y = bp.base.index_of(a), bp.base.index_of(b)
    return bool(plus_table(bp)[x] >> y & 1)


def plus_elem_mask(bp: BoundedPoset, a: int) -> int:
    return plus_table(bp)[a]


def plus_mask(bp: BoundedPoset, mask: int) -> int:
    """A⁺ as the intersection of x⁺ over A; the empty set maps to P."""
    table = plus_table(bp)
    out = bp.base.full_mask
    for x in bits(mask):
        out &= table[x]
    return out


def bi_plus_mask(bp: BoundedPoset, mask: int) -> int:
    return plus_mask(bp, plus_mask(bp, mask))


def plus_elem(bp: BoundedPoset, a) -> Subset:
    """a⁺: the set of all complements of a."""
    return bp.base.from_mask(plus_elem_mask(bp, bp.base.index_of(a)))


def plus_set(bp: BoundedPoset, a: Subset) -> Subset:
    """A⁺: the elements orthogonal to every member of A. ∅⁺ = P and P⁺ = ∅."""
    return bp.base.from_mask(plus_mask(bp, bp.base.owns(a).mask))


def bi_plus(bp: BoundedPoset, a: Subset) -> Subset:
    """(A⁺)⁺."""
    return bp.base.from_mask(bi_plus_mask(bp, bp.base.owns(a).mask))


def is_closed(bp: BoundedPoset, a: Subset) -> bool:
    """A is closed when (A⁺)⁺ = A."""
    return bi_plus(bp, a) == a


def plus_least(bp: BoundedPoset, a) -> Optional[int]:
    """
    Smallest element of a⁺, if any.

    Raises:
        EmptyComplementSet: if a has no complement
    """
    x = bp.base.index_of(a)
    mask = plus_elem_mask(bp, x)
    if not mask:
        raise EmptyComplementSet(f"'{bp.names[x]}' has no complement")
    return least_of_mask(bp, mask)


def plus_greatest(bp: BoundedPoset, a) -> Optional[int]:
    """Greatest element of a⁺, if any; raises EmptyComplementSet for no complement."""
    x = bp.base.index_of(a)
    mask = plus_elem_mask(bp, x)
    if not mask:
        raise EmptyComplementSet(f"'{bp.names[x]}' has no complement")
    return greatest_of_mask(bp, mask)


def subset_label(p: Poset, mask: int) -> str:
    """Whitespace-free token naming a subset, e.g. ``{a,c}``."""
    return '{' + ','.join(p.names[i] for i in bits(mask)) + '}'


def closed_masks(bp: BoundedPoset) -> List[int]:
    """
    All closed subsets as masks, canonically ordered.

    Every closed set is A⁺ = ⋂_{x∈A} x⁺, so closing {x⁺} ∪ {P}
    under pairwise intersection enumerates them.
    """
    generators = set(plus_table(bp))
    found = {bp.base.full_mask}
    frontier = [bp.base.full_mask]
    while frontier:
        fresh = []
        for current in frontier:
            for g in generators:
                meet = current & g
                if meet not in found:
                    found.add(meet)
                    fresh.append(meet)
        frontier = fresh
    return sorted(found, key=subset_sort_key)


class ClLattice:
    """
    The complete ortholattice of ⁺-closed subsets of a bounded poset.

    Elements are stored as canonically ordered masks together with the full
    inclusion relation and the orthocomplement as an index map.
    """

    def __init__(self, bp: BoundedPoset):
        self.base = bp
        masks = closed_masks(bp)
        self.masks = tuple(masks)
        self.position: Dict[int, int] = {m: i for i, m in enumerate(masks)}
        m = len(masks)
        order = np.zeros((m, m), dtype=bool)
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                order[i, j] = a & ~b == 0
        order.flags.writeable = False
        self.order = order
        self.ortho = tuple(self.position[plus_mask(bp, a)] for a in masks)
        self.bottom_index = self.position[0]
        self.top_index = self.position[bp.base.full_mask]
        self.axioms: Optional[PropertyReport] = None
        logger.debug(f"Cl(P) has {m} closed subsets for a poset of size {bp.size}")

    @property
    def elements(self) -> List[Subset]:
        return [self.base.base.from_mask(mask) for mask in self.masks]

    def __len__(self):
        return len(self.masks)

    def index_of(self, subset: Subset) -> int:
        return self.position[self.base.base.owns(subset).mask]

    def meet(self, indices: Iterable[int]) -> int:
        out = self.base.base.full_mask
        for i in indices:
            out &= self.masks[i]
        return self.position[out]

    def join(self, indices: Iterable[int]) -> int:
        union = 0
        for i in indices:
            union |= self.masks[i]
        return self.position[bi_plus_mask(self.base, union)]

    def labels(self) -> List[str]:
        return [subset_label(self.base.base, mask) for mask in self.masks]

    def as_bounded(self) -> BoundedPoset:
        return BoundedPoset(Poset(self.labels(), self.order), self.bottom_index, self.top_index)

    def verify(self) -> PropertyReport:
        """
        Check the ortholattice axioms.

        Returns:
            PropertyReport: 'cl-ortholattice' with the first failing axiom
        """
        name = 'cl-ortholattice'
        m = len(self.masks)
        p = self.base.base

        def fail(axiom, **values):
            witness = {k: subset_label(p, self.masks[v]) for k, v in values.items()}
            return PropertyReport(property=name, holds=False, witness=witness,
                                  details={'axiom': axiom})

        for i in range(m):
            if not self.order[self.bottom_index, i] or not self.order[i, self.top_index]:
                return fail('bounds', X=i)
            o = self.ortho[i]
            if self.ortho[o] != i:
                return fail('involution', X=i)
            if self.meet([i, o]) != self.bottom_index:
                return fail('complement-meet', X=i)
            if self.join([i, o]) != self.top_index:
                return fail('complement-join', X=i)
            for j in range(m):
                if self.order[i, j] and not self.order[self.ortho[j], o]:
                    return fail('antitone', X=i, Y=j)
                # join must be the least upper bound in the inclusion order
                k = self.join([i, j])
                uppers = [t for t in range(m) if self.order[i, t] and self.order[j, t]]
                if not all(self.order[k, t] for t in uppers) or k not in uppers:
                    return fail('join', X=i, Y=j)
        return PropertyReport(property=name, holds=True, details={'size': m})


def closed_sets(bp: BoundedPoset) -> ClLattice:
    """
    Build Cl(P) and verify its ortholattice axioms.

    Args:
        bp: bounded poset

    Returns:
        ClLattice: closed subsets with order and orthocomplementation
    """
    lattice = ClLattice(bp)
    report = lattice.verify()
    if not report.holds:
        logger.warning(f"Cl(P) violates ortholattice axiom {report.details['axiom']}: {report.witness}")
    lattice.axioms = report
    return lattice


def elements_with_bi_plus(bp: BoundedPoset) -> List[int]:
    """(x⁺)⁺ for every element x, as masks."""
    return [bi_plus_mask(bp, 1 << x) for x in range(bp.size)]

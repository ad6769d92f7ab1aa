"""
Posetkit - Completion and Convex Subsets

The Dedekind-MacNeille completion D(P), orthogonality of normal cuts,
convex hulls, the bounded poset Conv★(P) of non-empty convex subsets
ordered by ⊑, subset orthogonality and the hull-orthogonality theorem.
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from config.settings import Config
from core.complementation import plus_table
from core.cones import (
    downclose_mask, greatest_of_mask, inf_mask, lower_mask, sqle_mask,
    sup_mask, upclose_mask, upper_mask
)
from core.errors import PosetkitError, SizeCapExceeded
from core.poset import (
    BoundedPoset, Poset, PosetLike, Subset, bits, poset_of, subset_sort_key
)
from core.report import PropertyReport, bind

logger = logging.getLogger('posetkit.completion')


def _label(p: Poset, mask: int) -> str:
    return '{' + ','.join(p.names[i] for i in bits(mask)) + '}'


def _order_matrix(masks: List[int], leq) -> np.ndarray:
    m = len(masks)
    order = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            order[i, j] = leq(a, b)
    order.flags.writeable = False
    return order


def _least_upper(order: np.ndarray, i: int, j: int) -> Optional[int]:
    uppers = order[i, :] & order[j, :]
    for k in np.flatnonzero(uppers).tolist():
        if not (uppers & ~order[k, :]).any():
            return k
    return None


def _greatest_lower(order: np.ndarray, i: int, j: int) -> Optional[int]:
    lowers = order[:, i] & order[:, j]
    for k in np.flatnonzero(lowers).tolist():
        if not (lowers & ~order[:, k]).any():
            return k
    return None


# Dedekind-MacNeille completion

def cut_masks(p: PosetLike) -> List[int]:
    """Normal cuts LU(B) = B, canonically ordered: intersections of principal down sets and P."""
    base = poset_of(p)
    found = {base.full_mask}
    frontier = [base.full_mask]
    while frontier:
        fresh = []
        for current in frontier:
            for g in base.down_masks:
                meet = current & g
                if meet not in found:
                    found.add(meet)
                    fresh.append(meet)
        frontier = fresh
    return sorted(found, key=subset_sort_key)


def is_cut_mask(p: PosetLike, mask: int) -> bool:
    return lower_mask(p, upper_mask(p, mask)) == mask


class DMLattice:
    """
    The Dedekind-MacNeille completion of a finite poset.

    Elements are the normal cuts ordered by inclusion; meets are
    intersections and joins are LU of unions.
    """

    def __init__(self, p: PosetLike):
        self.base = poset_of(p)
        masks = cut_masks(self.base)
        self.masks = tuple(masks)
        self.position: Dict[int, int] = {m: i for i, m in enumerate(masks)}
        self.order = _order_matrix(masks, lambda a, b: a & ~b == 0)
        self.bottom_index = self.position[lower_mask(self.base, self.base.full_mask)]
        self.top_index = self.position[self.base.full_mask]
        self.embedding = tuple(self.position[self.base.down_masks[x]] for x in range(self.base.size))
        self.axioms: Optional[PropertyReport] = None
        logger.debug(f"D(P) has {len(masks)} cuts for a poset of size {self.base.size}")

    def __len__(self):
        return len(self.masks)

    @property
    def elements(self) -> List[Subset]:
        return [self.base.from_mask(m) for m in self.masks]

    def index_of(self, cut: Subset) -> int:
        mask = self.base.owns(cut).mask
        if mask not in self.position:
            raise PosetkitError(f"{cut!r} is not a normal cut")
        return self.position[mask]

    def meet(self, indices: Iterable[int]) -> int:
        out = self.base.full_mask
        for i in indices:
            out &= self.masks[i]
        return self.position[out]

    def join(self, indices: Iterable[int]) -> int:
        union = 0
        for i in indices:
            union |= self.masks[i]
        return self.position[lower_mask(self.base, upper_mask(self.base, union))]

    def labels(self) -> List[str]:
        return [_label(self.base, m) for m in self.masks]

    def as_poset(self) -> Poset:
        return Poset(self.labels(), self.order)

    def as_bounded(self) -> BoundedPoset:
        return BoundedPoset(self.as_poset(), self.bottom_index, self.top_index)

    def verify(self) -> PropertyReport:
        """Lattice laws: intersections and LU-joins are cuts and are the order's meet and join."""
        name = 'dm-lattice'
        m = len(self.masks)
        for i in range(m):
            for j in range(i, m):
                meet_mask = self.masks[i] & self.masks[j]
                join_mask = lower_mask(self.base, upper_mask(self.base, self.masks[i] | self.masks[j]))
                if meet_mask not in self.position or join_mask not in self.position:
                    return PropertyReport(property=name, holds=False,
                                          witness={'A': _label(self.base, self.masks[i]),
                                                   'B': _label(self.base, self.masks[j])},
                                          details={'law': 'closure'})
                if _least_upper(self.order, i, j) != self.position[join_mask] or \
                        _greatest_lower(self.order, i, j) != self.position[meet_mask]:
                    return PropertyReport(property=name, holds=False,
                                          witness={'A': _label(self.base, self.masks[i]),
                                                   'B': _label(self.base, self.masks[j])},
                                          details={'law': 'join-meet'})
        return PropertyReport(property=name, holds=True, details={'size': m})


def dm_completion(p: PosetLike) -> DMLattice:
    """
    Build D(P) = {L(A) | A ⊆ P}.

    Args:
        p: finite poset

    Returns:
        DMLattice: normal cuts with inclusion order, axioms already verified
    """
    lattice = DMLattice(p)
    report = lattice.verify()
    if not report.holds:
        logger.warning(f"D(P) violates lattice law {report.details['law']}: {report.witness}")
    lattice.axioms = report
    return lattice


def _principal(p: Poset, cut: int) -> Optional[int]:
    top = greatest_of_mask(p, cut)
    if top is not None and p.down_masks[top] == cut:
        return top
    return None


def embedding_check(p: PosetLike, cap: int = Config.SUBSET_ENUMERATION_CAP) -> PropertyReport:
    """
    x ↦ L(x) is an order embedding preserving existing suprema and infima.

    Suprema and infima are checked over all non-empty subsets up to cap
    elements, and over pairs above it.
    """
    base = poset_of(p)
    name = 'dm-embedding'
    for x in range(base.size):
        for y in range(base.size):
            if bool(base.leq[x, y]) != (base.down_masks[x] & ~base.down_masks[y] == 0):
                return PropertyReport(property=name, holds=False,
                                      witness=bind(base, x=x, y=y), details={'law': 'order'})

    if base.size <= cap:
        families: Iterable[int] = range(1, base.full_mask + 1)
        exhaustive = True
    else:
        families = [(1 << x) | (1 << y) for x in range(base.size) for y in range(x + 1, base.size)]
        exhaustive = False

    for family in families:
        join_cut = lower_mask(base, upper_mask(base, family))
        if _principal(base, join_cut) != sup_mask(base, family):
            return PropertyReport(property=name, holds=False, exhaustive=exhaustive,
                                  witness=bind(base, S=('set', family)),
                                  details={'law': 'sup', 'join': _label(base, join_cut)})
        meet_cut = lower_mask(base, family)
        if _principal(base, meet_cut) != inf_mask(base, family):
            return PropertyReport(property=name, holds=False, exhaustive=exhaustive,
                                  witness=bind(base, S=('set', family)),
                                  details={'law': 'inf', 'meet': _label(base, meet_cut)})
    return PropertyReport(property=name, holds=True, exhaustive=exhaustive)


def _dm_orthogonal_mask(bp: BoundedPoset, a: int, b: int) -> bool:
    base = bp.base
    joined = lower_mask(base, upper_mask(base, a | b))
    return joined == base.full_mask and a & b == base.down_masks[bp.bottom]


def _dm_condition_mask(bp: BoundedPoset, a: int, b: int) -> bool:
    if sup_mask(bp, a | b) != bp.top:
        return False
    for x in bits(a):
        for y in bits(b):
            if inf_mask(bp, (1 << x) | (1 << y)) != bp.bottom:
                return False
    return True


def dm_orthogonality(bp: BoundedPoset, a: Subset, b: Subset) -> bool:
    """
    A ⊥ B inside D(P): their join is the top cut and their meet the bottom cut.

    Raises:
        ForeignSubset: if a cut belongs to another poset
        PosetkitError: if an argument is not a normal cut
    """
    for cut in (a, b):
        if not is_cut_mask(bp, bp.base.owns(cut).mask):
            raise PosetkitError(f"{cut!r} is not a normal cut")
    return _dm_orthogonal_mask(bp, a.mask, b.mask)


def dm_theorem_condition(bp: BoundedPoset, a: Subset, b: Subset) -> bool:
    """The element-level characterisation: sup(A ∪ B) = 1 and x ∧ y = 0 across A × B."""
    return _dm_condition_mask(bp, bp.base.owns(a).mask, bp.base.owns(b).mask)


def dm_orthogonality_check(bp: BoundedPoset) -> PropertyReport:
    """Both characterisations of orthogonal cuts agree, and a ⊥ b iff L(a) ⊥ L(b)."""
    name = 'dm-orthogonality'
    masks = cut_masks(bp)
    for a in masks:
        for b in masks:
            inside = _dm_orthogonal_mask(bp, a, b)
            if inside != _dm_condition_mask(bp, a, b):
                return PropertyReport(property=name, holds=False,
                                      witness=bind(bp, A=('set', a), B=('set', b)),
                                      details={'in_lattice': inside})
    table = plus_table(bp)
    for x in range(bp.size):
        for y in range(bp.size):
            lifted = _dm_orthogonal_mask(bp, bp.base.down_masks[x], bp.base.down_masks[y])
            if lifted != bool(table[x] >> y & 1):
                return PropertyReport(property=name, holds=False, witness=bind(bp, a=x, b=y),
                                      details={'law': 'principal-cuts'})
    return PropertyReport(property=name, holds=True, details={'cut_pairs': len(masks) ** 2})


# Convex subsets

def hull_mask(p: PosetLike, mask: int) -> int:
    """Convex hull as A↓ ∩ A↑."""
    return downclose_mask(p, mask) & upclose_mask(p, mask)


def hull_by_betweenness_mask(p: PosetLike, mask: int) -> int:
    """Convex hull as {x | y <= x <= z for some y, z in A}."""
    base = poset_of(p)
    out = 0
    for x in range(base.size):
        if base.down_masks[x] & mask and base.up_masks[x] & mask:
            out |= 1 << x
    return out


def convex_hull(p: PosetLike, a: Subset) -> Subset:
    """Smallest convex subset including A."""
    base = poset_of(p)
    return base.from_mask(hull_mask(base, base.owns(a).mask))


def is_convex(p: PosetLike, a: Subset) -> bool:
    return convex_hull(p, a) == a


def is_convex_mask(p: PosetLike, mask: int) -> bool:
    return hull_mask(p, mask) == mask


def convex_masks(p: PosetLike, include_empty: bool = False) -> List[int]:
    base = poset_of(p)
    start = 0 if include_empty else 1
    found = [m for m in range(start, base.full_mask + 1) if is_convex_mask(base, m)]
    return sorted(found, key=subset_sort_key)


class ConvPoset:
    """
    Convex subsets of a poset ordered by ⊑.

    For bounded input with non-empty convex sets only, {0} and {1} are the
    bounds of the resulting poset.
    """

    def __init__(self, p: PosetLike, include_empty: bool = False):
        self.source = p
        self.base = poset_of(p)
        masks = convex_masks(self.base, include_empty)
        self.masks = tuple(masks)
        self.position: Dict[int, int] = {m: i for i, m in enumerate(masks)}
        self.order = _order_matrix(masks, lambda a, b: sqle_mask(self.base, a, b))
        self.bottom_index: Optional[int] = None
        self.top_index: Optional[int] = None
        if isinstance(p, BoundedPoset) and not include_empty:
            self.bottom_index = self.position[1 << p.bottom]
            self.top_index = self.position[1 << p.top]
        self.axioms: Optional[PropertyReport] = None
        logger.debug(f"Found {len(masks)} convex subsets of a poset of size {self.base.size}")

    def __len__(self):
        return len(self.masks)

    @property
    def elements(self) -> List[Subset]:
        return [self.base.from_mask(m) for m in self.masks]

    def index_of(self, subset: Subset) -> int:
        return self.position[self.base.owns(subset).mask]

    def sup(self, i: int, j: int) -> Optional[int]:
        return _least_upper(self.order, i, j)

    def inf(self, i: int, j: int) -> Optional[int]:
        return _greatest_lower(self.order, i, j)

    def labels(self) -> List[str]:
        return [_label(self.base, m) for m in self.masks]

    def as_poset(self) -> Poset:
        return Poset(self.labels(), self.order)

    def as_bounded(self) -> BoundedPoset:
        return BoundedPoset(self.as_poset(), self.bottom_index, self.top_index)

    def verify(self) -> PropertyReport:
        """⊑ is antisymmetric on convex sets and, when bounded, {0} ⊑ C ⊑ {1}."""
        name = 'conv-poset'
        m = len(self.masks)
        for i in range(m):
            for j in range(i + 1, m):
                if self.order[i, j] and self.order[j, i]:
                    return PropertyReport(property=name, holds=False,
                                          witness={'A': _label(self.base, self.masks[i]),
                                                   'B': _label(self.base, self.masks[j])},
                                          details={'axiom': 'antisymmetry'})
        if self.bottom_index is not None:
            for i in range(m):
                if not self.order[self.bottom_index, i] or not self.order[i, self.top_index]:
                    return PropertyReport(property=name, holds=False,
                                          witness={'C': _label(self.base, self.masks[i])},
                                          details={'axiom': 'bounds'})
        return PropertyReport(property=name, holds=True, details={'size': m})


def conv_star(bp: BoundedPoset, cap: int = Config.CONV_STAR_CAP) -> ConvPoset:
    """
    Build Conv★(P): non-empty convex subsets under ⊑ with bounds {0} and {1}.

    Raises:
        SizeCapExceeded: above cap elements
    """
    if bp.size > cap:
        raise SizeCapExceeded('conv_star', bp.size, cap)
    conv = ConvPoset(bp)
    report = conv.verify()
    if not report.holds:
        logger.warning(f"Conv★ violates {report.details['axiom']}: {report.witness}")
    conv.axioms = report
    return conv


def conv_all(p: PosetLike, cap: int = Config.CONV_STAR_CAP) -> ConvPoset:
    """All convex subsets, the empty set included, under ⊑."""
    base = poset_of(p)
    if base.size > cap:
        raise SizeCapExceeded('conv_all', base.size, cap)
    return ConvPoset(base, include_empty=True)


def quasiorder_antisymmetry_failure(p: PosetLike,
                                    cap: int = Config.SUBSET_ENUMERATION_CAP) -> Optional[Tuple[Subset, Subset]]:
    """
    Two distinct subsets A, B with A ⊑ B and B ⊑ A, if any.

    Every subset is ⊑-equivalent to its convex hull, so a non-convex
    subset and its hull form the first such pair.
    """
    base = poset_of(p)
    if base.size > cap:
        raise SizeCapExceeded('quasiorder_antisymmetry_failure', base.size, cap)
    for mask in sorted(range(1, base.full_mask + 1), key=subset_sort_key):
        hull = hull_mask(base, mask)
        if hull != mask and sqle_mask(base, mask, hull) and sqle_mask(base, hull, mask):
            return base.from_mask(mask), base.from_mask(hull)
    return None


def _orthogonal_masks(bp: BoundedPoset, a: int, b: int) -> bool:
    table = plus_table(bp)
    for x in bits(a):
        if b & ~table[x]:
            return False
    return True


def subsets_orthogonal(bp: BoundedPoset, a: Subset, b: Subset) -> bool:
    """
    A ⊥ B: x ⊥ y for all x in A and y in B.

    Vacuously true when either subset is empty; that case is logged.
    """
    a_mask, b_mask = bp.base.owns(a).mask, bp.base.owns(b).mask
    if not a_mask or not b_mask:
        logger.warning("Subset orthogonality with an empty subset holds vacuously")
    return _orthogonal_masks(bp, a_mask, b_mask)


def conv_orthogonal(conv: ConvPoset, i: int, j: int) -> bool:
    """Orthogonality inside Conv★: sup exists and is {1}, inf exists and is {0}."""
    return conv.sup(i, j) == conv.top_index and conv.inf(i, j) == conv.bottom_index


def hull_orthogonality_check(bp: BoundedPoset,
                             cap: int = Config.HULL_PAIR_CAP,
                             sample: Optional[int] = None,
                             seed: int = Config.DEFAULT_SEED,
                             conv_cap: int = Config.CONV_STAR_CAP) -> PropertyReport:
    """
    A ⊥ B iff hull(A) ⊥ hull(B) in Conv★(P), for non-empty A and B.

    Exhaustive over all subset pairs up to cap elements; above the cap a
    seeded sample of pairs is drawn when sample is given.

    Raises:
        SizeCapExceeded: above cap with no sample requested
    """
    name = 'hull-orthogonality'
    n = bp.size
    if n > cap and sample is None:
        raise SizeCapExceeded('hull_orthogonality_check', n, cap)
    conv = conv_star(bp, conv_cap)
    hull_index: Dict[int, int] = {}

    def index(mask: int) -> int:
        if mask not in hull_index:
            hull_index[mask] = conv.position[hull_mask(bp, mask)]
        return hull_index[mask]

    if n <= cap:
        nonempty = range(1, bp.base.full_mask + 1)
        pairs: Iterable[Tuple[int, int]] = ((a, b) for a in nonempty for b in nonempty)
        exhaustive, samples = True, None
    else:
        rng = np.random.default_rng(seed)
        drawn = rng.integers(1, bp.base.full_mask + 1, size=(sample, 2))
        pairs = [(int(a), int(b)) for a, b in drawn]
        exhaustive, samples = False, sample
        logger.info(f"Sampling {sample} subset pairs for hull orthogonality (size {n} > cap {cap})")

    for a, b in pairs:
        left = _orthogonal_masks(bp, a, b)
        right = conv_orthogonal(conv, index(a), index(b))
        if left != right:
            return PropertyReport(property=name, holds=False, exhaustive=exhaustive, samples=samples,
                                  witness=bind(bp, A=('set', a), B=('set', b)),
                                  details={'orthogonal': left, 'hulls_orthogonal': right})
    return PropertyReport(property=name, holds=True, exhaustive=exhaustive, samples=samples)

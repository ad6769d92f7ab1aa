"""
Posetkit - Finite Posets

This module represents finite (bounded) posets as dense boolean relations,
builds them from cover relations or combinators, validates the order axioms
and computes isomorphism-invariant canonical forms.
"""

import logging
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import Config
from core.errors import (
    CycleDetected, DuplicateName, ForeignSubset, NoBottom, NoTop,
    PosetkitError, Trivial, UnknownName
)

logger = logging.getLogger('posetkit.poset')

ElementRef = Union[int, str]


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def submasks(mask: int) -> Iterable[int]:
    """Yield every non-empty submask of mask (decreasing numeric order)."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def subset_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical subset order: by size, then by member indices."""
    return popcount(mask), tuple(bits(mask))


class Subset:
    """
    A set of elements of one specific poset, stored as a bit mask.

    Subsets are immutable and compare equal only when they have the same
    owner and the same members.
    """

    __slots__ = ('owner', 'mask')

    def __init__(self, owner: 'Poset', mask: int):
        if mask < 0 or mask > owner.full_mask:
            raise ValueError(f"Mask {mask:#x} out of range for poset of size {owner.size}")
        object.__setattr__(self, 'owner', owner)
        object.__setattr__(self, 'mask', mask)

    def __setattr__(self, name, value):
        raise AttributeError("Subset is immutable")

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self.owner is other.owner and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.owner), self.mask))

    def __iter__(self):
        return bits(self.mask)

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, element):
        idx = self.owner.index_of(element)
        return bool(self.mask >> idx & 1)

    def __bool__(self):
        return self.mask != 0

    def _same_owner(self, other: 'Subset'):
        if other.owner is not self.owner:
            raise ForeignSubset("Subsets belong to different posets")

    def __or__(self, other: 'Subset') -> 'Subset':
        self._same_owner(other)
        return Subset(self.owner, self.mask | other.mask)

    def __and__(self, other: 'Subset') -> 'Subset':
        self._same_owner(other)
        return Subset(self.owner, self.mask & other.mask)

    def __sub__(self, other: 'Subset') -> 'Subset':
        self._same_owner(other)
        return Subset(self.owner, self.mask & ~other.mask)

    def issubset(self, other: 'Subset') -> bool:
        self._same_owner(other)
        return self.mask & ~other.mask == 0

    def names(self) -> List[str]:
        """Member names in element order."""
        return [self.owner.names[i] for i in self]

    def __repr__(self):
        return '{' + ','.join(self.names()) + '}'


class Poset:
    """
    Immutable finite partial order on the indices range(size).

    Attributes:
        size: number of elements
        names: display label per element
        leq: read-only boolean size x size matrix, leq[x, y] iff x <= y
    """

    def __init__(self, names: Sequence[str], leq: np.ndarray):
        names = list(names)
        leq = np.array(leq, dtype=bool)
        n = len(names)
        if leq.shape != (n, n):
            raise PosetkitError(f"Relation shape {leq.shape} does not match {n} names")
        if len(set(names)) != n:
            duplicates = sorted({x for x in names if names.count(x) > 1})
            raise DuplicateName(f"Duplicate element names: {', '.join(duplicates)}")

        problem = order_axiom_violation(leq)
        if problem:
            raise PosetkitError(f"Relation is not a partial order: {problem}")

        leq.flags.writeable = False
        self.size = n
        self.names = tuple(names)
        self.leq = leq
        self.index = {name: i for i, name in enumerate(self.names)}
        self.full_mask = (1 << n) - 1

        # Row/column masks for bit-parallel cone operations
        self.up_masks = tuple(_row_mask(leq[i, :]) for i in range(n))
        self.down_masks = tuple(_row_mask(leq[:, i]) for i in range(n))

    # Element and subset access

    def index_of(self, element: ElementRef) -> int:
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < self.size:
                raise UnknownName(f"No element with index {element}")
            return int(element)
        try:
            return self.index[element]
        except KeyError:
            raise UnknownName(f"Unknown element '{element}'")

    def subset(self, members: Iterable[ElementRef] = ()) -> Subset:
        mask = 0
        for member in members:
            mask |= 1 << self.index_of(member)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def owns(self, subset: Subset) -> Subset:
        """Return subset after checking that it belongs to this poset."""
        if subset.owner is not self:
            raise ForeignSubset(f"Subset {subset!r} does not belong to this poset")
        return subset

    def le(self, x: ElementRef, y: ElementRef) -> bool:
        return bool(self.leq[self.index_of(x), self.index_of(y)])

    # Derived structure

    @cached_property
    def covers(self) -> np.ndarray:
        """Boolean matrix, covers[x, y] iff y covers x."""
        lt = self.leq.copy()
        lt[np.diag_indices_from(lt)] = False
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        out = lt & ~between
        out.flags.writeable = False
        return out

    def cover_pairs(self) -> List[Tuple[int, int]]:
        """Cover pairs (lower, upper) ordered by lower then upper index."""
        lo, hi = np.nonzero(self.covers)
        return sorted(zip(lo.tolist(), hi.tolist()))

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        """Length of the longest chain from a minimal element up to each element."""
        height = [0] * self.size
        for x in self.linear_extension:
            for y in range(self.size):
                if self.covers[x, y]:
                    height[y] = max(height[y], height[x] + 1)
        return tuple(height)

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        """Elements sorted so that x <= y implies x comes first."""
        return tuple(sorted(range(self.size), key=lambda i: (popcount(self.down_masks[i]), i)))

    def __repr__(self):
        covers = ', '.join(f'{self.names[a]}<{self.names[b]}' for a, b in self.cover_pairs())
        return f"Poset([{' '.join(self.names)}]; {covers})"


class BoundedPoset:
    """
    A poset with designated distinct least and greatest elements.

    Subsets of a bounded poset are owned by its base poset.
    """

    def __init__(self, base: Poset, bottom: int, top: int):
        if bottom == top:
            raise Trivial("Bottom and top coincide")
        if base.up_masks[bottom] != base.full_mask:
            raise NoBottom(f"'{base.names[bottom]}' is not below every element")
        if base.down_masks[top] != base.full_mask:
            raise NoTop(f"'{base.names[top]}' is not above every element")
        self.base = base
        self.bottom = bottom
        self.top = top

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def names(self) -> Tuple[str, ...]:
        return self.base.names

    def __repr__(self):
        return f"Bounded{self.base!r}"


PosetLike = Union[Poset, BoundedPoset]


def poset_of(p: PosetLike) -> Poset:
    """The underlying Poset of a Poset or BoundedPoset."""
    return p.base if isinstance(p, BoundedPoset) else p


def _row_mask(row: np.ndarray) -> int:
    mask = 0
    for i in np.flatnonzero(row).tolist():
        mask |= 1 << i
    return mask


def order_axiom_violation(leq: np.ndarray) -> Optional[str]:
    """
    Describe the first order axiom that leq violates.

    Args:
        leq: square boolean matrix

    Returns:
        str or None: description of the violation, None for a partial order
    """
    n = leq.shape[0]
    if not leq.diagonal().all():
        x = int(np.flatnonzero(~leq.diagonal())[0])
        return f"not reflexive at {x}"
    both = leq & leq.T
    both[np.diag_indices(n)] = False
    if both.any():
        x, y = (int(v) for v in np.argwhere(both)[0])
        return f"not antisymmetric at ({x}, {y})"
    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    if (composed & ~leq).any():
        x, y = (int(v) for v in np.argwhere(composed & ~leq)[0])
        return f"not transitive at ({x}, {y})"
    return None


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation by repeated squaring."""
    n = rel.shape[0]
    closure = rel.astype(bool) | np.eye(n, dtype=bool)
    while True:
        squared = (closure.astype(np.int64) @ closure.astype(np.int64)) > 0
        if (squared == closure).all():
            return closure
        closure = squared


def _find_cycle(n: int, edges: Dict[int, List[int]]) -> Optional[List[int]]:
    """Return one directed cycle as a closed list of vertices, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    state = [WHITE] * n
    stack_pos: Dict[int, int] = {}
    path: List[int] = []

    for start in range(n):
        if state[start] != WHITE:
            continue
        # Iterative DFS keeping the current path for cycle extraction
        work = [(start, iter(edges.get(start, ())))]
        state[start] = GREY
        stack_pos[start] = len(path)
        path.append(start)
        while work:
            node, successors = work[-1]
            advanced = False
            for nxt in successors:
                if state[nxt] == GREY:
                    return path[stack_pos[nxt]:] + [nxt]
                if state[nxt] == WHITE:
                    state[nxt] = GREY
                    stack_pos[nxt] = len(path)
                    path.append(nxt)
                    work.append((nxt, iter(edges.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                work.pop()
                state[node] = BLACK
                path.pop()
                del stack_pos[node]
    return None


def from_covers(names: Sequence[str], covers: Iterable[Tuple[str, str]]) -> Poset:
    """
    Build the poset generated by a cover list.

    Args:
        names: unique element names
        covers: (lower, upper) name pairs

    Returns:
        Poset: reflexive-transitive closure of the covers

    Raises:
        DuplicateName, UnknownName, CycleDetected
    """
    names = list(names)
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateName(f"Duplicate element name '{name}'")
        seen.add(name)
    index = {name: i for i, name in enumerate(names)}

    n = len(names)
    rel = np.zeros((n, n), dtype=bool)
    edges: Dict[int, List[int]] = {}
    for lo, hi in covers:
        for endpoint in (lo, hi):
            if endpoint not in index:
                raise UnknownName(f"Cover '{lo} < {hi}' names unknown element '{endpoint}'")
        i, j = index[lo], index[hi]
        rel[i, j] = True
        edges.setdefault(i, []).append(j)

    cycle = _find_cycle(n, edges)
    if cycle is not None:
        raise CycleDetected([names[i] for i in cycle])

    poset = Poset(names, transitive_closure(rel))
    logger.debug(f"Built poset of size {n} from {int(rel.sum())} cover pairs")
    return poset


def from_relation(names: Sequence[str], leq: np.ndarray) -> Poset:
    """Build a poset from a full order relation (combinator path)."""
    return Poset(names, leq)


def as_bounded(p: Poset) -> BoundedPoset:
    """
    Find the least and greatest element of p.

    Raises:
        NoBottom, NoTop, Trivial
    """
    if p.size == 0:
        raise NoBottom("Empty poset has no least element")
    bottoms = [x for x in range(p.size) if p.up_masks[x] == p.full_mask]
    tops = [x for x in range(p.size) if p.down_masks[x] == p.full_mask]
    if not bottoms:
        raise NoBottom("Poset has no least element")
    if not tops:
        raise NoTop("Poset has no greatest element")
    if bottoms[0] == tops[0]:
        raise Trivial("Least and greatest element coincide")
    return BoundedPoset(p, bottoms[0], tops[0])


def bound_extension(middle: Poset, bottom_name: str = '0', top_name: str = '1') -> BoundedPoset:
    """Add a new least and greatest element around middle."""
    k = middle.size
    leq = np.zeros((k + 2, k + 2), dtype=bool)
    leq[1:k + 1, 1:k + 1] = middle.leq
    leq[0, :] = True
    leq[:, k + 1] = True
    names = [bottom_name] + list(middle.names) + [top_name]
    return BoundedPoset(Poset(names, leq), 0, k + 1)


def horizontal_sum(p: BoundedPoset, q: BoundedPoset,
                   suffix: str = Config.HORIZONTAL_SUM_SUFFIX) -> BoundedPoset:
    """
    Glue p and q at a shared bottom and top.

    The result lists p's elements in order followed by q's middle elements.
    Middle elements of q whose names clash are suffixed until unique.
    """
    p_base, q_base = p.base, q.base
    q_middle = [x for x in range(q.size) if x not in (q.bottom, q.top)]

    taken = set(p_base.names)
    q_names = []
    for x in q_middle:
        name = q_base.names[x]
        while name in taken:
            name += suffix
        taken.add(name)
        q_names.append(name)

    n = p.size + len(q_middle)
    leq = np.zeros((n, n), dtype=bool)
    leq[:p.size, :p.size] = p_base.leq
    sub = q_base.leq[np.ix_(q_middle, q_middle)]
    leq[p.size:, p.size:] = sub
    leq[p.bottom, :] = True
    leq[:, p.top] = True

    result = BoundedPoset(Poset(list(p_base.names) + q_names, leq), p.bottom, p.top)
    logger.debug(f"Horizontal sum of sizes {p.size} and {q.size} has size {n}")
    return result


# Canonical forms

def _refine(p: Poset, colors: List[int]) -> List[int]:
    """Iterated colour refinement by multisets of colours strictly below and above."""
    below = [[y for y in bits(p.down_masks[x]) if y != x] for x in range(p.size)]
    above = [[y for y in bits(p.up_masks[x]) if y != x] for x in range(p.size)]
    while True:
        signatures = [
            (colors[x],
             tuple(sorted(colors[y] for y in below[x])),
             tuple(sorted(colors[y] for y in above[x])))
            for x in range(p.size)
        ]
        ranking = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _encode(p: Poset, order: Sequence[int]) -> bytes:
    permuted = p.leq[np.ix_(order, order)]
    return p.size.to_bytes(2, 'big') + np.packbits(permuted.ravel()).tobytes()


def _twin_key(p: Poset, x: int) -> Tuple[int, int]:
    own = 1 << x
    return p.up_masks[x] & ~own, p.down_masks[x] & ~own


def _search_canonical(p: Poset, colors: List[int]) -> bytes:
    cells: Dict[int, List[int]] = {}
    for x, c in enumerate(colors):
        cells.setdefault(c, []).append(x)
    if len(cells) == p.size:
        order = sorted(range(p.size), key=lambda x: colors[x])
        return _encode(p, order)

    target = min(c for c, members in cells.items() if len(members) > 1)
    best = None
    tried_twins = set()
    for v in cells[target]:
        # Twins are swapped by an automorphism and give identical leaves
        twin = _twin_key(p, v)
        if twin in tried_twins:
            continue
        tried_twins.add(twin)
        split = [2 * c + (0 if x == v else 1) if c == target else 2 * c
                 for x, c in enumerate(colors)]
        leaf = _search_canonical(p, _refine(p, split))
        if best is None or leaf < best:
            best = leaf
    return best


def canonical_form(p: PosetLike) -> bytes:
    """
    Isomorphism-invariant byte string of a poset.

    Two posets have equal canonical forms if and only if they are isomorphic.
    Element names do not contribute.
    """
    base = poset_of(p)
    if base.size == 0:
        return _encode(base, [])
    initial = [0] * base.size
    return _search_canonical(base, _refine(base, initial))


def is_isomorphic(p: PosetLike, q: PosetLike) -> bool:
    return canonical_form(p) == canonical_form(q)

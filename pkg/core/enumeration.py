"""
Posetkit - Poset Enumeration

Generates one representative per isomorphism class of finite posets and
of bounded posets.

Every poset on k elements is obtained from a poset on k - 1 elements by
adding a new maximal element whose strict down set is an order ideal, so
classes are grown level by level and deduplicated by canonical form. A
bounded poset of size n is the bound extension of a poset on n - 2
elements.
"""

import logging
import string
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from config.settings import Config
from core.cones import downclose_mask
from core.errors import PosetkitError, SizeCapExceeded
from core.poset import BoundedPoset, Poset, bits, bound_extension, canonical_form

logger = logging.getLogger('posetkit.enumeration')


def middle_names(k: int) -> List[str]:
    """a, b, ..., z, then a2, b2, ... for larger posets."""
    letters = string.ascii_lowercase
    return [letters[i % 26] + (str(i // 26 + 1) if i >= 26 else '') for i in range(k)]


def poset_from_canonical(form: bytes, names: Sequence[str] = None) -> Poset:
    """
    Decode a canonical form into a poset listed in a linear extension order.

    Args:
        form: bytes produced by canonical_form
        names: element names, defaults to a, b, c, ...

    Returns:
        Poset: representative of the isomorphism class
    """
    k = int.from_bytes(form[:2], 'big')
    flat = np.unpackbits(np.frombuffer(form[2:], dtype=np.uint8))[:k * k]
    leq = flat.reshape((k, k)).astype(bool)
    raw = Poset(middle_names(k), leq)
    order = list(raw.linear_extension)
    leq = leq[np.ix_(order, order)]
    return Poset(list(names) if names is not None else middle_names(k), leq)


def order_ideals(p: Poset) -> List[int]:
    """All down-closed subsets of p as masks, the empty ideal included."""
    return [mask for mask in range(p.full_mask + 1) if downclose_mask(p, mask) == mask]


def _extend(p: Poset, ideal: int) -> np.ndarray:
    k = p.size
    leq = np.zeros((k + 1, k + 1), dtype=bool)
    leq[:k, :k] = p.leq
    for x in bits(ideal):
        leq[x, k] = True
    leq[k, k] = True
    return leq


@lru_cache(maxsize=None)
def poset_classes(k: int) -> Tuple[bytes, ...]:
    """
    Canonical forms of all posets on k elements, sorted.

    Args:
        k: number of elements

    Returns:
        tuple: one canonical form per isomorphism class
    """
    if k < 0:
        raise PosetkitError(f"Poset size must be non-negative, got {k}")
    if k == 0:
        return (canonical_form(Poset([], np.zeros((0, 0), dtype=bool))),)

    found = set()
    names = middle_names(k)
    for form in poset_classes(k - 1):
        smaller = poset_from_canonical(form)
        for ideal in order_ideals(smaller):
            found.add(canonical_form(Poset(names, _extend(smaller, ideal))))
    classes = tuple(sorted(found))
    logger.debug(f"{len(classes)} isomorphism classes of posets on {k} elements")
    return classes


def enumerate_posets(k: int) -> Iterator[Poset]:
    """One poset per isomorphism class on k elements, in canonical order."""
    for form in poset_classes(k):
        yield poset_from_canonical(form)


def _check_size(n: int, cap: int):
    if n < Config.MIN_ENUMERATION_SIZE:
        raise PosetkitError(f"Bounded posets have at least {Config.MIN_ENUMERATION_SIZE} elements, got {n}")
    if n > cap:
        raise SizeCapExceeded('enumerate_bounded', n, cap)


def enumerate_bounded(n: int, cap: int = Config.MAX_ENUMERATION_SIZE) -> Iterator[BoundedPoset]:
    """
    One bounded poset per isomorphism class of size n.

    Elements are named 0, a, b, ..., 1 with 0 first and 1 last.

    Raises:
        PosetkitError: n < 2
        SizeCapExceeded: n above cap
    """
    _check_size(n, cap)
    for middle in enumerate_posets(n - 2):
        yield bound_extension(middle, '0', '1')


def count_bounded(n: int, cap: int = Config.MAX_ENUMERATION_SIZE) -> int:
    """Number of isomorphism classes of bounded posets of size n."""
    _check_size(n, cap)
    return len(poset_classes(n - 2))

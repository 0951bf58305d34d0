"""Enumeration of constellations realizing a three-point branch datum.

One slot is frozen to the canonical permutation of its cycle type, a second
slot runs over its whole conjugacy class (as a numpy array, filtered in
bulk), and the third is forced by the product relation. Hits are grouped
into strong classes through a canonical relabeling, which is a complete
invariant for simultaneous conjugation of transitive tuples.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .partitions import BranchDatum, IncompatibleDatumError, Partition, is_compatible
from .perm import (Permutation, canonical_of_type, class_size, images_transitive,
                   product)

# Classes larger than this are not materialized.
MAX_CLASS_ROWS = 4_000_000
# Largest degree for which cycle-type codes fit in int64.
_MAX_VECTOR_DEGREE = 15


class InconsistentEnumerationError(RuntimeError):
    """An enumerated tuple broke a constellation invariant."""


class EnumerationTooLarge(RuntimeError):
    """The conjugacy class to iterate exceeds :data:`MAX_CLASS_ROWS`."""


@dataclass(frozen=True)
class Constellation:
    """A tuple of permutations with product identity generating a transitive group."""

    perms: tuple[Permutation, ...]

    @property
    def degree(self) -> int:
        return self.perms[0].degree

    def __iter__(self):
        return iter(self.perms)

    def __getitem__(self, i: int) -> Permutation:
        return self.perms[i]

    def cycle_types(self) -> tuple[Partition, ...]:
        return tuple(p.cycle_type() for p in self.perms)

    def euler_characteristic(self) -> int:
        return sum(p.num_cycles() for p in self.perms) - self.degree * (len(self.perms) - 2)

    def validate(self, datum: Optional[BranchDatum] = None) -> None:
        """Raise :class:`InconsistentEnumerationError` unless every invariant holds."""
        if not product(self.perms).is_identity():
            raise InconsistentEnumerationError(f"product is not the identity: {self}")
        if not images_transitive([p.images for p in self.perms], self.degree):
            raise InconsistentEnumerationError(f"not transitive: {self}")
        if datum is not None:
            if self.cycle_types() != datum.partitions:
                raise InconsistentEnumerationError(
                    f"cycle types {self.cycle_types()} do not match {datum}")
            if genus_of(self) != datum.cover_genus:
                raise InconsistentEnumerationError(f"genus mismatch for {self}")

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.perms)


def genus_of(c: Constellation) -> int:
    """Genus of the covering surface, from ``chi = c(g1) + c(g2) + c(g3) - d``."""
    chi = c.euler_characteristic()
    if chi % 2 or chi > 2:
        raise InconsistentEnumerationError(f"impossible Euler characteristic {chi}")
    return 1 - chi // 2


def _start_points(perms: Sequence[Sequence[int]]) -> list[int]:
    # Points lying on cycles of one fixed length in one slot, choosing the
    # rarest (slot, length). The set is carried along by any conjugation.
    d = len(perms[0])
    best = None
    for j, g in enumerate(perms):
        length = [0] * d
        for x in range(d):
            if length[x]:
                continue
            cyc = [x]
            y = g[x]
            while y != x:
                cyc.append(y)
                y = g[y]
            for y in cyc:
                length[y] = len(cyc)
        counts: dict[int, int] = {}
        for m in length:
            counts[m] = counts.get(m, 0) + 1
        for m, c in counts.items():
            if best is None or (c, j, m) < best[0]:
                best = ((c, j, m), length)
    (_, _, m), length = best
    return [x for x in range(d) if length[x] == m]


def canonical_form(perms: Sequence[Sequence[int]]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Canonical relabeling of a transitive tuple of 0-based image sequences.

    Each admissible start point induces a relabeling by breadth-first
    discovery along the generators; the lexicographically least relabeled
    tuple is returned with the number of start points achieving it, which
    is the order of the tuple's centralizer (it acts freely on the points).
    """
    d = len(perms[0])
    best = None
    count = 0
    for start in _start_points(perms):
        label = [-1] * d
        label[start] = 0
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for g in perms:
                y = g[x]
                if label[y] < 0:
                    label[y] = len(order)
                    order.append(y)
        if len(order) < d:
            raise ValueError("canonical_form needs a transitive tuple")
        cand = tuple(tuple([label[g[x]] for x in order]) for g in perms)
        if best is None or cand < best:
            best, count = cand, 1
        elif cand == best:
            count += 1
    return best, count


def canonical_constellation(c: Constellation) -> tuple[Constellation, int]:
    key, aut = canonical_form([p.images for p in c.perms])
    return Constellation(tuple(Permutation(g, check=False) for g in key)), aut


def _class_tuples(t: Partition) -> Iterator[tuple[int, ...]]:
    d = t.degree
    images = [0] * d
    used = [False] * d
    counts = t.multiplicities()

    def rec(placed: int):
        if placed == d:
            yield tuple(images)
            return
        s = used.index(False)
        free = [x for x in range(s + 1, d) if not used[x]]
        used[s] = True
        for length in sorted(counts, reverse=True):
            if counts[length] == 0:
                continue
            counts[length] -= 1
            for rest in itertools.permutations(free, length - 1):
                cyc = (s,) + rest
                for i, x in enumerate(cyc):
                    images[x] = cyc[(i + 1) % length]
                    used[x] = True
                yield from rec(placed + length)
                for x in rest:
                    used[x] = False
            counts[length] += 1
        used[s] = False

    yield from rec(0)


def iterate_class(t: Partition, d: Optional[int] = None) -> Iterator[Permutation]:
    """Yield every permutation of cycle type ``t`` exactly once."""
    t = Partition(t)
    if d is not None and t.degree != d:
        raise ValueError(f"{t} does not partition {d}")
    for images in _class_tuples(t):
        yield Permutation(images, check=False)


@lru_cache(maxsize=32)
def class_array(t: Partition) -> np.ndarray:
    """All permutations of type ``t`` as rows of 0-based images."""
    size = class_size(t)
    if size > MAX_CLASS_ROWS:
        raise EnumerationTooLarge(f"class {t} has {size} elements")
    arr = np.fromiter(itertools.chain.from_iterable(_class_tuples(t)),
                      dtype=np.int8, count=size * t.degree).reshape(size, t.degree)
    arr.setflags(write=False)
    return arr


def _type_code(t: Partition) -> int:
    base = t.degree + 1
    return sum(m * base ** (m - 1) for m in t)


def _row_type_codes(rows: np.ndarray) -> np.ndarray:
    """Encode each row's cycle type as ``sum over points of (d+1)^(len-1)``.

    A point in an ``m``-cycle contributes ``(d+1)^(m-1)``, so the code is
    ``sum_m m*c_m*(d+1)^(m-1)``; digits are below ``d+1``, hence injective.
    """
    n, d = rows.shape
    ident = np.arange(d, dtype=rows.dtype)
    lengths = np.zeros((n, d), dtype=np.int64)
    cur = rows
    for s in range(1, d + 1):
        back = (cur == ident) & (lengths == 0)
        lengths[back] = s
        if s < d:
            cur = np.take_along_axis(rows, cur.astype(np.intp), axis=1)
    weights = (d + 1) ** (np.arange(d + 1, dtype=np.int64) - 1).clip(min=0)
    return weights[lengths].sum(axis=1)


def _filter_chunk(rows: np.ndarray, fixed: np.ndarray, fixed_first: bool,
                  target: int) -> np.ndarray:
    # product of the two known slots in cyclic order; the third slot is its inverse
    if fixed_first:
        prod = np.take(rows, fixed, axis=1)
    else:
        prod = fixed[rows.astype(np.intp)]
    return np.nonzero(_row_type_codes(prod) == target)[0]


@dataclass
class StrongClass:
    representative: Constellation
    aut_order: int

    def tuple_count(self) -> int:
        return math.factorial(self.representative.degree) // self.aut_order


@dataclass
class StrongClassSet:
    """Strong equivalence classes of one ordered datum.

    ``raw_tuple_count`` counts every product-one triple with the datum's
    cycle types, transitive or not; ``transitive_tuple_count`` only the
    constellations.
    """

    datum: BranchDatum
    classes: list[StrongClass]
    raw_tuple_count: int
    transitive_tuple_count: int
    fixed_slot: int = 0
    iterated_slot: int = 1
    iterations: int = 0
    hits: list[tuple[tuple[int, ...], ...]] = field(default_factory=list, repr=False)

    @property
    def count(self) -> int:
        return len(self.classes)

    def check_tuple_identity(self) -> None:
        total = sum(c.tuple_count() for c in self.classes)
        if total != self.transitive_tuple_count:
            raise InconsistentEnumerationError(
                f"class sizes sum to {total}, expected {self.transitive_tuple_count}")


def choose_slots(partitions: Sequence[Partition]) -> tuple[int, int, int]:
    """(fixed, iterated, derived): freeze the largest class, iterate the smallest."""
    sizes = [class_size(p) for p in partitions]
    fixed = max(range(3), key=lambda i: (sizes[i], -i))
    others = [i for i in range(3) if i != fixed]
    it = min(others, key=lambda i: (sizes[i], i))
    derived = 3 - fixed - it
    return fixed, it, derived


def _product_one_hits(parts: Sequence[Partition], threads: int = 1):
    """Rows of the iterated class completing the frozen slot to a product-one
    triple of the requested types."""
    d = parts[0].degree
    fixed, it, derived = choose_slots(parts)
    fixed_perm = canonical_of_type(parts[fixed])
    fixed_first = (derived + 1) % 3 == fixed
    if d > _MAX_VECTOR_DEGREE:
        rows = [tuple(r) for r in _class_tuples(parts[it])]
        hit_idx = [i for i, r in enumerate(rows)
                   if _py_product_type(fixed_perm.images, r, fixed_first) == parts[derived]]
        return fixed, it, derived, fixed_perm, rows, hit_idx
    rows = class_array(parts[it])
    fixed_arr = np.array(fixed_perm.images, dtype=np.int8)
    target = _type_code(parts[derived])
    threads = max(1, int(threads))
    if threads > 1 and len(rows) > 1:
        chunks = np.array_split(np.arange(len(rows)), threads)
        with ThreadPoolExecutor(threads) as pool:
            found = list(pool.map(
                lambda ix: ix[_filter_chunk(rows[ix], fixed_arr, fixed_first, target)],
                chunks))
        hit_idx = np.concatenate(found)
    else:
        hit_idx = _filter_chunk(rows, fixed_arr, fixed_first, target)
    return fixed, it, derived, fixed_perm, rows, hit_idx


def product_one_count(types: Sequence[Partition], threads: int = 1) -> int:
    """Number of triples with the given cycle types and product identity,
    transitive or not. No compatibility requirement."""
    parts = tuple(Partition(t) for t in types)
    if len(parts) != 3 or len({p.degree for p in parts}) != 1:
        raise ValueError("need three partitions of one integer")
    fixed, _, _, _, _, hit_idx = _product_one_hits(parts, threads)
    return len(hit_idx) * class_size(parts[fixed])


def enumerate_strong(datum: BranchDatum, threads: int = 1, verify: bool = False,
                     keep_hits: bool = False) -> StrongClassSet:
    """Strong classes of constellations realizing a compatible three-point datum.

    With ``verify`` every hit is checked against all constellation
    invariants; otherwise a 1-in-64 sample and the class representatives are.
    """
    if datum.n != 3:
        raise ValueError(f"enumeration needs 3 branching points, got {datum.n}")
    if not is_compatible(datum):
        raise IncompatibleDatumError(f"{datum} is not compatible in genus {datum.cover_genus}")
    d = datum.degree
    parts = datum.partitions
    fixed, it, derived, fixed_perm, rows, hit_idx = _product_one_hits(parts, threads)

    classes: dict = {}
    raw_hits = 0
    transitive_hits = 0
    hits = []
    for i in hit_idx:
        raw_hits += 1
        x = [int(v) for v in rows[i]]
        triple: list = [None, None, None]
        triple[fixed] = fixed_perm.images
        triple[it] = tuple(x)
        known = (triple[(derived + 1) % 3], triple[(derived + 2) % 3])
        prod = [known[1][y] for y in known[0]]
        inv = [0] * d
        for a, b in enumerate(prod):
            inv[b] = a
        triple[derived] = tuple(inv)
        if not images_transitive(triple, d):
            continue
        transitive_hits += 1
        if keep_hits:
            hits.append(tuple(triple))
        if verify or transitive_hits % 64 == 1:
            Constellation(tuple(Permutation(g, check=False) for g in triple)).validate(datum)
        key, aut = canonical_form(triple)
        if key not in classes:
            classes[key] = aut
    fixed_size = class_size(parts[fixed])
    result = StrongClassSet(
        datum=datum,
        classes=[StrongClass(Constellation(tuple(Permutation(g, check=False) for g in key)), aut)
                 for key, aut in sorted(classes.items())],
        raw_tuple_count=raw_hits * fixed_size,
        transitive_tuple_count=transitive_hits * fixed_size,
        fixed_slot=fixed, iterated_slot=it, iterations=len(rows), hits=hits)
    for c in result.classes:
        c.representative.validate(datum)
    result.check_tuple_identity()
    return result


def _py_product_type(fixed: Sequence[int], row: Sequence[int], fixed_first: bool) -> Partition:
    a, b = (fixed, row) if fixed_first else (row, fixed)
    return Permutation([int(b[y]) for y in a], check=False).cycle_type()


def class_key(c: Constellation) -> tuple[tuple[int, ...], ...]:
    """Hashable strong-class key of any transitive tuple."""
    return canonical_form([p.images for p in c.perms])[0]

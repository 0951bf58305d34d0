"""Weak equivalence of constellations.

Strong classes are already orbits under simultaneous conjugation. Weak
classes further identify tuples related by

* ``BRAID1``: ``(g1, g2, g3) -> (g1 g2 g1^-1, g1, g3)``, swapping the roles of
  the first two branching points;
* ``BRAID2``: ``(g1, g2, g3) -> (g1, g2 g3 g2^-1, g2)``, swapping the last two
  (white vertices and regions of the dessin trade places, i.e. duality);
* ``REVERSE``: ``(g1, g2, g3) -> (g3^-1, g2^-1, g1^-1)``, an orientation
  reversing homeomorphism of the sphere.

All products follow the left-to-right convention of :mod:`hurwitz.perm`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .enumerate import (Constellation, StrongClassSet, canonical_constellation,
                        canonical_form, enumerate_strong)
from .partitions import BranchDatum
from .perm import Permutation, compose


class Move(str, enum.Enum):
    BRAID1 = "braid1"
    BRAID2 = "braid2"
    REVERSE = "reverse"


# Orientation reversal fixing every branching point, as a word in the generators.
MIRROR: tuple[Move, ...] = (Move.REVERSE, Move.BRAID1, Move.BRAID2, Move.BRAID1)


def _conj(a: Permutation, b: Permutation) -> Permutation:
    # b a b^-1 in left-to-right order
    return compose(compose(b, a), b.inverse())


def apply_move(move: Move, c: Constellation) -> Constellation:
    g1, g2, g3 = c.perms
    if move is Move.BRAID1:
        return Constellation((_conj(g2, g1), g1, g3))
    if move is Move.BRAID2:
        return Constellation((g1, _conj(g3, g2), g2))
    if move is Move.REVERSE:
        return Constellation((g3.inverse(), g2.inverse(), g1.inverse()))
    raise ValueError(f"unknown move {move!r}")


def apply_word(word: Iterable[Move], c: Constellation) -> Constellation:
    for m in word:
        c = apply_move(Move(m), c)
    return c


def inverse_braid(move: Move, c: Constellation) -> Constellation:
    """Undo ``BRAID1`` or ``BRAID2``."""
    g1, g2, g3 = c.perms
    if move is Move.BRAID1:
        # (a, b, c) = (g1 g2 g1^-1, g1, g3)  =>  g1 = b, g2 = b^-1 a b
        return Constellation((g2, _conj(g1, g2.inverse()), g3))
    if move is Move.BRAID2:
        return Constellation((g1, g3, _conj(g2, g3.inverse())))
    raise ValueError(f"{move} is not a braid move")


def duality_partner(c: Constellation) -> Constellation:
    """Canonical form of the dual dessin (white vertices exchanged with regions)."""
    return canonical_constellation(apply_move(Move.BRAID2, c))[0]


def mirror(c: Constellation) -> Constellation:
    return apply_word(MIRROR, c)


Key = tuple[tuple[int, ...], ...]


def _key(c: Constellation) -> Key:
    return canonical_form([p.images for p in c.perms])[0]


def _from_key(key: Key) -> Constellation:
    return Constellation(tuple(Permutation(g, check=False) for g in key))


def _orbits(start: Sequence[Key], moves: Sequence[tuple[Move, ...]]) -> dict[Key, Key]:
    """Map every state reachable from ``start`` to the least start key of its orbit.

    States are canonical keys; each move word acts as a bijection on the
    finite state set, so forward closure already yields the orbits.
    """
    root: dict[Key, Key] = {}
    for s in sorted(start):
        if s in root:
            continue
        root[s] = s
        queue = deque([s])
        while queue:
            cur = queue.popleft()
            c = _from_key(cur)
            for word in moves:
                nxt = _key(apply_word(word, c))
                if nxt not in root:
                    root[nxt] = s
                    queue.append(nxt)
    return root


@dataclass
class WeakClassSet:
    """Weak classes of a datum.

    ``provenance[i]`` is the index of the weak class containing strong
    class ``i`` of :attr:`strong`. ``mirror_count`` is the number of
    classes once orientation reversal (keeping every branching point in
    place) is allowed but branching points with equal partitions are not
    exchanged.
    """

    datum: BranchDatum
    strong: StrongClassSet
    representatives: list[Constellation]
    provenance: list[int]
    mirror_count: int
    states_per_ordering: dict[tuple[str, ...], int] = field(default_factory=dict)

    @property
    def nu(self) -> int:
        return len(self.representatives)

    @property
    def strong_count(self) -> int:
        return self.strong.count

    @property
    def mirror_merges(self) -> int:
        return self.strong_count - self.mirror_count

    @property
    def exchange_merges(self) -> int:
        return self.mirror_count - self.nu


def weak_count(datum: BranchDatum, threads: int = 1, verify: bool = False,
               strong: Optional[StrongClassSet] = None) -> WeakClassSet:
    """Weak Hurwitz number of a three-point datum.

    Strong classes are enumerated for the datum's own ordering; the other
    orderings of its partitions are reached through braid moves, which act
    bijectively between them, so the closure sees every strong class of
    every ordering.
    """
    if strong is None:
        strong = enumerate_strong(datum, threads=threads, verify=verify)
    keys = [_key(c.representative) for c in strong.classes]
    full = _orbits(keys, [(Move.BRAID1,), (Move.BRAID2,), (Move.REVERSE,)])
    fixed = _orbits(keys, [MIRROR])
    if any(k not in set(keys) for k in fixed):
        raise AssertionError("mirror move left the datum's ordering")

    roots = sorted({full[k] for k in keys})
    index = {r: i for i, r in enumerate(roots)}
    per_ordering: dict[tuple[str, ...], int] = {}
    for state in full:
        types = tuple(str(Permutation(g, check=False).cycle_type()) for g in state)
        per_ordering[types] = per_ordering.get(types, 0) + 1
    return WeakClassSet(
        datum=datum,
        strong=strong,
        representatives=[_from_key(r) for r in roots],
        provenance=[index[full[k]] for k in keys],
        mirror_count=len({fixed[k] for k in keys}),
        states_per_ordering=per_ordering,
    )


def mirror_classes(strong: StrongClassSet) -> list[list[int]]:
    """Group strong-class indices into orbits of the orientation reversal."""
    keys = [_key(c.representative) for c in strong.classes]
    root = _orbits(keys, [MIRROR])
    groups: dict[Key, list[int]] = {}
    for i, k in enumerate(keys):
        groups.setdefault(root[k], []).append(i)
    return [groups[r] for r in sorted(groups)]


def duality_pairs(strong: StrongClassSet) -> tuple[int, list[tuple[int, int]]]:
    """Action of duality on the mirror classes of a datum whose last two partitions agree.

    Returns the number of self-dual mirror classes and the list of
    exchanged pairs (as indices into :func:`mirror_classes`).
    """
    d = strong.datum
    if d.partitions[1] != d.partitions[2]:
        raise ValueError("duality maps the datum to itself only when slots 2 and 3 agree")
    groups = mirror_classes(strong)
    where = {}
    for gi, members in enumerate(groups):
        for i in members:
            where[_key(strong.classes[i].representative)] = gi
    self_dual = 0
    pairs = set()
    for gi, members in enumerate(groups):
        partner = where[_key(duality_partner(strong.classes[members[0]].representative))]
        if partner == gi:
            self_dual += 1
        else:
            pairs.add((min(gi, partner), max(gi, partner)))
    return self_dual, sorted(pairs)

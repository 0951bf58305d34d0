"""Permutations of ``{1, ..., d}``.

Composition is left to right: ``(a * b)(x) = b(a(x))``, i.e. apply ``a``
first. A constellation ``(g1, g2, g3)`` therefore satisfies
``g1 * g2 * g3 == identity`` when applying ``g1``, then ``g2``, then ``g3``
returns every point to itself. Points are 1-based in text form and
0-based internally.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Optional, Sequence

from .partitions import Partition


class Permutation:
    """An immutable permutation stored as a tuple of 0-based images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], d: int) -> "Permutation":
        """Build from 1-based cycles; points not mentioned are fixed."""
        images = list(range(d))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 1 <= x <= d or x in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {d}")
                seen.add(x)
                images[x - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls(images, check=False)

    @classmethod
    def parse(cls, text: str, d: int) -> "Permutation":
        """Parse cycle notation such as ``(1 2)(3 4 5)``; ``()`` is the identity."""
        text = text.strip()
        if re.fullmatch(r"(\(\s*(\d+(\s*[ ,]\s*\d+)*)?\s*\))+", text) is None:
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [[int(x) for x in re.split(r"[\s,]+", body.strip())]
                  for body in re.findall(r"\(([^)]*)\)", text) if body.strip()]
        return cls.from_cycles(cycles, d)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, y in enumerate(self.images):
            inv[y] = i
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self.images))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """0-based cycles, each starting at its smallest point, ordered by that point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def num_cycles(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def __str__(self) -> str:
        cycles = self.cycles(include_fixed=False)
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, d={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a`` then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b.images
    return Permutation([bi[y] for y in a.images], check=False)


def product(perms: Sequence[Permutation]) -> Permutation:
    out = perms[0]
    for p in perms[1:]:
        out = compose(out, p)
    return out


def conjugate(a: Permutation, h: Permutation) -> Permutation:
    """``h^-1 * a * h``: relabels each point ``x`` of ``a`` as ``h(x)``."""
    return compose(compose(h.inverse(), a), h)


def cycle_type(a: Permutation) -> Partition:
    return Partition(len(c) for c in a.cycles())


def canonical_of_type(t: Partition) -> Permutation:
    """Cycles on consecutive blocks, longest first: ``[3,2] -> (1 2 3)(4 5)``."""
    t = t if isinstance(t, Partition) else Partition(t)
    images = []
    start = 0
    for m in t:
        images.extend(start + (i + 1) % m for i in range(m))
        start += m
    return Permutation(images, check=False)


def centralizer_order(t: Partition) -> int:
    """``prod_m m^c_m * c_m!`` where ``c_m`` counts the parts equal to ``m``."""
    out = 1
    for m, c in Partition(t).multiplicities().items():
        out *= m ** c * math.factorial(c)
    return out


def class_size(t: Partition) -> int:
    """Number of permutations with cycle type ``t``."""
    t = Partition(t)
    return math.factorial(t.degree) // centralizer_order(t)


def centralizer_generators(a: Permutation) -> list[Permutation]:
    """Generators of the centralizer of a canonical-form permutation.

    One rotation per non-trivial cycle, plus a swap of each pair of
    consecutive equal-length cycles (matching their points in order).
    """
    t = cycle_type(a)
    if a != canonical_of_type(t):
        raise ValueError(f"{a} is not the canonical representative of {t}")
    d = a.degree
    blocks = []
    start = 0
    for m in t:
        blocks.append(range(start, start + m))
        start += m
    gens = []
    for block in blocks:
        if len(block) > 1:
            images = list(range(d))
            for x in block:
                images[x] = a.images[x]
            gens.append(Permutation(images, check=False))
    for b1, b2 in zip(blocks, blocks[1:]):
        if len(b1) == len(b2) and len(b1) > 0:
            images = list(range(d))
            for x, y in zip(b1, b2):
                images[x], images[y] = y, x
            gens.append(Permutation(images, check=False))
    return gens


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)
            self.components -= 1


def is_transitive(gens: Sequence[Permutation], degree: Optional[int] = None) -> bool:
    """Whether ``gens`` generate a group with a single orbit on the points."""
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators have different degrees")
    ds = _DisjointSet(degree)
    for g in gens:
        for x, y in enumerate(g.images):
            ds.union(x, y)
            if ds.components == 1:
                return True
    return ds.components == 1


def images_transitive(image_lists: Sequence[Sequence[int]], degree: int) -> bool:
    """:func:`is_transitive` on raw 0-based image sequences."""
    ds = _DisjointSet(degree)
    for images in image_lists:
        for x, y in enumerate(images):
            ds.union(x, y)
    return ds.components == 1

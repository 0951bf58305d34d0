"""Symmetric group characters and the Frobenius count of product-one tuples.

This is the independent oracle for the enumerator: it never looks at a
permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import Partition, partitions_of
from .perm import centralizer_order


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # Murnaghan-Nakayama on beta-sets: removing a border strip of length r
    # moves one bead from b to b - r; the sign counts the beads jumped over.
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        height = sum(1 for x in beta if t < x < b)
        new = tuple(sorted((beads - {b}) | {t}, reverse=True))
        total += (-1) ** height * _mn(new, rest)
    return total


def character_value(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character of type ``lam`` evaluated on the class of cycle type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.degree != mu.degree:
        raise ValueError(f"{lam} and {mu} partition different integers")
    n = len(lam)
    beta = tuple(lam[i] + n - 1 - i for i in range(n))
    return _mn(beta, tuple(mu))


def dimension(lam: Sequence[int]) -> int:
    """Hook length formula."""
    lam = Partition(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])]
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(lam.degree) // hooks


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    irreducibles: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: dict

    @classmethod
    def build(cls, d: int) -> "CharacterTable":
        parts = tuple(partitions_of(d))
        values = {(lam, mu): character_value(lam, mu) for lam in parts for mu in parts}
        return cls(d, parts, parts, values)

    def __call__(self, lam, mu) -> int:
        return self.values[Partition(lam), Partition(mu)]

    def column_orthogonality_holds(self) -> bool:
        return all(sum(self(lam, mu) ** 2 for lam in self.irreducibles) == centralizer_order(mu)
                   for mu in self.classes)


@lru_cache(maxsize=16)
def character_table(d: int) -> CharacterTable:
    return CharacterTable.build(d)


def frobenius_tuple_count(types: Sequence[Sequence[int]], d: int | None = None) -> int:
    """Number of tuples ``(g1, ..., gn)`` with ``g_i`` of cycle type ``types[i]``
    and ``g1 g2 ... gn = 1``, transitive or not.

    ``prod |C_i| / d! * sum_lam prod chi_lam(C_i) / dim(lam)^(n-2)``
    """
    types = [Partition(t) for t in types]
    if d is None:
        d = types[0].degree
    if any(t.degree != d for t in types):
        raise ValueError(f"every type must partition {d}")
    n = len(types)
    table = character_table(d)
    fact = math.factorial(d)
    sizes = [fact // centralizer_order(t) for t in types]
    total = Fraction(0)
    for lam in table.irreducibles:
        term = Fraction(1)
        for t in types:
            term *= table(lam, t)
        if term:
            total += term / Fraction(table(lam, [1] * d)) ** (n - 2)
    total *= Fraction(math.prod(sizes), fact)
    if total.denominator != 1:
        raise ArithmeticError(f"Frobenius count is not an integer: {total}")
    return int(total)

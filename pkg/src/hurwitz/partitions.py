"""Integer partitions, branch data and the Riemann-Hurwitz condition."""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Optional, Sequence


class MalformedDatumError(ValueError):
    """Raised when partitions do not describe a branch datum (bad parts or sums)."""


class IncompatibleDatumError(ValueError):
    """Raised when a datum violates the Riemann-Hurwitz relation."""


class Partition(tuple):
    """A partition of a positive integer, stored with parts sorted descending.

    Instances are plain tuples, so they hash and compare like tuples:

    >>> Partition([1, 3, 2])
    Partition([3, 2, 1])
    >>> str(Partition([2, 2, 1]))
    '[2,2,1]'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]) -> "Partition":
        parts = [int(x) for x in parts]
        if not parts:
            raise MalformedDatumError("a partition needs at least one part")
        if any(x < 1 for x in parts):
            raise MalformedDatumError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        m = re.fullmatch(r"\s*\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*", text)
        if m is None:
            raise MalformedDatumError(f"cannot parse partition {text!r}")
        return cls(int(x) for x in m.group(1).split(","))

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self)

    @property
    def lcm(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), self)

    def multiplicities(self) -> dict[int, int]:
        """Map each part size to the number of times it occurs."""
        out: dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def genus_from_partitions(partitions: Sequence[Partition], degree: int) -> Fraction:
    """Covering genus forced by Riemann-Hurwitz over the sphere (may be non-integral)."""
    n = len(partitions)
    total_len = sum(len(p) for p in partitions)
    return Fraction(2 + degree * (n - 2) - total_len, 2)


@dataclass(frozen=True)
class BranchDatum:
    """A branch datum over the sphere.

    ``partitions`` is ordered: slot ``j`` holds the local degrees over the
    ``j``-th branching point. Strong counts depend on this order, weak
    counts only on :meth:`multiset`.
    """

    cover_genus: int
    degree: int
    partitions: tuple[Partition, ...]

    def __post_init__(self):
        parts = tuple(_as_partition(p) for p in self.partitions)
        object.__setattr__(self, "partitions", parts)
        if self.degree < 1:
            raise MalformedDatumError(f"degree must be positive, got {self.degree}")
        if self.cover_genus < 0:
            raise MalformedDatumError(f"genus must be non-negative, got {self.cover_genus}")
        for p in parts:
            if p.degree != self.degree:
                raise MalformedDatumError(
                    f"partition {p} sums to {p.degree}, expected degree {self.degree}")

    @classmethod
    def from_partitions(cls, partitions: Iterable, degree: Optional[int] = None,
                        genus: Optional[int] = None) -> "BranchDatum":
        """Build a datum, inferring degree from the sums and genus from Riemann-Hurwitz.

        Raises :class:`MalformedDatumError` if the sums disagree and
        :class:`IncompatibleDatumError` if no non-negative integer genus fits
        (or an explicit ``genus`` disagrees with the forced one).
        """
        parts = tuple(_as_partition(p) for p in partitions)
        if not parts:
            raise MalformedDatumError("a datum needs at least one partition")
        sums = {p.degree for p in parts}
        if len(sums) != 1:
            raise MalformedDatumError(
                "partitions have different sums: " + ",".join(str(p) for p in parts))
        d = sums.pop()
        if degree is not None and degree != d:
            raise MalformedDatumError(f"partitions sum to {d}, not to --degree {degree}")
        g = genus_from_partitions(parts, d)
        if g.denominator != 1 or g < 0:
            raise IncompatibleDatumError(
                f"no covering genus satisfies Riemann-Hurwitz (would be {g})")
        if genus is not None and genus != g:
            raise IncompatibleDatumError(f"datum forces genus {g}, not {genus}")
        return cls(int(g), d, parts)

    @classmethod
    def parse(cls, text: str, **kw) -> "BranchDatum":
        return cls.from_partitions(parse_partitions(text), **kw)

    @property
    def n(self) -> int:
        return len(self.partitions)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.cover_genus

    def multiset(self) -> tuple[Partition, ...]:
        """The partitions as an order-independent key."""
        return tuple(sorted(self.partitions, reverse=True))

    def reordered(self, order: Sequence[int]) -> "BranchDatum":
        return BranchDatum(self.cover_genus, self.degree,
                           tuple(self.partitions[i] for i in order))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.partitions)


def parse_partitions(text: str) -> list[Partition]:
    """Parse ``"[2,2,1],[2,3],[2,3]"`` into a list of partitions."""
    group = r"\[\s*\d+(?:\s*,\s*\d+)*\s*\]"
    if re.fullmatch(rf"\s*{group}(?:\s*,\s*{group})*\s*", text) is None:
        raise MalformedDatumError(f"cannot parse datum {text!r}")
    return [Partition.parse(g) for g in re.findall(group, text)]


def is_compatible(datum: BranchDatum) -> bool:
    """Riemann-Hurwitz over the sphere: ``2 - 2g - sum(lengths) == d * (2 - n)``."""
    for p in datum.partitions:
        if p.degree != datum.degree:
            raise MalformedDatumError(f"partition {p} does not sum to {datum.degree}")
    total_len = sum(len(p) for p in datum.partitions)
    return datum.euler_characteristic - total_len == datum.degree * (2 - datum.n)


@dataclass(frozen=True)
class HeartParams:
    """Parameters ``(k, h, pi)`` of the odd-degree family with partitions
    ``[2,...,2,1], [2,...,2,2h+1], pi`` of ``d = 2k + 1``."""

    k: int
    h: int
    pi: Partition

    def __post_init__(self):
        object.__setattr__(self, "pi", _as_partition(self.pi))

    @property
    def genus(self) -> Fraction:
        return Fraction(self.h - len(self.pi) + 1, 2)


def heart_datum(params: HeartParams) -> BranchDatum:
    """The datum ``(g, d=2k+1, [2^k,1], [2^(k-h),2h+1], pi)``."""
    k, h, pi = params.k, params.h, params.pi
    if k < 1 or h < 0:
        raise MalformedDatumError(f"need k >= 1 and h >= 0, got k={k}, h={h}")
    if h > k:
        raise MalformedDatumError(f"2h+1 = {2 * h + 1} exceeds the degree {2 * k + 1}")
    d = 2 * k + 1
    if pi.degree != d:
        raise MalformedDatumError(f"{pi} does not sum to {d}")
    diff = h - len(pi)
    if diff % 2 == 0 or diff < -1:
        raise IncompatibleDatumError(f"h - len(pi) = {diff} must be odd and >= -1")
    g = (diff + 1) // 2
    datum = BranchDatum(g, d, (Partition([2] * k + [1]),
                               Partition([2] * (k - h) + [2 * h + 1]), pi))
    assert is_compatible(datum)
    return datum


def heart(k: int, h: int, pi: Iterable[int]) -> BranchDatum:
    """Shorthand for ``heart_datum(HeartParams(k, h, Partition(pi)))``."""
    return heart_datum(HeartParams(k, h, Partition(pi)))


class ZieveStatus(str, enum.Enum):
    APPLICABLE = "applicable"
    GCD_OBSTRUCTION = "gcd_obstruction"
    EUCLIDEAN = "euclidean"


def lcm_sum(datum: BranchDatum) -> Fraction:
    return sum((1 - Fraction(1, p.lcm) for p in datum.partitions), Fraction(0))


def zieve_status(datum: BranchDatum) -> ZieveStatus:
    """Classify a datum against Zieve's realizability criterion.

    A common divisor in some partition takes precedence over the Euclidean
    (lcm sum equal to 2) case; only ``APPLICABLE`` data are predicted realizable.
    """
    if any(p.gcd > 1 for p in datum.partitions):
        return ZieveStatus.GCD_OBSTRUCTION
    if lcm_sum(datum) == 2:
        return ZieveStatus.EUCLIDEAN
    return ZieveStatus.APPLICABLE


def partitions_of(d: int, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of ``d`` in descending lexicographic order.

    >>> [str(p) for p in partitions_of(4)]
    ['[4]', '[3,1]', '[2,2]', '[2,1,1]', '[1,1,1,1]']
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    limit = d if max_len is None else max_len

    def rec(rest: int, largest: int, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        if len(prefix) == limit:
            return
        for part in range(min(rest, largest), 0, -1):
            prefix.append(part)
            yield from rec(rest - part, part, prefix)
            prefix.pop()

    yield from rec(d, d, [])

"""Sweep all compatible three-point data of a degree and test realizability conjectures."""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .equivalence import weak_count
from .partitions import (BranchDatum, Partition, ZieveStatus, genus_from_partitions,
                         partitions_of, zieve_status)
from .perm import class_size

DEFAULT_DEGREE_CAP = 9
DEEP_DEGREE_CAP = 11
# deep scans skip data whose smallest conjugacy class exceeds this
DEEP_CLASS_LIMIT = 250_000


class ScanRefused(ValueError):
    """The requested degree exceeds the configured cap."""


@dataclass(frozen=True)
class ScanRecord:
    datum: BranchDatum
    nu: int
    zieve: ZieveStatus
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def key(self) -> str:
        return str(self.datum)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "partitions": [list(p) for p in self.datum.partitions],
            "degree": self.datum.degree,
            "genus": self.datum.cover_genus,
            "nu": self.nu,
            "zieve": self.zieve.value,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ScanRecord":
        datum = BranchDatum(obj["genus"], obj["degree"],
                            tuple(Partition(p) for p in obj["partitions"]))
        return cls(datum, obj["nu"], ZieveStatus(obj["zieve"]), obj.get("elapsed_ms", 0.0))


def _is_two_shaped(p: Partition) -> bool:
    # all parts 2 except at most one; covers [d], [2,...,2,1], [2,...,2,m]
    return sum(1 for x in p if x != 2) <= 1


def compatible_data(d: int, genus_max: Optional[int] = None,
                    deep: bool = False) -> Iterator[BranchDatum]:
    """Compatible multisets of three partitions of ``d``, each in descending slot order."""
    parts = list(partitions_of(d))
    for triple in itertools.combinations_with_replacement(parts, 3):
        g = genus_from_partitions(triple, d)
        if g.denominator != 1 or g < 0:
            continue
        if genus_max is not None and g > genus_max:
            continue
        if deep:
            if not any(_is_two_shaped(p) for p in triple):
                continue
            if min(class_size(p) for p in triple) > DEEP_CLASS_LIMIT:
                continue
        yield BranchDatum(int(g), d, tuple(sorted(triple, reverse=True)))


def _scan_one(datum: BranchDatum) -> ScanRecord:
    t0 = time.perf_counter()
    nu = weak_count(datum).nu
    return ScanRecord(datum, nu, zieve_status(datum), 1000 * (time.perf_counter() - t0))


def scan_degree(d: int, genus_max: Optional[int] = None, deep: bool = False,
                workers: int = 1, override: bool = False,
                data: Optional[Iterable[BranchDatum]] = None) -> list[ScanRecord]:
    """Weak Hurwitz numbers of every compatible datum of degree ``d``, sorted by datum string.

    Plain scans are limited to ``d <= 9``. ``deep`` raises the limit to 11 but
    only visits data with a partition of shape ``[2,...,2,m]`` (this includes
    ``[d]``) whose smallest conjugacy class is at most :data:`DEEP_CLASS_LIMIT`.
    ``override`` lifts both degree caps.
    """
    if d < 2:
        raise ValueError(f"scan needs d >= 2, got {d}")
    cap = DEEP_DEGREE_CAP if deep else DEFAULT_DEGREE_CAP
    if d > cap and not override:
        raise ScanRefused(f"degree {d} exceeds the cap {cap}"
                          + ("" if deep else " (use deep mode for up to 11)"))
    todo = list(data) if data is not None else list(compatible_data(d, genus_max, deep))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_scan_one, todo, chunksize=8))
    else:
        records = [_scan_one(x) for x in todo]
    return sorted(records, key=lambda r: r.key)


def write_jsonl(records: Sequence[ScanRecord], fh, timing: bool = True) -> None:
    for r in records:
        fh.write(json.dumps(r.to_json(timing)) + "\n")


@dataclass
class ConjectureReport:
    degrees: list[int]
    total: int
    exceptional: list[ScanRecord]
    prime_violations: list[ScanRecord]
    zieve_violations: list[ScanRecord]

    @property
    def prime_degree_holds(self) -> bool:
        return not self.prime_violations

    @property
    def zieve_holds(self) -> bool:
        return not self.zieve_violations

    def to_json(self) -> dict:
        return {
            "degrees": self.degrees,
            "total": self.total,
            "exceptional": [r.to_json(timing=False) for r in self.exceptional],
            "prime_degree_holds": self.prime_degree_holds,
            "zieve_holds": self.zieve_holds,
            "prime_violations": [r.to_json(timing=False) for r in self.prime_violations],
            "zieve_violations": [r.to_json(timing=False) for r in self.zieve_violations],
        }


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % q for q in range(2, int(n ** 0.5) + 1))


def conjecture_report(records: Sequence[ScanRecord]) -> ConjectureReport:
    """Collect exceptional data and any counterexamples to the two predictions.

    A violation is an exceptional datum of prime degree, or an exceptional
    datum whose Zieve status is ``applicable``. Violations are listed, never
    dropped.
    """
    exceptional = [r for r in records if r.nu == 0]
    return ConjectureReport(
        degrees=sorted({r.datum.degree for r in records}),
        total=len(records),
        exceptional=exceptional,
        prime_violations=[r for r in exceptional if _is_prime(r.datum.degree)],
        zieve_violations=[r for r in exceptional if r.zieve is ZieveStatus.APPLICABLE],
    )

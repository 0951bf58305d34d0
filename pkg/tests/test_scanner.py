import io
import itertools
import json

import pytest

from hurwitz.partitions import BranchDatum, ZieveStatus, partitions_of
from hurwitz.scanner import (ScanRecord, ScanRefused, compatible_data,
                             conjecture_report, scan_degree, write_jsonl)

from oracles import weak_orbit_count


def _brute_compatible(d):
    out = set()
    parts = [tuple(p) for p in partitions_of(d)]
    for triple in itertools.combinations_with_replacement(parts, 3):
        chi = sum(len(p) for p in triple) - d
        if chi % 2 == 0 and chi <= 2:
            out.add(tuple(sorted(triple, reverse=True)))
    return out


@pytest.mark.parametrize("d", range(2, 9))
def test_compatible_data_matches_brute_force(d):
    found = [tuple(tuple(p) for p in x.partitions) for x in compatible_data(d)]
    assert len(found) == len(set(found))
    assert set(found) == _brute_compatible(d)


def test_genus_max_filter():
    assert all(x.cover_genus <= 1 for x in compatible_data(7, genus_max=1))
    assert {x.cover_genus for x in compatible_data(7)} == {0, 1, 2, 3}


def test_deep_filter():
    for x in compatible_data(9, deep=True):
        assert any(sum(1 for v in p if v != 2) <= 1 for p in x.partitions)


def test_datum_string_round_trip_for_scanner_data():
    for d in range(2, 10):
        for x in compatible_data(d):
            assert BranchDatum.parse(str(x)) == x


@pytest.mark.parametrize("d", [3, 4, 5])
def test_scan_matches_brute_force_weak_counts(d):
    for rec in scan_degree(d):
        assert rec.nu == weak_orbit_count(rec.datum.partitions, d), str(rec.datum)


def test_scan_d4_report():
    records = scan_degree(4)
    report = conjecture_report(records)
    assert [str(r.datum) for r in report.exceptional] == ["[3,1],[2,2],[2,2]"]
    assert report.exceptional[0].zieve is ZieveStatus.GCD_OBSTRUCTION
    assert report.prime_degree_holds and report.zieve_holds
    assert records == sorted(records, key=lambda r: r.key)


def test_scan_is_worker_independent():
    one = scan_degree(6, workers=1)
    two = scan_degree(6, workers=2)
    assert [r.to_json(timing=False) for r in one] == [r.to_json(timing=False) for r in two]


def test_scan_refuses_large_degree():
    with pytest.raises(ScanRefused):
        scan_degree(10)
    with pytest.raises(ScanRefused):
        scan_degree(12, deep=True)
    with pytest.raises(ValueError):
        scan_degree(1)


def test_jsonl_round_trip():
    records = scan_degree(5)
    buf = io.StringIO()
    write_jsonl(records, buf)
    back = [ScanRecord.from_json(json.loads(line)) for line in buf.getvalue().splitlines()]
    assert back == records
    buf = io.StringIO()
    write_jsonl(records, buf, timing=False)
    assert "elapsed_ms" not in buf.getvalue()


def test_report_flags_violations():
    fake = ScanRecord(BranchDatum.parse("[3,2],[3,2],[5]"), 0, ZieveStatus.APPLICABLE)
    report = conjecture_report([fake])
    assert not report.prime_degree_holds and not report.zieve_holds
    js = report.to_json()
    assert js["prime_violations"] and js["zieve_violations"]

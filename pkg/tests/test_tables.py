"""Embedded reference tables: loading, consistency, and verification."""

import pytest

from circodes import tables
from circodes.graphs import CirculantSupport


def test_load_parses_all_tables():
    recs = tables.load_tables()
    counts = {}
    for r in recs:
        counts[r.table_id] = counts.get(r.table_id, 0) + 1
    assert counts == {"T1": 17, "T2": 27, "T3": 2, "T4": 12,
                      "T5": 8, "T6": 36, "BOUNDS": 12}


def test_checksum_guards_the_resource():
    import circodes.tables as mod

    original = mod.TABLES_SHA256
    mod.TABLES_SHA256 = "0" * 64
    try:
        with pytest.raises(RuntimeError):
            mod._raw_text()
    finally:
        mod.TABLES_SHA256 = original


def test_t2_sums_to_2_pow_36():
    total = sum(r.payload["a"] for r in tables.by_table("T2"))
    assert total == 2**36


def test_all_printed_supports_are_valid():
    for r in tables.load_tables():
        sup = r.support()
        if sup is not None:
            assert isinstance(sup, CirculantSupport)
            assert sup.n == r.n


def test_t4_valency_matches_t6():
    t6 = {r.n: r.payload for r in tables.by_table("T6")}
    for r in tables.by_table("T4"):
        assert t6[r.n]["valency"] == r.support().size
        assert t6[r.n]["dmin"] == r.payload["d"]


def test_bounds_rows_verify():
    for r in tables.by_table("BOUNDS"):
        v = tables.verify(r, effort="quick")
        assert v.status == tables.CONFIRMED


def test_small_t1_rows_confirm_exactly():
    rows = {r.n: r for r in tables.by_table("T1")}
    v = tables.verify(rows[34], effort="quick")
    assert v.status == tables.CONFIRMED
    assert "exact" in v.evidence


def test_larger_t1_row_upper_bound_at_quick_effort():
    rows = {r.n: r for r in tables.by_table("T1")}
    v = tables.verify(rows[44], effort="quick", seed=3)
    assert v.status in (tables.UPPER_BOUND_CONFIRMED, tables.CONFIRMED)


def test_t5_skipped_below_marathon():
    row = tables.by_table("T5")[0]
    assert tables.verify(row, effort="quick").status == tables.SKIPPED


def test_t6_row_without_support_is_skipped():
    rows = {r.n: r for r in tables.by_table("T6")}
    v = tables.verify(rows[100], effort="quick")
    assert v.status == tables.SKIPPED
    assert "support" in v.evidence


def test_verdict_line_is_machine_parsable():
    r = tables.by_table("BOUNDS")[0]
    v = tables.verify(r, effort="quick")
    table_id, rest = v.line().split(" ", 1)
    assert table_id == "BOUNDS"
    assert " confirmed | " in v.line()


def test_unknown_effort_rejected():
    with pytest.raises(ValueError):
        tables.verify(tables.by_table("T1")[0], effort="heroic")

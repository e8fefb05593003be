import io
import json
from fractions import Fraction

import pytest

from cantorlist.catalog import EmitError, build_catalog, emit, phi_table, render, verify_golden
from cantorlist.golden import (
    GoldenParseError,
    default_errata_path,
    default_golden_path,
    expected_value,
    read_errata,
    read_golden,
)
from cantorlist.intpoly import Poly
from cantorlist.irreducibility import is_irreducible
from cantorlist.realroots import isolate_roots, truncated_decimal


def P(*high):
    return Poly.from_high(high)


def test_small_catalogs():
    (first,) = build_catalog(1)
    assert (first.c, first.n, first.k, first.composition, first.signs, first.decimal) == (1, 1, 1, "[1]", "()", "0")
    assert len(build_catalog(4)) == 19


def test_known_entries(catalog7):
    e = catalog7[15]
    assert (e.c, e.n, e.k, e.composition, e.signs, e.decimal) == (16, 4, 2, "[1,1,1]", "(+,-)", "-1.6180339887")
    last = catalog7[-1]
    assert (last.c, last.n, last.k, last.composition, last.signs, last.decimal) == (
        291, 7, 5, "[1,0,0,0,1,1]", "(-,-)", "+1.1673039782")


def test_phi_table(catalog7):
    t = phi_table(catalog7)
    assert t.totals() == [1, 2, 4, 12, 28, 72, 172]
    assert t.cell(7, 3) == 100 and t.cell(3, 2) == 0 and t.cell(6, 2) == 32
    assert all(t.cell(n, k) == 0 for n in range(2, 8) for k in range(n, n + 1))
    assert "172" in t.render()


def test_csv_rows(catalog7):
    lines = render(catalog7, "csv").splitlines()
    assert lines[0] == "c,n,k,composition,signs,value,polynomial"
    assert lines[5] == '5,3,1,"[2,1]","(-)",1/2,"2x-1"'
    assert lines[44] == '44,5,3,"[1,0,1,1]","(-,+)",-1.3247179572,"x^3-x+1"'
    assert len(lines) == 292


def test_json_carries_intervals(catalog7):
    rows = json.loads(render(catalog7[:50], "json"))
    assert rows[4]["exact"] == "1/2" and rows[4]["interval"] == ["1/2", "1/2"]
    r = rows[43]
    lo, hi = (Fraction(x) for x in r["interval"])
    assert r["exact"] is None and lo < Fraction("-1.3247179572") and hi > Fraction("-1.3247179573")
    assert hi - lo < Fraction(1, 10**11)


def test_text_format(catalog7):
    text = render(catalog7[:12], "text")
    assert "[2,1]" in text and "2x-1" in text
    with pytest.raises(ValueError):
        render(catalog7, "xml")


def test_emit_to_file_uses_lf(tmp_path, catalog7):
    out = tmp_path / "c.csv"
    emit(catalog7, "csv", out)
    data = out.read_bytes()
    assert b"\r\n" not in data and data.decode("utf-8") == render(catalog7, "csv")
    buf = io.StringIO()
    emit(catalog7[:3], "csv", buf)
    assert buf.getvalue().count("\n") == 4


def test_emit_reports_destination(tmp_path, catalog7):
    bad = tmp_path / "missing" / "c.csv"
    with pytest.raises(EmitError, match="missing"):
        emit(catalog7, "csv", bad)


def test_precision_changes_digits():
    cat = build_catalog(5, precision=6)
    assert cat[43].decimal == "-1.32471"


def test_parallel_build_is_identical(catalog7):
    assert render(build_catalog(7, jobs=3), "json") == render(catalog7, "json")


# reference data ----------------------------------------------------------------

def test_golden_needs_errata(catalog7):
    rep = verify_golden(catalog7, default_golden_path())
    assert {m.c for m in rep.mismatches} == {95, 132, 133, 134, 135, 172, 173, 174, 175}


def test_errata_cover_only_known_rows():
    errata = read_errata(default_errata_path())
    assert {e.c for e in errata if e.changes} == {95, 132, 133, 134, 135, 172, 173, 174, 175}


def test_erratum_95_is_a_sign_misprint():
    printed, corrected = P(1, 0, -2, -1), P(1, 0, 2, -1)
    assert is_irreducible(printed) is not True
    (root,) = isolate_roots(corrected)
    assert truncated_decimal(root) == "+0.4533976515"


def test_errata_132_to_135_value_swap():
    assert isolate_roots(P(5, 0, 1)) == [] and isolate_roots(P(1, 0, 5)) == []
    assert [truncated_decimal(r) for r in isolate_roots(P(5, 0, -1))] == ["-0.4472135954", "+0.4472135954"]
    assert [truncated_decimal(r) for r in isolate_roots(P(1, 0, -5))] == ["-2.2360679774", "+2.2360679774"]


def test_errata_172_to_175_block_order(catalog7):
    # as printed, the block starts with -0.5365..., although 3x^3-x+1 has the smaller root -0.8513...
    rows = [r for r in read_golden(default_golden_path()) if 172 <= r.c <= 175]
    printed_first = [expected_value(r.omega) for r in rows[0::2]]
    assert printed_first == ["-0.5365651646", "-0.8513830728"]
    assert truncated_decimal(isolate_roots(P(3, 0, -1, 1))[0]) == "-0.8513830728"
    assert expected_value(rows[3].omega) is None  # '+.0.8513830728' is not a number
    # every other multi-signature block of the tables starts with its smallest value
    golden = read_golden(default_golden_path())
    blocks = {}
    for r in golden:
        blocks.setdefault((r.n, r.k, r.composition), []).append(r)
    for key, rs in blocks.items():
        if any(172 <= r.c <= 175 for r in rs) or any(r.c in (95, 132, 133, 134, 135) for r in rs) or rs[0].k == 1:
            continue
        first = expected_value(rs[0].omega)
        vals = [expected_value(r.omega) for r in rs]
        assert all(_num(first) <= _num(v) for v in vals), key


def _num(v):
    return Fraction(v) if isinstance(v, Fraction) else Fraction(v.lstrip("+"))


def test_corrupted_decimal_is_one_mismatch(tmp_path, catalog7):
    text = default_golden_path().read_text(encoding="utf-8").replace("-1.3247179572", "-1.3247179573")
    bad = tmp_path / "golden.csv"
    bad.write_text(text, encoding="utf-8")
    rep = verify_golden(catalog7, bad, default_errata_path())
    assert [(m.c, m.field) for m in rep.mismatches] == [(44, "value")]


def test_malformed_golden_reports_line(tmp_path, catalog7):
    lines = default_golden_path().read_text(encoding="utf-8").splitlines()
    lines[10] = "x,4,1,[3,1],(+),-1/3,"
    bad = tmp_path / "golden.csv"
    bad.write_text("\n".join(lines) + "\n", encoding="utf-8")
    with pytest.raises(GoldenParseError) as info:
        verify_golden(catalog7, bad)
    assert info.value.line == 11 and ":11:" in str(info.value)


def test_expected_value_forms():
    assert expected_value("-(1/2)") == Fraction(-1, 2)
    assert expected_value("+phi") == "+1.6180339887"
    assert expected_value("(-3+sqrt(13))/2") == "+0.3027756377"
    assert expected_value("-0.5") == "-0.5000000000"
    assert expected_value("nonsense)") is None

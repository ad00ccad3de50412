import json

import pytest

from gorlink.catalog import (
    CSV_HEADER,
    build_table,
    enumerate_ag,
    load_paper_data,
    parse_paper_data,
    to_csv,
    to_json,
    to_markdown,
)
from gorlink.errors import DataConflict, PaperDataError
from gorlink.hvector import HVector, is_g3_admissible

H = HVector.parse


def test_enumerate_examples():
    hs = enumerate_ag(14)
    assert [h for h in hs if h.degree == 14] == [H("1,3,3,3,3,1"), H("1,3,6,3,1")]
    assert len([h for h in enumerate_ag(20) if h.degree == 20]) == 3
    assert [h for h in enumerate_ag(5) if h.degree == 5] == [H("1,3,1")]


def test_enumerate_degenerate_is_exhaustive_by_brute_force():
    from itertools import product

    dmax = 12
    brute = set()
    for b in range(0, dmax):
        for vals in product(range(1, 4), repeat=b + 1):
            if vals[0] == 1 and sum(vals) <= dmax and is_g3_admissible(vals):
                brute.add(HVector(vals))
    assert {h for h in enumerate_ag(dmax, nondegenerate=False) if max(h) <= 3} == brute


@pytest.fixture(scope="module")
def rows():
    return build_table(30)


def test_row_examples(rows):
    by_h = {str(r.h): r for r in rows}
    r = by_h["1,3,6,3,1"]
    (e,) = r.representing
    assert (r.A, r.m, str(e.htilde), e.d, e.g, e.B, e.nu_tilde, e.mu_tilde, r.mu_range) == (
        35, 3, "1,2,3", 6, 3, 35, 12, (11, 11), (11, 11))
    r = by_h["1,3,3,1"]
    assert (r.A, r.m, r.mu_range) == (21, 2, (7, 7))
    assert [(str(e.htilde), e.nu_tilde) for e in r.representing] == [("1,2", 6), ("1,2,1", 8)]
    r = by_h["1,3,6,10,6,3,1"]
    assert (r.A, r.representing[0].B, r.representing[0].B_is_upper, r.footnotes) == (63, 59, True, ("f",))


def test_unknown_cells_stay_unknown(rows):
    r = next(r for r in rows if str(r.h) == "1,3,6,6,3,1")
    e = r.representing[2]
    assert str(e.htilde) == "1,2,3,2" and e.status == "unknown" and e.mu_tilde == (None, None)


def test_outputs_are_deterministic(rows):
    again = build_table(30)
    assert to_csv(rows) == to_csv(again)
    assert to_json(rows) == to_json(again)
    assert to_markdown(rows) == to_markdown(again)
    assert to_csv(rows).splitlines()[0] == CSV_HEADER
    assert len(to_csv(rows).splitlines()) == 1 + 37


def test_beyond_data_range_builds():
    rows = build_table(40)
    assert all(r.source == "computed" for r in rows if r.d > 30)


def _doc():
    return json.loads(open(load_paper_data.__globals__["default_data_path"]()).read())


def test_unknown_field_rejected():
    doc = _doc()
    doc["rows"][0]["surprise"] = 1
    with pytest.raises(PaperDataError):
        parse_paper_data(doc)


@pytest.mark.parametrize("field, value", [("A", 16), ("mu_lo", 4), ("m", 2)])
def test_conflicts_are_errors(field, value):
    doc = _doc()
    doc["rows"][0][field] = value
    with pytest.raises(DataConflict):
        build_table(5, parse_paper_data(doc))


def test_b_conflict_is_error():
    doc = _doc()
    doc["rows"][0]["B"]["1,2"] = 14
    with pytest.raises(DataConflict):
        build_table(5, parse_paper_data(doc))


def test_env_override(tmp_path, monkeypatch):
    doc = _doc()
    doc["rows"] = doc["rows"][:1]
    p = tmp_path / "alt.json"
    p.write_text(json.dumps(doc))
    monkeypatch.setenv("GORLINK_DATA", str(p))
    rows = build_table(8)
    assert [r.source for r in rows] == ["paper_data", "computed"]

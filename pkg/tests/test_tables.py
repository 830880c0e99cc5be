"""Row-level facts about the published GF(11) examples.

Rows whose printed data disagree with a direct recomputation are asserted
as the recomputed facts, each cross-checked with plain mod-11 arithmetic.
"""

import pytest

from deephole.errors import RowMismatch
from deephole.tables import TABLE_IDS, TABLES, reports_to_csv, reproduce_table

P = 11


def plain_eval(coeffs, x):
    return sum(c * pow(x, i, P) for i, c in enumerate(coeffs)) % P


def plain_word(coeffs):
    return [plain_eval(coeffs, pow(2, i, P)) for i in range(P - 1)]


def ints(text):
    return [int(t) for t in text.strip("() ").split(",")]


@pytest.fixture(scope="module")
def reports():
    return {t: reproduce_table(t) for t in TABLE_IDS}


def test_every_row_is_below_covering_radius(reports):
    for rep in reports.values():
        for row in rep.rows:
            assert row.exact_distance < 5 and not row.is_deep_hole


@pytest.mark.parametrize("table,expected", [
    ("1", [4, 4, 4]),
    ("2", [4, 3, 3, 4]),
    ("3", [3, 4, 3, 3, 4, 3]),
    ("4", [3, 3, 4, 3]),
    ("extra", [3]),
])
def test_exact_distances(reports, table, expected):
    assert [r.exact_distance for r in reports[table].rows] == expected


def test_table1_row2_codeword_belongs_to_row3(reports):
    rows = reports["1"].rows
    assert rows[1].v == rows[2].v
    assert rows[1].d_u_v == 7
    assert reports["1"].failures() == [(2, "d_u_v_matches", 4, 7)]
    u = ints(TABLES["1"][1][0])
    v = ints(TABLES["1"][1][2])
    assert sum(a != b for a, b in zip(u, v)) == 7


def test_table2_weights(reports):
    assert [r.d_u_v for r in reports["2"].rows] == [4, 3, 3, 4]
    assert all(r.checks["weight_matches"] for r in reports["2"].rows)


def test_table2_interpolant_defects(reports):
    rows = reports["2"].rows
    # row 1: the printed x^4 coefficient 1 should be 3
    assert rows[0].computed_interpolant == "2 + 5*x + 3*x^2 + 1*x^3 + 3*x^4 + 7*x^8 + 9*x^9"
    assert plain_word([2, 5, 3, 1, 3, 0, 0, 0, 7, 9]) == ints(TABLES["2"][0][0])
    # row 3: the printed polynomial interpolates a permuted word
    assert plain_word([5, 4, 5, 5, 7, 0, 1, 0, 0, 9]) == [3, 6, 0, 8, 0, 0, 0, 0, 0, 0]
    assert rows[2].printed_interpolant_word == "(3,6,0,8,0,0,0,0,0,0)"
    assert [f[:2] for f in reports["2"].failures()] == [(1, "interpolant_matches"), (3, "interpolant_matches")]


def test_table3_row3_distance(reports):
    row = reports["3"].rows[2]
    assert row.d_u_v == 3 and row.printed_value == 4
    assert [f[:2] for f in reports["3"].failures()] == [(3, "d_u_v_matches")]


def test_table3_row4_zero_codeword(reports):
    row = reports["3"].rows[3]
    assert row.v == "(0,0,0,0,0,0,0,0,0,0)" and row.d_u_v == 4


def test_table4_and_example_pass(reports):
    assert reports["4"].passed and reports["extra"].passed
    assert [r.d_u_v for r in reports["4"].rows] == [4, 4, 4, 3]


def test_printed_codewords_are_codewords(reports):
    for t in ("1", "3", "4", "extra"):
        assert all(r.checks["codeword_v"] for r in reports[t].rows)


def test_printed_interpolants_match_elsewhere(reports):
    for t in ("1", "3", "4", "extra"):
        assert all(r.checks["interpolant_matches"] for r in reports[t].rows)
        for row, entry in zip(reports[t].rows, TABLES[t]):
            assert ints(row.printed_interpolant_word) == ints(entry[0])


def test_strict_mode_raises():
    with pytest.raises(RowMismatch, match="row 2: d_u_v_matches: expected 4, got 7"):
        reproduce_table("1", strict=True)
    reproduce_table("4", strict=True)


def test_unknown_table():
    with pytest.raises(ValueError):
        reproduce_table("5")


def test_csv(reports):
    text = reports_to_csv([reports["4"]])
    lines = text.splitlines()
    assert lines[0] == "received_word,interpolant,codeword_v,d_u_v,exact_distance,is_deep_hole"
    assert len(lines) == 5
    both = reports_to_csv([reports["1"], reports["4"]]).splitlines()
    assert both[0].startswith("table,") and len(both) == 8

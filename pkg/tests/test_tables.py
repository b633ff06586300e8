import pytest

from phibase import tables
from phibase.tables import PRINTED, parse_row, render_row


@pytest.mark.parametrize("kind", ["phi", "fib", "lucas"])
def test_generated_rows_match_printed_for_2_to_11(kind):
    rows = {r.n: r for r in tables.table(11, kind)}
    for text in PRINTED[kind][:10]:
        n, offs = parse_row(kind, text)
        assert rows[n].offsets == offs


def test_row_rendering():
    rows = {r.n: r.text for r in tables.table(12, "fib")}
    assert rows[2] == "2F_n = F_{n+1} + F_{n-2}"
    assert rows[12] == "12F_n = F_{n+5} + F_{n-1} + F_{n-3} + F_{n-6}"
    assert {r.n: r.text for r in tables.table(7, "lucas")}[7] == "7L_n = L_{n+4} + L_{n-4}"
    assert render_row("phi", 6, (3, 1, -4)) == "6 = phi^{3} + phi^{1} + phi^{-4}"


def test_parse_row_variants():
    assert parse_row("phi", r"6 = \varphi^{3} + \varphi^{+1} + \varphi^{-4}") == (6, (3, 1, -4))
    assert parse_row("phi", r"4 = \varphi^{2} + \varphi^0 + \varphi^{-2}") == (4, (2, 0, -2))
    assert parse_row("fib", "8F_n = F_{n+4} + F_{n} + F_{n-4}") == (8, (4, 0, -4))
    assert parse_row("lucas", "4L_n = L_{n+2} + L_n + L_{n-2}") == (4, (2, 0, -2))
    assert parse_row("zeckendorf", "9 = F_2 + F_6") == (9, (2, 6))
    for kind in ("phi", "fib", "lucas"):
        for r in tables.table(30, kind):
            assert parse_row(kind, r.text) == (r.n, r.offsets)


def test_exactly_two_discrepancies():
    found = tables.discrepancies()
    assert [d.location.split(" ")[0] for d in found] == ["zeckendorf-examples:7", "fibonacci-multiples:12"]
    zeck, twelve = found
    assert zeck.paper_value == "7 = F_3 + F_6"
    assert zeck.computed_value == "7 = F_3 + F_5"
    assert "= 10 != 7" in zeck.witness
    assert "14*F_n" in twelve.witness and "n=7: 182 != 156" in twelve.witness
    assert "phi-expansions:12" in twelve.location and "lucas-multiples:12" in twelve.location


def test_discrepancies_filtered_by_range():
    assert tables.discrepancies(1, 6) == []
    assert [d.location[:20] for d in tables.discrepancies(8, 12)] == ["fibonacci-multiples:"]


def test_unknown_kind():
    with pytest.raises(ValueError):
        tables.table(5, "pell")

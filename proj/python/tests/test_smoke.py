import pytest

import qellpy


def test_symmetric_group_components():
    s3 = qellpy.Group("S3")
    assert s3.order == 6
    comps = s3.components()
    assert [c["rank"] for c in comps] == [3, 2, 3]
    assert sorted(comps[1]["grades"]) == ["0", "1/2"]
    assert sorted(comps[2]["grades"]) == ["0", "1/3", "2/3"]
    assert s3.rank() == 8


def test_character_table_rows_start_with_degrees():
    table = qellpy.Group("S3").character_table()
    assert sorted(row[0] for row in table) == ["1", "1", "2"]


def test_element_arithmetic_round_trips():
    g = qellpy.Group("C2")
    q = qellpy.Element.q(g)
    unit = qellpy.Element.unit(g)
    assert q * unit == q
    assert qellpy.Element(g, str(q + unit)) == q + unit
    assert q - q != unit


def test_power_of_q_over_the_trivial_group():
    one = qellpy.Group("1")
    p = qellpy.power_total(qellpy.Element.q(one), 2)
    assert p.group_order == 2
    # identity component q^2, transposition component the grade-1/2 generator
    assert str(p) == "(q^2)*b[()][0] + (1)*b[(1 2)][1]"
    assert p.component(0) == "(q^2)*b[0]"


def test_axioms_pass_for_small_cases():
    c2 = qellpy.Group("C2")
    v = qellpy.Element(c2, "q + 2*b[1][1]")
    w = qellpy.Element(c2, "unit - q^-1")
    result = qellpy.check_axioms(v, w, 2, 2)
    assert result == {"i": "pass", "ii": "pass", "iii": "pass", "iv": "pass"}


@pytest.mark.parametrize("n,rank", [(2, 3), (3, 4), (4, 7), (5, 6)])
def test_quotient_matches_tate_factors(n, rank):
    report = qellpy.quotient_and_match(n)
    assert report["passed"]
    assert report["total_rank"] == rank == report["expected_rank"]


def test_errors_are_typed():
    with pytest.raises(qellpy.ParseError):
        qellpy.Group("Q3")
    with pytest.raises(qellpy.CapExceeded):
        qellpy.quotient_and_match(7)
    assert issubclass(qellpy.ParseError, qellpy.QellError)

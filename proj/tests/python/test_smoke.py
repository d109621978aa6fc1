import os
from pathlib import Path

import pytest

import toppling_py as tp

DATA = Path(os.environ.get("TOPPLING_DATA", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture
def c4():
    return tp.load_graph(str(DATA / "c4.txt"))


def test_c4_betti(c4):
    assert c4.n == 4 and c4.edge_count == 4 and c4.q == 1
    assert tp.betti_totals(c4) == [1, 6, 8, 3]
    assert tp.betti(c4) == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}


def test_pic_grading_sums_to_totals(c4):
    pic = tp.betti(c4, "Pic")
    per_level = [0, 0, 0, 0]
    for (i, cls), count in pic.items():
        assert len(cls) == 4
        per_level[i] += count
    assert per_level == [1, 6, 8, 3]


def test_groebner_strings(c4):
    gens = tp.groebner(c4)
    assert len(gens) == 6
    assert all(" - " in g for g in gens)
    assert all(" - " not in g for g in tp.groebner(c4, "monomial"))


def test_q_reduce_and_equivalence(c4):
    r = tp.q_reduce(c4, [0, 4, 0, 0])
    assert tp.equivalent(c4, r, [0, 4, 0, 0])
    assert tp.q_reduce(c4, r) == r
    assert tp.spanning_tree_count(c4) == 4


def test_flags(c4):
    assert tp.flags(c4, 1) == ["{1,2,3,4}"]
    assert len(tp.flags(c4, 4)) == 3
    assert len(tp.flags(c4)) == 1 + 6 + 8 + 3


def test_verify_all_checks_pass(c4):
    checks = tp.verify(c4)
    assert checks and all(checks.values()), checks


def test_json_round_trip(c4):
    again = tp.parse_graph(c4.to_json())
    assert again.to_text() == c4.to_text()
    assert tp.betti_totals(c4.with_q(3)) == [1, 6, 8, 3]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        tp.parse_graph("v 2\ne 1 1\n")
    with pytest.raises(ValueError):
        tp.parse_graph("")

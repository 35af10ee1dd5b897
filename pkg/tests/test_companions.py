import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4serre import Weight, bgg_outline, companion_matches_table, companion_table, root_valuations
from gsp4serre.errors import InvalidModularWeight, WeightOutOfRange


def records(k, ell, p):
    return {r.case_id: r for r in companion_table(k, ell, p)}


def test_case_examples():
    recs = records(7, 4, 17)
    assert list(recs) == ["Fund", "C1", "C2", "C3", "C0'", "C1'", "C2'", "C3'"]
    c1 = recs["C1"]
    assert (c1.twist_exp, c1.k_prime, c1.ell_prime, c1.lambda_prime) == (-2, 23, 16, Weight(20, 13, 5))
    c2p = recs["C2'"]
    assert (c2p.k_prime, c2p.ell_prime) == (11, 4)
    # primed companions carry c = a + b + (p - 1)
    assert c2p.lambda_prime == Weight(8, 1, 21)
    assert c2p.alcove.label == "C0"
    assert recs["C3"].lambda_prime == Weight(12, 9, 5)
    assert recs["Fund"].lambda_prime == Weight(4, 1, 5)


def test_records_metadata():
    recs = records(7, 4, 17)
    assert recs["C3'"].source_note
    assert "source_note" in recs["C3'"].to_json()
    assert "source_note" not in recs["C1"].to_json()
    assert recs["C3'"].required_zero_mask == frozenset((i, j) for i in range(1, 5) for j in range(i + 1, 5))
    assert recs["C0'"].required_zero_mask == {(2, 3)}
    assert {r.automorphic_type for r in recs.values()} == {"Holomorphic", "Whittaker", "PAdicOnly"}
    assert all(r.condition_holds for r in recs.values())


def test_out_of_range():
    with pytest.raises(WeightOutOfRange):
        companion_table(12, 8, 17)


@pytest.mark.parametrize("k,ell,p", [(7, 4, 17), (9, 5, 23), (5, 4, 13)])
def test_matches_table(k, ell, p):
    assert companion_matches_table(k, ell, p)


def test_bgg_example():
    out = bgg_outline(7, 4)
    assert out.labels() == ["omega^(-1,-4)", "omega^(3,-4)", "omega^(7,0)", "omega^(7,4)"]
    assert out.fil_jumps == (0, 2, 6, 8)
    assert out.degrees == (8, 9, 10, 11)
    assert out.differential_degrees[-1] == 3
    assert out.graded[6] == (1, "omega^(7,0)")
    assert bgg_outline(3, 3).fil_jumps == (0, 1, 2, 3)
    with pytest.raises(InvalidModularWeight):
        bgg_outline(3, 4)


@given(st.integers(3, 60), st.integers(0, 57))
def test_jumps_equal_valuations(k, d):
    ell = max(3, k - d)
    assert bgg_outline(k, ell).fil_jumps == root_valuations(k, ell)

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qforms.errors import BadParams, UnknownIdentity
from qforms.identities import (
    IdentityReport,
    list_ids,
    lookup,
    report_to_dict,
    run_suite,
    verify,
)

F = Fraction


# --- whole-catalog runs ---

def test_suite_every_entry_passes_at_default_order():
    reports = run_suite()
    bad = [(r.id, r.params, r.first_diff) for r in reports if not r.equal]
    assert bad == []
    assert len(reports) >= len(list_ids())


def test_suite_is_sorted_and_deterministic():
    a = run_suite()
    b = run_suite()
    assert [r.id for r in a] == sorted(r.id for r in a)
    assert [(r.id, r.params) for r in a] == [(r.id, r.params) for r in b]


def test_suite_filter_prefix():
    reports = run_suite(filter="th4")
    assert reports
    assert all(r.id.startswith("th4") for r in reports)
    assert run_suite(filter="zzz") == []


def test_suite_excludes_diagnostics():
    ids = {r.id for r in run_suite()}
    assert "th29_2" not in ids
    assert not any(i.endswith("_corrupted") for i in ids)


def test_listing_separates_diagnostics():
    plain = set(list_ids())
    everything = set(list_ids(include_diagnostics=True))
    assert "jacobi2sq" in plain
    assert "th29_2" not in plain
    assert {"th29_2", "th47_corrupted", "jacobi2sq_corrupted"} <= everything


# --- single verifications ---

def test_two_squares_check_at_order_200():
    r = verify("jacobi2sq", {}, 200)
    assert r.equal and r.first_diff is None
    assert r.window == (0, 200)
    assert r.order == 200


def test_power_lambert_check_with_parameter():
    r = verify("th47", {"nu": 3}, 64)
    assert r.equal
    assert r.params == {"nu": 3}


def test_negative_window_edge_is_compared():
    r = verify("th20")
    assert r.window[0] == -1
    assert r.equal


def test_sequence_checks_report_their_kind():
    assert verify("th10").kind == "SeqEq"
    assert verify("jacobi2sq").kind == "SeriesEq"


def test_annotations_carry_derived_constants():
    assert verify("th67", {"G": 5}).params["A"] == F(1, 5)
    assert verify("th67", {"G": 13}).params["A"] == 1
    assert verify("th71_form").params["A"] == F(1, 5)


def test_experimental_entry_records_resolution():
    r = verify("th29_2")
    assert r.equal
    assert r.params["resolved_pairing"] == "A"


# --- deliberate failures ---

def test_flipped_summand_is_caught_at_its_exponent():
    r = verify("th47_corrupted", {"nu": 3}, 64)
    assert not r.equal
    assert r.first_diff[0] == 8
    assert r.first_diff[1] != r.first_diff[2]


def test_every_corrupted_twin_fails():
    for cid in list_ids():
        twin = cid + "_corrupted"
        r = verify(twin)
        assert not r.equal, twin
        e, lv, rv = r.first_diff
        if cid == "th47":
            assert e == 8
        else:
            assert e == r.window[1] - 1
            assert rv == lv + 1


def test_corrupted_twin_shares_defaults_with_its_base():
    base = lookup("th54")
    twin = lookup("th54_corrupted")
    assert twin.default_order == base.default_order
    assert twin.params == base.params


# --- error paths ---

def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify("not_a_check")


def test_unknown_parameter_name():
    with pytest.raises(BadParams):
        verify("th47", {"order": 3})


def test_out_of_range_parameter_value():
    with pytest.raises(BadParams):
        verify("th47", {"nu": 1})
    with pytest.raises(BadParams):
        verify("th67", {"G": 7})
    with pytest.raises(BadParams):
        verify("th13", {"f": "nope"})


def test_tiny_or_broken_order():
    with pytest.raises(BadParams):
        verify("jacobi2sq", {}, 4)
    with pytest.raises(BadParams):
        verify("jacobi2sq", {}, "many")


def test_corrupted_twin_keeps_base_validation():
    with pytest.raises(BadParams):
        verify("th47_corrupted", {"nu": 2})


# --- report serialization ---

def test_report_dict_shape_on_success():
    d = report_to_dict(verify("th54", {"nu": 2}, 64))
    assert d["id"] == "th54"
    assert d["params"] == {"nu": 2}
    assert d["order"] == 64
    assert d["window"] == [0, 64]
    assert d["equal"] is True
    assert d["first_diff"] is None


def test_report_dict_shape_on_failure():
    d = report_to_dict(verify("th47_corrupted", {"nu": 3}, 64))
    assert d["equal"] is False
    fd = d["first_diff"]
    assert fd["exp"] == 8
    assert fd["lhs"] == {"num": 1, "den": 1}
    assert fd["rhs"] == {"num": -1, "den": 1}


def test_report_dict_renders_rational_params():
    d = report_to_dict(verify("th15_2", {"z": F(1, 3)}, 64))
    assert d["params"]["z"] == {"num": 1, "den": 3}


# --- windows stay honest at arbitrary orders ---

@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["th47", "th9", "prop3", "cor25", "th44", "th54"]),
       st.integers(min_value=16, max_value=120))
def test_checks_hold_on_any_window(cid, order):
    r = verify(cid, {}, order)
    assert r.equal
    assert r.window[1] == order


@settings(max_examples=8, deadline=None)
@given(st.integers(min_value=16, max_value=120))
def test_generic_corruption_lands_at_window_top(order):
    r = verify("th44_corrupted", {}, order)
    assert not r.equal
    assert r.first_diff[0] == r.window[1] - 1

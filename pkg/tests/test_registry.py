import json

import pytest

from fppverify.registry import (UnknownSurface, abelianization_order, check_consistency,
                                check_descriptor_invariants, lookup, registry, registry_from_json,
                                registry_to_json)

ROWS = registry()


def test_ten_rows_split_seven_and_three():
    assert len(ROWS) == 10
    assert [d.table for d in ROWS].count(1) == 7


def test_lookup_last_row_of_first_table():
    d = lookup("(C2, p=2, ∅, d3D3)")
    assert d.id == "T1.7" and d.aut_type == "C3xC3"
    assert d.h1.invariant_factors == (14,)
    assert d.quotient_pi1 == ("C14", "S3", "C2", "C2")


def test_lookup_latex_and_id():
    assert lookup(r"$(\mathcal{C}_{18}, p=3, \{2\}, (dD)_3)$").id == "T2.2"
    assert lookup("T1.5").h1.order == 7


def test_lookup_c18_row_of_second_table():
    d = lookup("(C18, p=3, {2}, (dD)_3)")
    assert d.h1.invariant_factors == (6,) and d.quotient_pi1 == ("C6",)


def test_unknown_label():
    with pytest.raises(UnknownSurface):
        lookup("(C99, p=5, ∅, D_3)")


def test_every_row_is_consistent_and_sound():
    for d in ROWS:
        assert all(r.ok for r in check_consistency(d)), d.id
        assert check_descriptor_invariants(d) == [], d.id


def test_c3xc3_rows_list_four_subgroups():
    for d in ROWS:
        if d.aut_type == "C3xC3":
            assert len(d.subgroup_generators) == 4


def test_abelianizations():
    assert [abelianization_order(q) for q in ("1", "C14", "S3", "Q8", "C13")] == [1, 14, 2, 4, 13]


def test_json_roundtrip_is_exact():
    text = registry_to_json()
    assert registry_to_json(registry_from_json(text)) == text
    assert registry_from_json(text) == ROWS
    assert len(json.loads(text)) == 10


def test_corrupted_row_is_named():
    data = json.loads(registry_to_json())
    data[6]["order3_subgroups"][1]["quotient_pi1"] = "C7"
    bad = registry_from_json(json.dumps(data))[6]
    res = check_consistency(bad)
    assert [r.ok for r in res] == [True, False, True, True] and res[1].id == "T1.7"


def test_normalised_labels_are_unique():
    from fppverify.registry import normalize_label

    assert len({normalize_label(d.label) for d in ROWS}) == 10

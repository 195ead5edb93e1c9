from fractions import Fraction

import pytest

import wba


def test_catalog_lists_example1():
    assert "example1" in wba.catalog_names()


def test_example1_counit_and_flags():
    a = wba.catalog("example1")
    assert a.dim == 9
    assert wba.counit(a) == [1, -1, 0, 0, 1, 0, 0, 0, 1]
    ax = wba.axioms(a)
    assert ax["comonoidal"] and not ax["leftMonoidal"]
    assert wba.antipode(a) is None


def test_dual_round_trip_is_byte_identical():
    a = wba.catalog("crossed")
    assert a.dual().dual().to_json() == a.to_json()
    assert wba.load(a.to_json()) == a


def test_group_antipode_is_inverse():
    kind, s = wba.antipode(wba.catalog("group:Z3"))
    assert kind == "hopfAntipode"
    assert s == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


def test_bsz_antipode_has_fractions_type():
    kind, s = wba.antipode(wba.catalog("bsz-dual:2"))
    assert all(isinstance(x, Fraction) for row in s for x in row)


def test_validate_and_parse_errors():
    ok, laws = wba.catalog("example1").validate()
    assert ok and laws == []
    with pytest.raises(ValueError):
        wba.load("{")


def test_report_is_a_dict():
    r = wba.report(wba.catalog("bsz-dual:2"))
    assert r["weakHopf"] is True

"""Green relations, ideals, localization and the factorization witnesses."""

import pytest
from hypothesis import given

from cofinpl import (
    DefectMismatch,
    GreenRelation,
    NotGroupHClass,
    NotIdempotent,
    PHom,
    PLHomeo,
    conjugator,
    d_factorize,
    d_witness,
    factorize_same_defect,
    green_related,
    ideal_member,
    localize,
    parse_element,
    parse_map,
)
from conftest import elements


def E(s):
    return parse_element(s)


# -- verdicts -----------------------------------------------------------------


def test_r_same_domain():
    assert green_related("R", E("phom(aff(1,1);{0})"), E("phom(aff(2,0);{0})"))
    assert not green_related("R", E("phom(aff(1,1);{0})"), E("phom(aff(1,1);{1})"))


def test_l_same_image():
    # both have range-excluded {1}
    assert green_related("L", E("phom(aff(1,1);{0})"), E("phom(aff(2,2);{-1/2})"))
    assert not green_related("L", E("phom(aff(1,1);{0})"), E("phom(aff(1,0);{0})"))


def test_h_needs_both():
    a, b = E("phom(aff(1,0);{0})"), E("phom(aff(1,0);{5})")
    assert not green_related("H", a, b)
    assert green_related("D", a, b)
    assert green_related("J", a, b)


def test_enum_and_string_agree():
    a, b = E("phom(aff(1,1);{0})"), E("phom(aff(2,0);{0})")
    assert green_related(GreenRelation.R, a, b) == green_related("R", a, b)


@given(elements(), elements())
def test_j_equals_d(a, b):
    assert green_related("J", a, b) == green_related("D", a, b) == (a.defect == b.defect)


@given(elements(), elements())
def test_r_and_l_witness_biconditionals(a, b):
    r = a >> (a.inverse() >> b) == b and b >> (b.inverse() >> a) == a
    assert green_related("R", a, b) == r
    l_ = (b >> a.inverse()) >> a == b and (a >> b.inverse()) >> b == a
    assert green_related("L", a, b) == l_
    assert green_related("H", a, b) == (r and l_)


@given(elements(), elements())
def test_d_witness_connects(a, b):
    if a.defect != b.defect:
        with pytest.raises(DefectMismatch):
            d_witness(a, b)
        return
    w = d_witness(a, b)
    assert green_related("R", a, w)
    assert green_related("L", w, b)


# -- ideals ---------------------------------------------------------------------


def test_ideal_chain_position():
    a = E("phom(aff(2,0);{1,7})")
    assert ideal_member(0, a)
    assert ideal_member(2, a)
    assert not ideal_member(3, a)


def test_ideal_units_only_in_zeroth():
    u = E("phom(aff(2,3);{})")
    assert ideal_member(0, u)
    assert not ideal_member(1, u)


def test_ideal_negative_index():
    with pytest.raises(ValueError):
        ideal_member(-1, PHom.identity())


@given(elements(), elements())
def test_ideal_two_sided(a, x):
    n = a.defect
    assert ideal_member(n, a >> x)
    assert ideal_member(n, x >> a)


# -- localization -----------------------------------------------------------------


def test_localize_two_pieces():
    a = E("phom(pl(1;(0,0);2);{0})")
    parts = localize(a)
    assert parts == [E("phom(aff(1,0);{0})"), E("phom(pl(1;(0,0);2);{0})")]
    prod = parts[0] >> parts[1]
    assert prod == a


def test_localize_three_pieces():
    a = E("phom(pl(2;(0,0),(1,1);3);{0,1})")
    parts = localize(a)
    assert [p.extension for p in parts] == [
        parse_map("pl(2;(0,0);1)"),
        parse_map("pl(1;(0,0),(1,1);1)"),  # canonically the identity
        parse_map("pl(1;(1,1);3)"),
    ]
    assert all(p.excluded == a.excluded for p in parts)


def test_localize_idempotent_pieces_are_it():
    e = E("phom(aff(1,0);{0,1})")
    assert localize(e) == [e, e, e]


def test_localize_unit_is_trivial():
    u = E("phom(aff(2,3);{})")
    assert localize(u) == [u]


def test_localize_requires_group_h_class():
    with pytest.raises(NotGroupHClass):
        localize(E("phom(aff(1,1);{0})"))


# -- factorizations ----------------------------------------------------------------


def test_factorize_same_defect_example():
    a, b = E("phom(aff(1,0);{0})"), E("phom(aff(1,1);{5})")
    g, d = factorize_same_defect(a, b)
    assert g == E("phom(aff(1,5);{0})")
    assert d == E("phom(aff(1,-6);{6})")
    assert (g >> b) >> d == a


def test_factorize_through_self():
    a = E("phom(pl(1;(0,0);2);{3})")
    g, d = factorize_same_defect(a, a)
    assert (g >> a) >> d == a


def test_factorize_defect_zero():
    a, b = E("phom(aff(2,0);{})"), E("phom(aff(1,1);{})")
    g, d = factorize_same_defect(a, b)
    assert g == E("phom(aff(2,-1);{})")
    assert d == PHom.identity()
    assert (g >> b) >> d == a


def test_factorize_mismatch():
    with pytest.raises(DefectMismatch):
        factorize_same_defect(E("phom(aff(1,0);{0})"), E("phom(aff(1,0);{})"))


@given(elements(), elements())
def test_factorize_recomposes(a, b):
    if a.defect != b.defect:
        return
    g, d = factorize_same_defect(a, b)
    assert (g >> b) >> d == a
    assert g.defect == d.defect == a.defect


def test_conjugator_single_point():
    g = conjugator(E("phom(aff(1,0);{0})"), E("phom(aff(1,0);{1})"))
    assert g == PLHomeo.affine(1, 1)


def test_conjugator_two_points():
    g = conjugator(E("phom(aff(1,0);{0,1})"), E("phom(aff(1,0);{2,4})"))
    assert g == parse_map("pl(1;(0,2),(1,4);1)")


def test_conjugator_equal_idempotents():
    e = E("phom(aff(1,0);{0})")
    assert conjugator(e, e) == PLHomeo.identity()


def test_conjugator_conjugates_both_ways():
    i, e = E("phom(aff(1,0);{0,1})"), E("phom(aff(1,0);{2,4})")
    c = PHom(conjugator(i, e))
    assert (c >> e) >> c.inverse() == i
    assert (c.inverse() >> i) >> c == e


def test_conjugator_rejects_non_idempotent():
    with pytest.raises(NotIdempotent):
        conjugator(E("phom(aff(1,1);{0})"), E("phom(aff(1,0);{0})"))


def test_conjugator_rejects_mismatch():
    with pytest.raises(DefectMismatch):
        conjugator(E("phom(aff(1,0);{0})"), E("phom(aff(1,0);{})"))


def test_d_factorize_translation():
    g, d = d_factorize(E("phom(aff(1,0);{0})"), E("phom(aff(1,0);{5})"))
    assert (g, d) == (PLHomeo.affine(1, 5), PLHomeo.affine(1, -5))


def test_d_factorize_example():
    a, b = E("phom(aff(1,1);{0})"), E("phom(aff(1,0);{3})")
    g, d = d_factorize(a, b)
    assert (g, d) == (PLHomeo.affine(1, 3), PLHomeo.affine(1, -2))
    assert (PHom(g) >> b) >> PHom(d) == a


def test_d_factorize_self():
    a = E("phom(aff(1,1);{0})")
    g, d = d_factorize(a, a)
    assert g == PLHomeo.identity()
    assert d == PLHomeo.identity()


@given(elements(), elements())
def test_d_factorize_recomposes_with_units(a, b):
    if a.defect != b.defect:
        with pytest.raises(DefectMismatch):
            d_factorize(a, b)
        return
    g, d = d_factorize(a, b)
    assert (PHom(g) >> b) >> PHom(d) == a

"""Core piecewise-linear maps: evaluation, canonical form, group structure."""

from fractions import Fraction as F

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cofinpl import (
    EmptyInput,
    EndpointNotFixed,
    MonotonicityViolation,
    PLHomeo,
    SizeMismatch,
    order_isomorphism,
    parse_map,
    splice,
)
from conftest import pl_maps, rationals


def naive_eval(f, x):
    """Independent evaluation oracle: linear scan over explicit pieces."""
    if f.is_affine:
        return f.slope * x + f.intercept
    knots = f.knots
    b0, v0 = knots[0]
    if x <= b0:
        return v0 + f.left_slope * (x - b0)
    for (ba, va), (bb, vb) in zip(knots, knots[1:]):
        if x <= bb:
            return va + (vb - va) * (x - ba) / (bb - ba)
    bl, vl = knots[-1]
    return vl + f.right_slope * (x - bl)


def grid_around(*maps):
    pts = {F(0)}
    for f in maps:
        for b, v in f.knots:
            pts.add(b)
            pts.add(v)
    base = sorted(pts)
    out = set(base)
    for u, w in zip(base, base[1:]):
        out.add((u + w) / 2)
    out.update({base[0] - 2, base[0] - F(1, 3), base[-1] + F(1, 3), base[-1] + 2})
    return sorted(out)


# -- evaluation -------------------------------------------------------------


def test_eval_affine():
    f = PLHomeo.affine(2, 3)
    assert f(F(1, 2)) == 4


def test_eval_left_tail():
    f = parse_map("pl(1;(0,0);2)")
    assert f(-3) == -3


def test_eval_interpolates():
    f = parse_map("pl(1;(0,2),(1,4);1)")
    assert f(F(1, 2)) == 3


def test_eval_right_tail():
    f = parse_map("pl(1;(0,0);2)")
    assert f(5) == 10


@given(pl_maps(), rationals)
def test_eval_matches_naive_oracle(f, x):
    assert f(x) == naive_eval(f, x)


@given(pl_maps())
def test_eval_strictly_increasing_on_grid(f):
    g = grid_around(f)
    values = [f(x) for x in g]
    assert all(u < w for u, w in zip(values, values[1:]))


@given(pl_maps(), rationals)
def test_preimage_inverts_eval(f, x):
    assert f.preimage_point(f(x)) == x
    assert f(f.preimage_point(x)) == x


def test_eval_rejects_floats():
    with pytest.raises(TypeError):
        PLHomeo.identity()(0.5)


# -- construction and canonical form -----------------------------------------


def test_affine_rejects_zero_slope():
    with pytest.raises(MonotonicityViolation):
        PLHomeo.affine(0, 1)


def test_affine_rejects_negative_slope():
    with pytest.raises(MonotonicityViolation):
        PLHomeo.affine(-2, 0)


def test_from_knots_rejects_unsorted_abscissae():
    with pytest.raises(MonotonicityViolation):
        PLHomeo.from_knots(1, [(1, 1), (0, 2)], 1)


def test_from_knots_rejects_nonincreasing_values():
    with pytest.raises(MonotonicityViolation):
        PLHomeo.from_knots(1, [(0, 1), (1, 1)], 1)


def test_from_knots_rejects_zero_tail_slope():
    with pytest.raises(MonotonicityViolation):
        PLHomeo.from_knots(0, [(0, 0)], 1)
    with pytest.raises(MonotonicityViolation):
        PLHomeo.from_knots(1, [(0, 0)], 0)


def test_from_knots_needs_a_knot():
    with pytest.raises(EmptyInput):
        PLHomeo.from_knots(1, [], 1)


def test_canonical_drops_flat_knot():
    assert parse_map("pl(1;(0,0);1)") == PLHomeo.identity()


def test_canonical_collapses_collinear():
    assert parse_map("pl(2;(0,1),(1,3);2)") == PLHomeo.affine(2, 1)


def test_canonical_keeps_true_knot():
    f = parse_map("pl(1;(0,0);2)")
    assert not f.is_affine
    assert f.knots == ((F(0), F(0)),)


def test_distinct_affines_differ():
    assert PLHomeo.affine(1, 0) != PLHomeo.affine(1, 1)


@given(pl_maps())
def test_canonical_is_fixed_point(f):
    if f.is_affine:
        rebuilt = PLHomeo.affine(f.slope, f.intercept)
    else:
        rebuilt = PLHomeo.from_knots(f.left_slope, f.knots, f.right_slope)
    assert rebuilt == f


@given(pl_maps(), rationals)
def test_inserting_collinear_point_changes_nothing(f, x):
    if f.is_affine:
        knots = [(x, f(x)), (x + 1, f(x + 1))]
        assert PLHomeo.from_knots(f.slope, knots, f.slope) == f
    else:
        if any(b == x for b, _ in f.knots):
            return
        knots = sorted([*f.knots, (x, f(x))])
        assert PLHomeo.from_knots(f.left_slope, knots, f.right_slope) == f


# -- composition and inversion ------------------------------------------------


def test_compose_affine():
    assert PLHomeo.affine(1, 1).then(PLHomeo.affine(2, 0)) == PLHomeo.affine(2, 2)


def test_compose_doubles_right_slope():
    g = parse_map("pl(1;(0,0);2)")
    assert g.then(g) == parse_map("pl(1;(0,0);4)")


def test_compose_cancels_to_identity():
    assert PLHomeo.affine(2, 0).then(PLHomeo.affine(F(1, 2), 0)) == PLHomeo.identity()


def test_invert_affine():
    assert PLHomeo.affine(2, 3).inverse() == PLHomeo.affine(F(1, 2), F(-3, 2))


def test_invert_knotted():
    assert parse_map("pl(1;(0,0);2)").inverse() == parse_map("pl(1;(0,0);1/2)")


def test_invert_identity():
    assert PLHomeo.identity().inverse() == PLHomeo.identity()


@given(pl_maps(), pl_maps())
def test_compose_matches_pointwise_oracle(f, g):
    h = f.then(g)
    for x in grid_around(f, g, h):
        assert h(x) == g(f(x))


@given(pl_maps(), pl_maps(), pl_maps())
def test_compose_associative(f, g, h):
    assert f.then(g).then(h) == f.then(g.then(h))


@given(pl_maps())
def test_group_laws(f):
    one = PLHomeo.identity()
    assert one.then(f) == f
    assert f.then(one) == f
    assert f.then(f.inverse()) == one
    assert f.inverse().then(f) == one
    assert f.inverse().inverse() == f


@given(pl_maps(), pl_maps())
def test_inverse_antiautomorphism(f, g):
    assert f.then(g).inverse() == g.inverse().then(f.inverse())


def test_rshift_is_then():
    f, g = PLHomeo.affine(2, 0), PLHomeo.affine(1, 5)
    assert (f >> g) == f.then(g)


# -- order isomorphisms -------------------------------------------------------


def test_order_iso_single_pair_translates():
    assert order_isomorphism([0], [1]) == PLHomeo.affine(1, 1)


def test_order_iso_two_pairs():
    assert order_isomorphism([0, 1], [2, 4]) == parse_map("pl(1;(0,2),(1,4);1)")


def test_order_iso_fixed_points_identity():
    assert order_isomorphism([5], [5]) == PLHomeo.identity()


def test_order_iso_size_mismatch():
    with pytest.raises(SizeMismatch):
        order_isomorphism([0, 1], [2])


def test_order_iso_empty():
    with pytest.raises(EmptyInput):
        order_isomorphism([], [])


def test_order_iso_unsorted_rejected():
    with pytest.raises(MonotonicityViolation):
        order_isomorphism([1, 0], [2, 4])


@given(st.sets(rationals, min_size=1, max_size=5), st.data())
def test_order_iso_maps_points_and_translates_tails(src_set, data):
    src = sorted(src_set)
    tgt_set = data.draw(st.sets(rationals, min_size=len(src), max_size=len(src)))
    tgt = sorted(tgt_set)
    f = order_isomorphism(src, tgt)
    for s, t in zip(src, tgt):
        assert f(s) == t
    assert f(src[0] - 7) == tgt[0] - 7
    assert f(src[-1] + 7) == tgt[-1] + 7


# -- splices ------------------------------------------------------------------


def test_splice_bounded_interval():
    g = parse_map("pl(2;(0,0),(1/2,3/4),(1,1);3)")
    assert splice(g, 0, 1) == parse_map("pl(1;(0,0),(1/2,3/4),(1,1);1)")


def test_splice_right_ray():
    g = parse_map("pl(2;(0,0),(1/2,3/4),(1,1);3)")
    assert splice(g, 1, None) == parse_map("pl(1;(1,1);3)")


def test_splice_whole_line_is_identity_on_map():
    g = parse_map("pl(1;(0,0);2)")
    assert splice(g, None, None) == g


def test_splice_identity_any_interval():
    assert splice(PLHomeo.identity(), -3, 8) == PLHomeo.identity()


def test_splice_unfixed_endpoint():
    with pytest.raises(EndpointNotFixed):
        splice(PLHomeo.affine(1, 1), 0, None)


def test_splice_empty_interval():
    with pytest.raises(ValueError):
        splice(PLHomeo.identity(), 3, 3)


@given(pl_maps(), rationals, st.integers(min_value=1, max_value=6))
def test_splice_agrees_inside_identity_outside(f, lo, width):
    # force fixed endpoints by conjugating: h fixes lo and hi by construction
    hi = lo + width
    pinned = sorted({(lo, lo), (hi, hi), *((b, v) for b, v in f.knots if lo < b < hi and lo < v < hi)})
    h = PLHomeo.from_knots(1, pinned, 1)
    s = splice(h, lo, hi)
    for x in grid_around(h):
        if lo <= x <= hi:
            assert s(x) == h(x)
        else:
            assert s(x) == x

"""Shared strategies: random maps and elements with small exact coefficients."""

from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from cofinpl import CofinSet, PHom, PLHomeo

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=4)
slopes = st.sampled_from(
    [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]
)


@st.composite
def pl_maps(draw, max_knots=3):
    m = draw(st.integers(min_value=0, max_value=max_knots))
    if m == 0:
        return PLHomeo.affine(draw(slopes), draw(rationals))
    xs = sorted(draw(st.sets(rationals, min_size=m, max_size=m)))
    tail_and_segments = [draw(slopes) for _ in range(m + 1)]
    value = draw(rationals)
    knots = [(xs[0], value)]
    for i in range(1, m):
        value = value + tail_and_segments[i] * (xs[i] - xs[i - 1])
        knots.append((xs[i], value))
    return PLHomeo.from_knots(tail_and_segments[0], knots, tail_and_segments[-1])


@st.composite
def point_sets(draw, max_size=4):
    n = draw(st.integers(min_value=0, max_value=max_size))
    return CofinSet(draw(st.sets(rationals, min_size=n, max_size=n)))


@st.composite
def elements(draw, max_defect=4, max_knots=3):
    return PHom(draw(pl_maps(max_knots=max_knots)), draw(point_sets(max_size=max_defect)))


@st.composite
def idempotents(draw, max_defect=4):
    return PHom(PLHomeo.identity(), draw(point_sets(max_size=max_defect)))

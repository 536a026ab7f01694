"""Strictly increasing piecewise-linear bijections of the rational line.

These maps form the group of units of the partial-map monoid built on top of
them in :mod:`cofinpl.phom`.  Everything is exact: coordinates and slopes are
``fractions.Fraction`` values, composition and inversion are closed, and every
map is kept in a canonical minimal-knot form so that ``==`` decides pointwise
equality of maps.  No floats, no tolerances.
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Iterable

from .errors import (
    EmptyInput,
    EndpointNotFixed,
    MonotonicityViolation,
    SizeMismatch,
)

Rat = Fraction


def as_rational(value: Rat | int) -> Rat:
    """Coerce ``value`` to an exact rational.

    Only ``Fraction`` and ``int`` are accepted.  Floats are rejected outright:
    silently converting one would smuggle a binary approximation into
    arithmetic whose whole point is exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class PLHomeo:
    """An increasing piecewise-linear bijection of the line.

    A map with no knots is stored as ``(slope, intercept)``.  A map with
    knots stores the strictly increasing knot list ``(b_i, v_i)`` together
    with the slopes of the two unbounded tails; between consecutive knots the
    map interpolates affinely.  Construction canonicalizes by dropping every
    knot whose incident slopes agree, so structurally equal means pointwise
    equal and vice versa.

    Instances are immutable.  Use :meth:`affine`, :meth:`from_knots` or
    :meth:`identity` to build one; composition is ``f.then(g)`` (apply ``f``
    first), also spelled ``f >> g``.
    """

    __slots__ = ("_left", "_right", "_knots", "_intercept", "_xs", "_vs", "_seg")

    def __init__(self, *args, **kwargs):
        raise TypeError("use PLHomeo.affine, PLHomeo.from_knots or PLHomeo.identity")

    @classmethod
    def _raw(
        cls,
        left: Rat,
        knots: tuple[tuple[Rat, Rat], ...],
        right: Rat,
        intercept: Rat | None,
    ) -> "PLHomeo":
        self = object.__new__(cls)
        self._left = left
        self._right = right
        self._knots = knots
        self._intercept = intercept
        self._xs = tuple(b for b, _ in knots)
        self._vs = tuple(v for _, v in knots)
        self._seg = tuple(
            (v1 - v0) / (b1 - b0)
            for (b0, v0), (b1, v1) in zip(knots, knots[1:])
        )
        return self

    @classmethod
    def affine(cls, slope: Rat | int, intercept: Rat | int = 0) -> "PLHomeo":
        """The map x -> slope*x + intercept; slope must be positive."""
        slope = as_rational(slope)
        intercept = as_rational(intercept)
        if slope <= 0:
            raise MonotonicityViolation(f"slope {slope} is not positive")
        return cls._raw(slope, (), slope, intercept)

    @classmethod
    def identity(cls) -> "PLHomeo":
        return cls.affine(1, 0)

    @classmethod
    def from_knots(
        cls,
        left_slope: Rat | int,
        knots: Iterable[tuple[Rat | int, Rat | int]],
        right_slope: Rat | int,
    ) -> "PLHomeo":
        """Build the map through ``knots`` with the given tail slopes.

        Knots must be strictly increasing in both coordinates and at least
        one knot is required (a knot-free map carries no anchor; use
        :meth:`affine`).  The result is canonical: any knot whose incident
        slopes coincide is removed, and if none survive the map collapses to
        its affine form.
        """
        left = as_rational(left_slope)
        right = as_rational(right_slope)
        pts = tuple((as_rational(b), as_rational(v)) for b, v in knots)
        if not pts:
            raise EmptyInput("at least one knot is required")
        if left <= 0:
            raise MonotonicityViolation(f"left slope {left} is not positive")
        if right <= 0:
            raise MonotonicityViolation(f"right slope {right} is not positive")
        for (b0, v0), (b1, v1) in zip(pts, pts[1:]):
            if b0 >= b1:
                raise MonotonicityViolation(f"knot abscissae not increasing: {b0} >= {b1}")
            if v0 >= v1:
                raise MonotonicityViolation(f"knot values not increasing: {v0} >= {v1}")
        # slopes[i] is the slope just left of knot i; slopes[i+1] just right.
        slopes = [left]
        slopes.extend((v1 - v0) / (b1 - b0) for (b0, v0), (b1, v1) in zip(pts, pts[1:]))
        slopes.append(right)
        kept = tuple(pts[i] for i in range(len(pts)) if slopes[i] != slopes[i + 1])
        if not kept:
            b0, v0 = pts[0]
            return cls._raw(left, (), left, v0 - left * b0)
        return cls._raw(left, kept, right, None)

    # -- basic shape -------------------------------------------------------

    @property
    def is_affine(self) -> bool:
        return not self._knots

    @property
    def is_identity(self) -> bool:
        return self._intercept == 0 and self._left == 1 and not self._knots

    @property
    def knots(self) -> tuple[tuple[Rat, Rat], ...]:
        return self._knots

    @property
    def left_slope(self) -> Rat:
        return self._left

    @property
    def right_slope(self) -> Rat:
        return self._right

    @property
    def slope(self) -> Rat:
        """Slope of a knot-free map."""
        if self._knots:
            raise ValueError("map has knots; no single slope")
        return self._left

    @property
    def intercept(self) -> Rat:
        if self._knots:
            raise ValueError("map has knots; no single intercept")
        return self._intercept

    # -- evaluation --------------------------------------------------------

    def __call__(self, x: Rat | int) -> Rat:
        x = as_rational(x)
        if not self._knots:
            return self._left * x + self._intercept
        i = bisect.bisect_left(self._xs, x)
        if i == len(self._xs):
            b, v = self._knots[-1]
            return v + self._right * (x - b)
        if x == self._xs[i]:
            return self._vs[i]
        if i == 0:
            b, v = self._knots[0]
            return v + self._left * (x - b)
        b, v = self._knots[i - 1]
        return v + self._seg[i - 1] * (x - b)

    def preimage_point(self, y: Rat | int) -> Rat:
        """The unique x with self(x) == y."""
        y = as_rational(y)
        if not self._knots:
            return (y - self._intercept) / self._left
        j = bisect.bisect_left(self._vs, y)
        if j == len(self._vs):
            b, v = self._knots[-1]
            return b + (y - v) / self._right
        if y == self._vs[j]:
            return self._xs[j]
        if j == 0:
            b, v = self._knots[0]
            return b + (y - v) / self._left
        b, v = self._knots[j - 1]
        return b + (y - v) / self._seg[j - 1]

    # -- group structure ---------------------------------------------------

    def then(self, other: "PLHomeo") -> "PLHomeo":
        """Composite applying ``self`` first, then ``other``.

        Breakpoints of the composite can only sit at knots of ``self`` or at
        preimages under ``self`` of knots of ``other``; evaluating the
        composite there and multiplying tail slopes determines it, and
        canonical construction discards the spurious candidates.
        """
        if not isinstance(other, PLHomeo):
            raise TypeError(f"cannot compose with {type(other).__name__}")
        if not self._knots and not other._knots:
            return PLHomeo.affine(
                self._left * other._left,
                other._left * self._intercept + other._intercept,
            )
        cuts = set(self._xs)
        cuts.update(self.preimage_point(c) for c in other._xs)
        pts = sorted(cuts)
        return PLHomeo.from_knots(
            self._left * other._left,
            [(x, other(self(x))) for x in pts],
            self._right * other._right,
        )

    def __rshift__(self, other: "PLHomeo") -> "PLHomeo":
        return self.then(other)

    def inverse(self) -> "PLHomeo":
        """The inverse bijection; knots swap coordinates, slopes invert."""
        if not self._knots:
            return PLHomeo.affine(1 / self._left, -self._intercept / self._left)
        return PLHomeo.from_knots(
            1 / self._left,
            [(v, b) for b, v in self._knots],
            1 / self._right,
        )

    # -- identity, hashing, printing ---------------------------------------

    def _key(self):
        return (self._left, self._right, self._knots, self._intercept)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLHomeo):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        if not self._knots:
            return f"aff({self._left},{self._intercept})"
        inner = ",".join(f"({b},{v})" for b, v in self._knots)
        return f"pl({self._left};{inner};{self._right})"

    __repr__ = __str__


def order_isomorphism(
    source: Iterable[Rat | int], target: Iterable[Rat | int]
) -> PLHomeo:
    """The canonical increasing map sending the i-th source point to the
    i-th target point.

    Outside the hull it translates (slope 1, glued at the extreme points);
    inside it interpolates affinely between consecutive pairs.  Both point
    sequences must be strictly increasing and of equal nonzero length.
    """
    src = [as_rational(x) for x in source]
    tgt = [as_rational(y) for y in target]
    if len(src) != len(tgt):
        raise SizeMismatch(f"{len(src)} source points vs {len(tgt)} target points")
    if not src:
        raise EmptyInput("order isomorphism needs at least one point pair")
    return PLHomeo.from_knots(1, list(zip(src, tgt)), 1)


def splice(
    f: PLHomeo,
    lo: Rat | int | None,
    hi: Rat | int | None,
) -> PLHomeo:
    """Restrict ``f`` to the interval (lo, hi) and extend by the identity.

    Finite endpoints must be fixed points of ``f``; otherwise the patched map
    would jump.  ``None`` means the interval is unbounded on that side, where
    the tail of ``f`` is kept instead of the identity.  Splicing over the
    whole line returns ``f`` itself.
    """
    if lo is not None:
        lo = as_rational(lo)
        if f(lo) != lo:
            raise EndpointNotFixed(f"{lo} is not fixed: maps to {f(lo)}")
    if hi is not None:
        hi = as_rational(hi)
        if f(hi) != hi:
            raise EndpointNotFixed(f"{hi} is not fixed: maps to {f(hi)}")
    if lo is None and hi is None:
        return f
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError(f"empty interval ({lo},{hi})")
    pts: list[tuple[Rat, Rat]] = []
    if lo is not None:
        pts.append((lo, lo))
    pts.extend(
        (b, v)
        for b, v in f.knots
        if (lo is None or b > lo) and (hi is None or b < hi)
    )
    if hi is not None:
        pts.append((hi, hi))
    left = f.left_slope if lo is None else Fraction(1)
    right = f.right_slope if hi is None else Fraction(1)
    return PLHomeo.from_knots(left, pts, right)

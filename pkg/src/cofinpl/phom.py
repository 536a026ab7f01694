"""Partial bijections of the line defined everywhere except finitely many
rational points.

An element is a global increasing piecewise-linear bijection (its
*extension*) together with a finite set of excluded rationals; the partial
map is the restriction of the extension to the complement.  Composition
excludes a point when either factor is undefined along the way, inversion
pushes the excluded set forward, and the idempotents are exactly the
restrictions of the identity.  Together these form an inverse monoid, and
everything downstream (Green relations, congruences, pair encodings) is
built on this class.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DuplicatePoint, NotIdempotent
from .plcore import PLHomeo, Rat, as_rational


class CofinSet:
    """A finite strictly increasing tuple of rationals.

    Represents the set of points missing from a co-finite domain.  Listing
    the same point twice is an error rather than a silent dedup: duplicated
    excluded points in input text are always a typo.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Rat | int] = ()):
        pts = sorted(as_rational(p) for p in points)
        for u, w in zip(pts, pts[1:]):
            if u == w:
                raise DuplicatePoint(f"point {u} listed twice")
        self._points = tuple(pts)

    @property
    def points(self) -> tuple[Rat, ...]:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Rat]:
        return iter(self._points)

    def __contains__(self, x) -> bool:
        return as_rational(x) in self._points

    def __getitem__(self, i: int) -> Rat:
        return self._points[i]

    def __or__(self, other: "CofinSet") -> "CofinSet":
        if not isinstance(other, CofinSet):
            return NotImplemented
        return CofinSet(set(self._points) | set(other._points))

    def __le__(self, other: "CofinSet") -> bool:
        if not isinstance(other, CofinSet):
            return NotImplemented
        return set(self._points) <= set(other._points)

    def image(self, f: PLHomeo) -> "CofinSet":
        """Pointwise image under an increasing bijection."""
        return CofinSet(f(p) for p in self._points)

    def preimage(self, f: PLHomeo) -> "CofinSet":
        """Pointwise preimage under an increasing bijection."""
        return CofinSet(f.preimage_point(p) for p in self._points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CofinSet):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self._points) + "}"

    __repr__ = __str__


class PHom:
    """A monotone partial bijection with co-finite domain and image.

    ``PHom(f, F)`` is the map acting as the extension ``f`` on every rational
    except the points of ``F``, where it is undefined.  Applying it at an
    excluded point returns ``None``; that is a value of the calculus, not an
    error.  ``a.then(b)`` (or ``a >> b``) applies ``a`` first.  Equality,
    like everywhere in this package, is exact structural equality of
    canonical data.
    """

    __slots__ = ("_ext", "_excluded", "_range")

    def __init__(self, extension: PLHomeo, excluded: CofinSet | Iterable[Rat | int] = ()):
        if not isinstance(extension, PLHomeo):
            raise TypeError(f"extension must be a PLHomeo, got {type(extension).__name__}")
        self._ext = extension
        self._excluded = excluded if isinstance(excluded, CofinSet) else CofinSet(excluded)
        self._range: CofinSet | None = None

    @classmethod
    def identity(cls) -> "PHom":
        return cls(PLHomeo.identity())

    # -- data --------------------------------------------------------------

    @property
    def extension(self) -> PLHomeo:
        return self._ext

    @property
    def excluded(self) -> CofinSet:
        """Points missing from the domain."""
        return self._excluded

    @property
    def range_excluded(self) -> CofinSet:
        """Points missing from the image: the excluded set pushed forward.

        Derived, never stored independently, so domain and range data cannot
        drift apart.
        """
        if self._range is None:
            self._range = self._excluded.image(self._ext)
        return self._range

    @property
    def defect(self) -> int:
        """Number of excluded points; invariant under inversion."""
        return len(self._excluded)

    @property
    def is_idempotent(self) -> bool:
        """True when the element is a restriction of the identity."""
        return self._ext.is_identity

    # -- the partial map itself ---------------------------------------------

    def __call__(self, x: Rat | int) -> Rat | None:
        x = as_rational(x)
        if x in self._excluded:
            return None
        return self._ext(x)

    # -- inverse monoid structure -------------------------------------------

    def then(self, other: "PHom") -> "PHom":
        """Composite applying ``self`` first.

        Defined at x iff ``self`` is defined at x and ``other`` is defined at
        the intermediate value, so the excluded set unions ours with the
        pullback of theirs.
        """
        if not isinstance(other, PHom):
            raise TypeError(f"cannot compose with {type(other).__name__}")
        return PHom(
            self._ext.then(other._ext),
            self._excluded | other._excluded.preimage(self._ext),
        )

    def __rshift__(self, other: "PHom") -> "PHom":
        return self.then(other)

    def inverse(self) -> "PHom":
        """The inverse partial bijection; excluded points move to the range side."""
        return PHom(self._ext.inverse(), self.range_excluded)

    # -- identity, hashing, printing ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PHom):
            return NotImplemented
        return self._ext == other._ext and self._excluded == other._excluded

    def __hash__(self) -> int:
        return hash((self._ext, self._excluded))

    def __str__(self) -> str:
        return f"phom({self._ext};{self._excluded})"

    __repr__ = __str__


def natural_leq(a: PHom, b: PHom) -> bool:
    """The natural partial order: ``a`` is a restriction of ``b``.

    Holds iff the extensions coincide and ``a`` excludes at least the points
    ``b`` does.  Equivalently a = e.b for the idempotent e sharing ``a``'s
    domain, and a = b.e' for the idempotent e' sharing ``a``'s image; both
    witnesses are what the test suites recompose.
    """
    return a.extension == b.extension and b.excluded <= a.excluded


def to_semilattice(e: PHom) -> CofinSet:
    """Excluded set of an idempotent; the direction of the band isomorphism
    onto finite sets under union."""
    if not e.is_idempotent:
        raise NotIdempotent(f"extension is {e.extension}, not the identity")
    return e.excluded


def from_semilattice(points: CofinSet | Iterable[Rat | int]) -> PHom:
    """Idempotent with the given excluded set; inverse of :func:`to_semilattice`."""
    return PHom(PLHomeo.identity(), points)

"""The minimum group congruence and the two unit/idempotent pair encodings.

Identifying two partial bijections whenever they agree on a common co-finite
restriction is a congruence, the quotient is the group of increasing
piecewise-linear bijections, and the class of an element is determined by
its extension alone.  An element is therefore faithfully encoded as a pair
(unit, finite set), in two flavours: the set taken on the range side, with
units acting on sets by pushforward, or on the domain side, with units
acting by pullback.  Multiplying pairs componentwise with the matching
action reproduces composition exactly, which is what the semidirect suite
checks case by case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotIdempotent
from .phom import CofinSet, PHom, from_semilattice
from .plcore import PLHomeo


def unit_extension(a: PHom) -> PLHomeo:
    """The unit representing ``a``'s class modulo the minimum group
    congruence: its extension.  It is the greatest element above ``a`` in
    the natural partial order."""
    return a.extension


def group_congruent(a: PHom, b: PHom) -> bool:
    """True iff ``a`` and ``b`` agree after some co-finite restriction,
    i.e. iff their extensions are equal."""
    return a.extension == b.extension


def congruence_witness(a: PHom, b: PHom) -> PHom | None:
    """An idempotent e with e.a = e.b when the elements are congruent.

    Restricting both to the complement of the union of their excluded sets
    equalizes them; returns None when the elements are not congruent.
    """
    if not group_congruent(a, b):
        return None
    return from_semilattice(a.excluded | b.excluded)


def quotient_is_homomorphic(a: PHom, b: PHom) -> bool:
    """Check that taking extensions respects one concrete product."""
    return a.then(b).extension == a.extension.then(b.extension)


def push_idempotent(g: PLHomeo, e: PHom) -> PHom:
    """Conjugate an idempotent by a unit: g^{-1}.e.g.

    Moves the excluded set forward through ``g``.  As a function of ``g``
    this is an action on the right: pushing by g then by h equals pushing by
    g.then(h).
    """
    if not e.is_idempotent:
        raise NotIdempotent(f"extension is {e.extension}, not the identity")
    return from_semilattice(e.excluded.image(g))


def pull_idempotent(t: PLHomeo, e: PHom) -> PHom:
    """Conjugate an idempotent by a unit the other way: t.e.t^{-1}.

    Moves the excluded set backward through ``t`` (preimage).  As a function
    of ``t`` this is an action on the left: pulling by u after pulling by v
    equals pulling by u.then(v).  Inverse to :func:`push_idempotent` with
    the same unit.
    """
    if not e.is_idempotent:
        raise NotIdempotent(f"extension is {e.extension}, not the identity")
    return from_semilattice(e.excluded.preimage(t))


@dataclass(frozen=True)
class GSPair:
    """A (unit, finite set) pair; the set lives on the side the codec says.

    :func:`to_semidirect` puts the excluded set on the range side,
    :func:`to_domain_pair` on the domain side.  The pair prints as
    ``pair(<map>;{<points>})``.
    """

    unit: PLHomeo
    lattice: CofinSet

    def __str__(self) -> str:
        return f"pair({self.unit};{self.lattice})"

    __repr__ = __str__


def to_semidirect(a: PHom) -> GSPair:
    """Encode as (extension, range-excluded set)."""
    return GSPair(a.extension, a.range_excluded)


def from_semidirect(p: GSPair) -> PHom:
    """Decode a range-side pair: exclude the preimage of the set."""
    return PHom(p.unit, p.lattice.preimage(p.unit))


def semidirect_mul(p: GSPair, q: GSPair) -> GSPair:
    """Product of range-side pairs.

    Units compose; the set part pushes ``p``'s set through ``q``'s unit and
    unions with ``q``'s set.  Transporting elements through
    :func:`to_semidirect` turns composition into exactly this product.
    """
    return GSPair(
        p.unit.then(q.unit),
        p.lattice.image(q.unit) | q.lattice,
    )


def to_domain_pair(a: PHom) -> GSPair:
    """Encode as (extension, excluded set on the domain side)."""
    return GSPair(a.extension, a.excluded)


def from_domain_pair(p: GSPair) -> PHom:
    """Decode a domain-side pair: the set is the excluded set itself."""
    return PHom(p.unit, p.lattice)


def domain_pair_mul(p: GSPair, q: GSPair) -> GSPair:
    """Product of domain-side pairs.

    Units compose; the set part unions ``p``'s set with the pullback of
    ``q``'s set through ``p``'s unit, mirroring where a composite partial
    map is undefined.
    """
    return GSPair(
        p.unit.then(q.unit),
        p.lattice | q.lattice.preimage(p.unit),
    )


def domain_to_range_pair(p: GSPair) -> GSPair:
    """Convert a domain-side pair to the range-side encoding of the same
    element by pushing the set through the unit."""
    return GSPair(p.unit, p.lattice.image(p.unit))

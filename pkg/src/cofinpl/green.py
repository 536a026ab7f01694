"""Green relations, the ideal chain, and constructive factorizations.

On co-finite partial bijections the classical relations collapse to finite
data: R compares domains, L compares images, H both, and D = J compare
nothing but the defect.  Every positive answer here is backed by an element
that exhibits it, and the factorization functions return those witnesses so
callers can recompose and check them exactly.
"""

from __future__ import annotations

from enum import Enum

from .errors import DefectMismatch, NotGroupHClass, NotIdempotent
from .phom import PHom
from .plcore import PLHomeo, order_isomorphism, splice


class GreenRelation(Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"
    J = "J"


def green_related(rel: GreenRelation | str, a: PHom, b: PHom) -> bool:
    """Decide whether ``a`` and ``b`` are related under ``rel``.

    R iff equal excluded sets, L iff equal range-excluded sets, H iff both,
    and D and J both iff equal defect.
    """
    if isinstance(rel, str):
        rel = GreenRelation[rel]
    if rel is GreenRelation.R:
        return a.excluded == b.excluded
    if rel is GreenRelation.L:
        return a.range_excluded == b.range_excluded
    if rel is GreenRelation.H:
        return a.excluded == b.excluded and a.range_excluded == b.range_excluded
    return a.defect == b.defect


def ideal_member(n: int, a: PHom) -> bool:
    """Membership in the n-th two-sided ideal: defect at least ``n``.

    The ideals form the strictly descending chain n = 0, 1, 2, ... and are
    exactly the nonempty two-sided ideals of the monoid.
    """
    if n < 0:
        raise ValueError(f"ideal index must be nonnegative, got {n}")
    return a.defect >= n


def d_witness(a: PHom, b: PHom) -> PHom:
    """An element w with a R w and w L b, proving a D b.

    Takes ``a``'s domain and ``b``'s image: the order isomorphism from
    ``a``'s excluded set onto ``b``'s range-excluded set, restricted to
    ``a``'s domain.  Defect zero degenerates to the identity element.
    """
    if a.defect != b.defect:
        raise DefectMismatch(f"defect {a.defect} vs {b.defect}")
    if a.defect == 0:
        return PHom.identity()
    return PHom(
        order_isomorphism(a.excluded, b.range_excluded),
        a.excluded,
    )


def localize(a: PHom) -> list[PHom]:
    """Split an element of a group H-class into commuting interval pieces.

    Requires dom a = ran a, i.e. the extension permutes the excluded set
    (here: fixes it pointwise, since it is increasing).  The excluded points
    cut the line into defect+1 open intervals; piece k acts like ``a`` on the
    k-th interval and like the identity elsewhere.  The pieces commute
    pairwise and their product in any order is ``a``; an idempotent splits
    into defect+1 copies of itself.
    """
    if a.excluded != a.excluded.image(a.extension):
        raise NotGroupHClass(
            f"excluded set {a.excluded} is not preserved by the extension"
        )
    cuts = [None, *a.excluded, None]
    return [
        PHom(splice(a.extension, lo, hi), a.excluded)
        for lo, hi in zip(cuts, cuts[1:])
    ]


def factorize_same_defect(a: PHom, b: PHom) -> tuple[PHom, PHom]:
    """Factor ``a`` through any ``b`` of equal defect: a = gamma.b.delta.

    gamma carries dom a onto dom b by the order isomorphism of excluded
    sets; delta is then forced to be b^{-1}.gamma^{-1}.a.  Both factors have
    the same defect as ``a`` and ``b``.  With defect zero this degenerates
    to gamma = a.b^{-1}, delta = identity.
    """
    if a.defect != b.defect:
        raise DefectMismatch(f"defect {a.defect} vs {b.defect}")
    if a.defect == 0:
        return a.then(b.inverse()), PHom.identity()
    gamma = PHom(
        order_isomorphism(a.excluded, b.excluded),
        a.excluded,
    )
    delta = b.inverse().then(gamma.inverse()).then(a)
    return gamma, delta


def conjugator(i: PHom, e: PHom) -> PLHomeo:
    """A unit g with g^{-1}.i.g = e, for idempotents of equal defect.

    The order isomorphism from ``i``'s excluded set onto ``e``'s; conjugation
    by it carries the one restriction of the identity onto the other.  Equal
    defect zero yields the identity unit.
    """
    if not i.is_idempotent:
        raise NotIdempotent(f"first argument has extension {i.extension}")
    if not e.is_idempotent:
        raise NotIdempotent(f"second argument has extension {e.extension}")
    if i.defect != e.defect:
        raise DefectMismatch(f"defect {i.defect} vs {e.defect}")
    if i.defect == 0:
        return PLHomeo.identity()
    return order_isomorphism(i.excluded, e.excluded)


def d_factorize(a: PHom, b: PHom) -> tuple[PLHomeo, PLHomeo]:
    """Units (g, d) with a = g.b.d, for ``a``, ``b`` of equal defect.

    Witnesses that D-related elements generate the same two-sided ideal
    using only invertible outer factors: g conjugates the domain idempotent
    of ``b``'s side into position and d is forced from it.
    """
    if a.defect != b.defect:
        raise DefectMismatch(f"defect {a.defect} vs {b.defect}")
    g = conjugator(a.then(a.inverse()), b.then(b.inverse()))
    d = b.extension.inverse().then(g.inverse()).then(a.extension)
    return g, d

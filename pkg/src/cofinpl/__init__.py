"""Exact arithmetic for the inverse monoid of increasing piecewise-linear
partial bijections of the rational line with co-finite domain and image.

The core objects are :class:`~cofinpl.plcore.PLHomeo` (the group of units)
and :class:`~cofinpl.phom.PHom` (a unit restricted away from finitely many
points).  On top of them the package decides Green's relations and the
minimum group congruence, constructs every witness it claims (conjugators,
factorizations, localizations, pair encodings), parses and prints a small
canonical grammar, and ships seeded property suites that re-verify the
algebra by exact equality.  A FastAPI service exposes each operation and the
``cofinpl`` command line is a thin client of it.
"""

from .congruence import (
    GSPair,
    congruence_witness,
    domain_pair_mul,
    domain_to_range_pair,
    from_domain_pair,
    from_semidirect,
    group_congruent,
    pull_idempotent,
    push_idempotent,
    quotient_is_homomorphic,
    semidirect_mul,
    to_domain_pair,
    to_semidirect,
    unit_extension,
)
from .errors import (
    DefectMismatch,
    DomainError,
    DuplicatePoint,
    EmptyInput,
    EndpointNotFixed,
    MonotonicityViolation,
    NotGroupHClass,
    NotIdempotent,
    ParseError,
    SizeMismatch,
    UnknownSuite,
)
from .green import (
    GreenRelation,
    conjugator,
    d_factorize,
    d_witness,
    factorize_same_defect,
    green_related,
    ideal_member,
    localize,
)
from .phom import CofinSet, PHom, from_semilattice, natural_leq, to_semilattice
from .plcore import PLHomeo, Rat, as_rational, order_isomorphism, splice
from .suites import SuiteConfig, SuiteReport, run_all, run_suite, suite_names
from .text import (
    format_element,
    format_map,
    format_pair,
    format_rational,
    parse_element,
    parse_map,
    parse_pair,
    parse_rational,
)

__version__ = "0.1.0"

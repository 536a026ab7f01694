"""Seeded randomized property suites with exact checks and shrinking.

Every suite draws its cases from a deterministic per-case generator
(``random.Random(f"{seed}:{index}")``, so case i is reproducible in
isolation), evaluates a conjunction of exact structural equalities, and on
failure greedily shrinks the inputs while they still fail.  Reports are
plain text and byte-identical for identical configurations.  A passing run
is the acceptance evidence for the algebraic laws the package claims.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .congruence import (
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
from .errors import DomainError, UnknownSuite
from .green import d_witness, factorize_same_defect, conjugator, d_factorize, green_related, ideal_member, localize
from .phom import CofinSet, PHom, from_semilattice, natural_leq, to_semilattice
from .plcore import PLHomeo, Rat

SLOPES = (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
_GAP_CUTS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4))


@dataclass(frozen=True)
class SuiteConfig:
    cases: int = 500
    seed: int = 0
    max_defect: int = 4
    max_knots: int = 3
    coeff_bound: int = 12

    def __post_init__(self):
        if self.cases < 1:
            raise ValueError(f"cases must be positive, got {self.cases}")
        if self.max_defect < 1:
            raise ValueError(f"max-defect must be positive, got {self.max_defect}")
        if self.max_knots < 0:
            raise ValueError(f"max-knots must be nonnegative, got {self.max_knots}")
        if self.coeff_bound < 1:
            raise ValueError(f"coeff-bound must be positive, got {self.coeff_bound}")


def case_rng(seed: int, index: int) -> random.Random:
    """Independent generator for one case; splitting by counter keeps the
    stream identical whether cases run serially or not."""
    return random.Random(f"{seed}:{index}")


def random_rational(rng: random.Random, bound: int) -> Rat:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_points(rng: random.Random, count: int, bound: int) -> list[Rat]:
    picked: set[Rat] = set()
    attempts = 0
    while len(picked) < count:
        picked.add(random_rational(rng, bound))
        attempts += 1
        if attempts > 1000 + 100 * count:
            raise ValueError(f"cannot draw {count} distinct points within bound {bound}")
    return sorted(picked)


def random_unit(rng: random.Random, cfg: SuiteConfig) -> PLHomeo:
    """Random increasing piecewise-linear bijection within the bounds."""
    m = rng.randint(0, cfg.max_knots)
    if m == 0:
        return PLHomeo.affine(rng.choice(SLOPES), random_rational(rng, cfg.coeff_bound))
    xs = random_points(rng, m, cfg.coeff_bound)
    slopes = [rng.choice(SLOPES) for _ in range(m + 1)]
    value = random_rational(rng, cfg.coeff_bound)
    knots = [(xs[0], value)]
    for i in range(1, m):
        value = value + slopes[i] * (xs[i] - xs[i - 1])
        knots.append((xs[i], value))
    return PLHomeo.from_knots(slopes[0], knots, slopes[m])


def random_element(rng: random.Random, cfg: SuiteConfig) -> PHom:
    n = rng.randint(0, cfg.max_defect)
    return PHom(random_unit(rng, cfg), random_points(rng, n, cfg.coeff_bound))


def random_idempotent(rng: random.Random, cfg: SuiteConfig) -> PHom:
    n = rng.randint(0, cfg.max_defect)
    return from_semilattice(random_points(rng, n, cfg.coeff_bound))


def random_fixing(rng: random.Random, cfg: SuiteConfig, points: Iterable[Rat]) -> PLHomeo:
    """Random unit fixing every given point, hence preserving the set.

    Pins a knot at each point and wiggles affinely in between (and optionally
    in the tails), so elements built from it land in a group H-class.
    """
    pts = sorted(points)
    if not pts:
        return random_unit(rng, cfg)
    knots: list[tuple[Rat, Rat]] = [(p, p) for p in pts]
    for p, q in zip(pts, pts[1:]):
        if rng.random() < 0.7:
            t = p + (q - p) * rng.choice(_GAP_CUTS)
            s = p + (q - p) * rng.choice(_GAP_CUTS)
            knots.append((t, s))
    if rng.random() < 0.5:
        db = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        dv = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        knots.append((pts[0] - db, pts[0] - dv))
    if rng.random() < 0.5:
        db = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        dv = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        knots.append((pts[-1] + db, pts[-1] + dv))
    knots.sort()
    return PLHomeo.from_knots(rng.choice(SLOPES), knots, rng.choice(SLOPES))


# -- the suites ------------------------------------------------------------


def _gen_three(rng, cfg):
    return {
        "a": random_element(rng, cfg),
        "b": random_element(rng, cfg),
        "c": random_element(rng, cfg),
    }


def _check_inverse_laws(inputs):
    a, b, c = inputs["a"], inputs["b"], inputs["c"]
    one = PHom.identity()
    if (a >> b) >> c != a >> (b >> c):
        return "associativity"
    if one >> a != a or a >> one != a:
        return "identity-neutral"
    if (a >> a.inverse()) >> a != a:
        return "inverse-regular"
    if (a.inverse() >> a) >> a.inverse() != a.inverse():
        return "inverse-partner"
    if a.inverse().inverse() != a:
        return "involution"
    if (a >> b).inverse() != b.inverse() >> a.inverse():
        return "antiautomorphism"
    e = a >> a.inverse()
    f = b >> b.inverse()
    if e >> f != f >> e:
        return "idempotents-commute"
    return None


def _gen_band(rng, cfg):
    a = random_element(rng, cfg)
    e = random_idempotent(rng, cfg)
    f = random_idempotent(rng, cfg)
    extra: list[Rat] = []
    while not extra:
        pool = random_points(rng, cfg.max_defect, cfg.coeff_bound)
        extra = [p for p in pool if p not in f.excluded]
    return {"a": a, "e": e, "f": f, "extra": CofinSet(extra)}


def _check_band(inputs):
    a, e, f, extra = inputs["a"], inputs["e"], inputs["f"], inputs["extra"]
    if a.is_idempotent != (a >> a == a):
        return "idempotent-characterization"
    if e >> f != f >> e:
        return "band-commutes"
    if not (e >> f).is_idempotent:
        return "band-closed"
    if to_semilattice(e >> f) != to_semilattice(e) | to_semilattice(f):
        return "semilattice-union"
    if from_semilattice(to_semilattice(e)) != e:
        return "semilattice-roundtrip"
    if not natural_leq(e >> f, e) or not natural_leq(e >> f, f):
        return "meet-below"
    for x, y in ((e, f), (f, e)):
        if natural_leq(x, y) and x != y and x.defect <= y.defect:
            return "strict-order-size"
    prev = f
    acc = list(f.excluded)
    for p in extra:
        acc.append(p)
        cur = from_semilattice(acc)
        if not natural_leq(cur, prev) or cur == prev:
            return "chain-descends"
        if cur.defect != prev.defect + 1:
            return "chain-single-step"
        prev = cur
    return None


def _check_defect(inputs):
    a, b, x = inputs["a"], inputs["b"], inputs["c"]
    if len(a.range_excluded) != a.defect:
        return "range-size"
    if a.inverse().defect != a.defect:
        return "inverse-defect"
    ab = a >> b
    if ab.defect > a.defect + b.defect:
        return "subadditive"
    if ab.defect < max(a.defect, b.defect):
        return "product-monotone"
    if not ideal_member(0, a) or not ideal_member(a.defect, a):
        return "ideal-membership"
    if ideal_member(a.defect + 1, a):
        return "ideal-strict"
    for n in range(a.defect + 1):
        if ideal_member(n, a) and not (
            ideal_member(n, a >> x) and ideal_member(n, x >> a)
        ):
            return "ideal-two-sided"
    return None


def _gen_green(rng, cfg):
    a = random_element(rng, cfg)
    mode = rng.randrange(5)
    if mode == 0:
        b = random_element(rng, cfg)
    elif mode == 1:
        b = PHom(random_unit(rng, cfg), a.excluded)
    elif mode == 2:
        g = random_unit(rng, cfg)
        b = PHom(g, a.range_excluded.preimage(g))
    elif mode == 3:
        h = random_fixing(rng, cfg, a.range_excluded)
        b = PHom(a.extension.then(h), a.excluded)
    else:
        b = PHom(random_unit(rng, cfg), random_points(rng, a.defect, cfg.coeff_bound))
    return {"a": a, "b": b}


def _check_green(inputs):
    a, b = inputs["a"], inputs["b"]
    r = green_related("R", a, b)
    l_ = green_related("L", a, b)
    if r != (a >> (a.inverse() >> b) == b and b >> (b.inverse() >> a) == a):
        return "r-witness"
    if l_ != ((b >> a.inverse()) >> a == b and (a >> b.inverse()) >> b == a):
        return "l-witness"
    if green_related("H", a, b) != (r and l_):
        return "h-conjunction"
    d = green_related("D", a, b)
    if d != (a.defect == b.defect):
        return "d-defect"
    if green_related("J", a, b) != d:
        return "j-equals-d"
    if d:
        w = d_witness(a, b)
        if not green_related("R", a, w) or not green_related("L", w, b):
            return "d-witness"
        g, dd = factorize_same_defect(a, b)
        if (g >> b) >> dd != a:
            return "j-two-sided"
    return None


def _gen_factor(rng, cfg):
    n = rng.randint(0, cfg.max_defect)
    k = rng.randint(0, cfg.max_defect)
    return {
        "a": PHom(random_unit(rng, cfg), random_points(rng, n, cfg.coeff_bound)),
        "b": PHom(random_unit(rng, cfg), random_points(rng, n, cfg.coeff_bound)),
        "i": from_semilattice(random_points(rng, k, cfg.coeff_bound)),
        "e": from_semilattice(random_points(rng, k, cfg.coeff_bound)),
    }


def _check_factor(inputs):
    a, b, i, e = inputs["a"], inputs["b"], inputs["i"], inputs["e"]
    g, d = factorize_same_defect(a, b)
    if (g >> b) >> d != a:
        return "same-defect-recompose"
    if g.defect != a.defect or d.defect != a.defect:
        return "same-defect-defects"
    c = PHom(conjugator(i, e))
    if (c >> e) >> c.inverse() != i:
        return "conjugator-push"
    if (c.inverse() >> i) >> c != e:
        return "conjugator-pull"
    u, v = d_factorize(a, b)
    if (PHom(u) >> b) >> PHom(v) != a:
        return "unit-factor-recompose"
    if PHom(u).defect != 0 or PHom(v).defect != 0:
        return "unit-factor-units"
    return None


def _gen_gamma(rng, cfg):
    return {"a": random_element(rng, cfg), "g": random_unit(rng, cfg)}


def _check_gamma(inputs):
    a, g = inputs["a"], inputs["g"]
    u = PHom(unit_extension(a))
    if (a >> a.inverse()) >> u != a:
        return "domain-idempotent-product"
    if u >> (a.inverse() >> a) != a:
        return "range-idempotent-product"
    if a >> u.inverse() != a >> a.inverse():
        return "right-cancel"
    if u.inverse() >> a != a.inverse() >> a:
        return "left-cancel"
    if not natural_leq(a, u):
        return "below-own-unit"
    h = PHom(g)
    if g != unit_extension(a) and (natural_leq(a, h) or natural_leq(h, a)):
        return "unique-comparable-unit"
    return None


def _gen_sigma(rng, cfg):
    return {
        "a": random_element(rng, cfg),
        "b": random_element(rng, cfg),
        "e": random_idempotent(rng, cfg),
    }


def _check_sigma(inputs):
    a, b, e = inputs["a"], inputs["b"], inputs["e"]
    sib = e >> PHom(unit_extension(a))
    if not group_congruent(a, sib):
        return "class-by-restriction"
    w = congruence_witness(a, sib)
    if w is None or not w.is_idempotent or w >> a != w >> sib:
        return "witness-equalizes"
    verdict = group_congruent(a, b)
    if verdict != (unit_extension(a) == unit_extension(b)):
        return "verdict-extension"
    wit = congruence_witness(a, b)
    if verdict:
        if wit is None or wit >> a != wit >> b:
            return "witness-equalizes-pair"
    else:
        if wit is not None:
            return "witness-spurious"
        probe = from_semilattice(a.excluded | b.excluded)
        if probe >> a == probe >> b:
            return "classes-separate"
    if not quotient_is_homomorphic(a, b):
        return "quotient-homomorphic"
    top = PHom(unit_extension(a))
    if not natural_leq(a, top) or not natural_leq(sib, top):
        return "class-maximum"
    return None


def _all_order_products(parts: list[PHom]) -> list[PHom]:
    """Products of ``parts`` in every order, sharing prefixes.

    Orders that differ only by swapping equal pieces produce the same
    product value, so at each step only distinct next pieces are branched.
    """
    out: list[PHom] = []

    def rec(acc: PHom | None, remaining: tuple[PHom, ...]):
        if not remaining:
            out.append(acc if acc is not None else PHom.identity())
            return
        seen: set[PHom] = set()
        for idx in range(len(remaining)):
            piece = remaining[idx]
            if piece in seen:
                continue
            seen.add(piece)
            nxt = piece if acc is None else acc >> piece
            rec(nxt, remaining[:idx] + remaining[idx + 1:])

    rec(None, tuple(parts))
    return out


def _gen_local(rng, cfg):
    n = rng.randint(0, cfg.max_defect)
    pts = random_points(rng, n, cfg.coeff_bound)
    return {
        "a": PHom(random_fixing(rng, cfg, pts), pts),
        "b": PHom(random_fixing(rng, cfg, pts), pts),
    }


def _check_local(inputs):
    a, b = inputs["a"], inputs["b"]
    parts = localize(a)
    if len(parts) != a.defect + 1:
        return "piece-count"
    for p in parts:
        if not green_related("H", p, a):
            return "pieces-in-class"
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i] >> parts[j] != parts[j] >> parts[i]:
                return "pieces-commute"
    for prod in _all_order_products(parts):
        if prod != a:
            return "every-order-recovers"
    bparts = localize(b)
    abparts = localize(a >> b)
    for p, q, r in zip(parts, bparts, abparts):
        if p >> q != r:
            return "multiplicative"
    ident = from_semilattice(a.excluded)
    if any(p != ident for p in localize(ident)):
        return "idempotent-pieces"
    return None


def _gen_semi(rng, cfg):
    return {
        "a": random_element(rng, cfg),
        "b": random_element(rng, cfg),
        "e": random_idempotent(rng, cfg),
        "f": random_idempotent(rng, cfg),
        "u": random_unit(rng, cfg),
        "v": random_unit(rng, cfg),
    }


def _check_semi(inputs):
    a, b = inputs["a"], inputs["b"]
    e, f = inputs["e"], inputs["f"]
    u, v = inputs["u"], inputs["v"]
    pa, pb = to_semidirect(a), to_semidirect(b)
    if from_semidirect(pa) != a:
        return "range-pair-roundtrip"
    if from_semidirect(semidirect_mul(pa, pb)) != a >> b:
        return "range-pair-product"
    qa, qb = to_domain_pair(a), to_domain_pair(b)
    if from_domain_pair(qa) != a:
        return "domain-pair-roundtrip"
    if from_domain_pair(domain_pair_mul(qa, qb)) != a >> b:
        return "domain-pair-product"
    if domain_to_range_pair(qa) != pa:
        return "pair-conversion"
    if domain_to_range_pair(domain_pair_mul(qa, qb)) != semidirect_mul(pa, pb):
        return "conversion-homomorphic"
    if push_idempotent(u, e >> f) != push_idempotent(u, e) >> push_idempotent(u, f):
        return "push-homomorphic"
    if push_idempotent(PLHomeo.identity(), e) != e:
        return "push-identity"
    if push_idempotent(v, push_idempotent(u, e)) != push_idempotent(u.then(v), e):
        return "push-composite"
    if push_idempotent(u.inverse(), push_idempotent(u, e)) != e:
        return "push-invertible"
    if pull_idempotent(u, e >> f) != pull_idempotent(u, e) >> pull_idempotent(u, f):
        return "pull-homomorphic"
    if pull_idempotent(u, PHom.identity()) != PHom.identity():
        return "pull-unit"
    if pull_idempotent(u, push_idempotent(u, e)) != e:
        return "pull-push"
    if push_idempotent(u, pull_idempotent(u, e)) != e:
        return "push-pull"
    if pull_idempotent(v, pull_idempotent(u, e)) != pull_idempotent(v.then(u), e):
        return "pull-composite"
    if PHom(u) >> PHom(u).inverse() != PHom.identity():
        return "unit-kernel-trivial"
    es, ft = a >> a.inverse(), b >> b.inverse()
    st = a >> b
    if es >> pull_idempotent(a.extension, ft) != st >> st.inverse():
        return "pair-operation-idempotent"
    if a.extension.then(b.extension) != st.extension:
        return "pair-operation-unit"
    return None


@dataclass(frozen=True)
class Suite:
    name: str
    summary: str
    generate: Callable[[random.Random, SuiteConfig], dict]
    check: Callable[[dict], str | None]


_SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "inverse-laws",
            "monoid axioms, unique inverses, commuting idempotents",
            _gen_three,
            _check_inverse_laws,
        ),
        Suite(
            "band",
            "idempotent characterization and the semilattice of excluded sets",
            _gen_band,
            _check_band,
        ),
        Suite(
            "defect",
            "defect arithmetic and the two-sided ideal chain",
            _gen_three,
            _check_defect,
        ),
        Suite(
            "green-witnesses",
            "R/L/H/D/J verdicts confirmed by recomposition witnesses",
            _gen_green,
            _check_green,
        ),
        Suite(
            "factorizations",
            "same-defect, conjugation and unit-sandwich factorizations recompose",
            _gen_factor,
            _check_factor,
        ),
        Suite(
            "gamma",
            "each element sits below its unique unit extension",
            _gen_gamma,
            _check_gamma,
        ),
        Suite(
            "sigma-quotient",
            "congruence verdicts, equalizing witnesses, homomorphic quotient",
            _gen_sigma,
            _check_sigma,
        ),
        Suite(
            "localization",
            "interval pieces commute and recover the element in every order",
            _gen_local,
            _check_local,
        ),
        Suite(
            "semidirect",
            "pair encodings transport composition; push/pull actions behave",
            _gen_semi,
            _check_semi,
        ),
    )
}


def suite_names() -> list[str]:
    return list(_SUITES)


def get_suite(name: str) -> Suite:
    try:
        return _SUITES[name]
    except KeyError:
        known = ", ".join(_SUITES)
        raise UnknownSuite(f"unknown suite '{name}' (known: {known})") from None


# -- shrinking --------------------------------------------------------------


def _rational_candidates(q: Rat) -> list[Rat]:
    out = []
    for c in (Fraction(0), Fraction(1), Fraction(-1), Fraction(q.numerator // q.denominator)):
        if c != q and c not in out:
            out.append(c)
    return out


def _shrink_map(f: PLHomeo) -> list[PLHomeo]:
    cands: list[PLHomeo] = []
    if not f.is_identity:
        cands.append(PLHomeo.identity())
    if f.is_affine:
        for s in _rational_candidates(f.slope):
            if s > 0:
                cands.append(PLHomeo.affine(s, f.intercept))
        for c in _rational_candidates(f.intercept):
            cands.append(PLHomeo.affine(f.slope, c))
    else:
        knots = list(f.knots)
        for i in range(len(knots)):
            rest = knots[:i] + knots[i + 1:]
            if rest:
                try:
                    cands.append(PLHomeo.from_knots(f.left_slope, rest, f.right_slope))
                except DomainError:
                    pass
        for left, right in ((Fraction(1), f.right_slope), (f.left_slope, Fraction(1))):
            if (left, right) != (f.left_slope, f.right_slope):
                try:
                    cands.append(PLHomeo.from_knots(left, knots, right))
                except DomainError:
                    pass
    return cands


def _shrink_value(v) -> list:
    if isinstance(v, PHom):
        out = []
        pts = list(v.excluded)
        for i in range(len(pts)):
            out.append(PHom(v.extension, pts[:i] + pts[i + 1:]))
        out.extend(PHom(g, v.excluded) for g in _shrink_map(v.extension))
        return out
    if isinstance(v, PLHomeo):
        return _shrink_map(v)
    if isinstance(v, CofinSet):
        pts = list(v)
        return [CofinSet(pts[:i] + pts[i + 1:]) for i in range(len(pts))]
    return []


def _weight_rational(q: Rat) -> int:
    return abs(q.numerator) + q.denominator


def _weight_map(f: PLHomeo) -> int:
    if f.is_affine:
        return 1 + _weight_rational(f.slope) + _weight_rational(f.intercept)
    w = 1 + _weight_rational(f.left_slope) + _weight_rational(f.right_slope)
    for b, v in f.knots:
        w += 8 + _weight_rational(b) + _weight_rational(v)
    return w


def _weight(v) -> int:
    if isinstance(v, PHom):
        return 40 * v.defect + _weight_map(v.extension)
    if isinstance(v, PLHomeo):
        return _weight_map(v)
    if isinstance(v, CofinSet):
        return sum(1 + _weight_rational(p) for p in v)
    return 0


def _minimize(check: Callable[[dict], str | None], inputs: dict, budget: int = 500) -> dict:
    """Greedy shrink: accept a strictly smaller replacement that still fails."""
    current = dict(inputs)
    improved = True
    while improved and budget > 0:
        improved = False
        for key in current:
            for cand in _shrink_value(current[key]):
                budget -= 1
                if _weight(cand) >= _weight(current[key]):
                    continue
                trial = dict(current)
                trial[key] = cand
                try:
                    still_failing = check(trial) is not None
                except DomainError:
                    still_failing = False
                if still_failing:
                    current = trial
                    improved = True
                    break
                if budget <= 0:
                    break
            if improved or budget <= 0:
                break
    return current


# -- running and reporting ---------------------------------------------------


@dataclass(frozen=True)
class CaseFailure:
    index: int
    label: str
    inputs: dict
    minimized: dict


@dataclass(frozen=True)
class SuiteReport:
    name: str
    config: SuiteConfig
    failures: tuple[CaseFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        cfg = self.config
        lines = [
            f"suite: {self.name}",
            f"config: cases={cfg.cases} seed={cfg.seed} max-defect={cfg.max_defect}"
            f" max-knots={cfg.max_knots} coeff-bound={cfg.coeff_bound}",
            f"failures: {len(self.failures)}",
        ]
        for fail in self.failures:
            lines.append(f"case {fail.index}: {fail.label}")
            for key, value in fail.inputs.items():
                lines.append(f"  {key} = {value}")
            lines.append("  minimized:")
            for key, value in fail.minimized.items():
                lines.append(f"  {key} = {value}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def run_suite(name: str, config: SuiteConfig = SuiteConfig()) -> SuiteReport:
    suite = get_suite(name)
    failures = []
    for index in range(config.cases):
        rng = case_rng(config.seed, index)
        inputs = suite.generate(rng, config)
        label = suite.check(inputs)
        if label is not None:
            failures.append(
                CaseFailure(index, label, inputs, _minimize(suite.check, inputs))
            )
    return SuiteReport(suite.name, config, tuple(failures))


def run_all(config: SuiteConfig = SuiteConfig()) -> list[SuiteReport]:
    return [run_suite(name, config) for name in suite_names()]

"""HTTP facade over the whole calculus.

Every operation is a POST endpoint taking and returning canonical grammar
text inside small JSON envelopes; rationals travel as strings because JSON
numbers are binary floats and would destroy exactness.  The app is
stateless, so the bundled command line runs it in-process, and ``cofinpl
serve`` exposes the same app over a socket.

Error contract: malformed text or an unknown suite name answer 422 with a
``detail.kind`` of ``"parse"`` or ``"usage"``; violated mathematical
preconditions answer 409 with ``detail.kind`` ``"domain"``.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import congruence, green, suites, text
from .errors import DomainError, ParseError, UnknownSuite
from .phom import natural_leq


class ElementIn(BaseModel):
    element: str


class EvalIn(BaseModel):
    element: str
    point: str


class PairOfElementsIn(BaseModel):
    left: str
    right: str


class GreenIn(BaseModel):
    relation: Literal["R", "L", "H", "D", "J"]
    left: str
    right: str


class IdealIn(BaseModel):
    index: int = Field(ge=0)
    element: str


class PairIn(BaseModel):
    pair: str


class PairMulIn(BaseModel):
    left: str
    right: str


class TextIn(BaseModel):
    text: str


class CheckIn(BaseModel):
    suite: str
    cases: int = Field(default=500, ge=1)
    seed: int = Field(default=0, ge=0)
    max_defect: int = Field(default=4, ge=1)
    max_knots: int = Field(default=3, ge=0)
    coeff_bound: int = Field(default=12, ge=1)


class ElementOut(BaseModel):
    element: str


class ValueOut(BaseModel):
    value: str | None


class BoolOut(BaseModel):
    result: bool


class IntOut(BaseModel):
    value: int


class MapOut(BaseModel):
    map: str


class SigmaOut(BaseModel):
    related: bool
    witness: str | None


class PairOut(BaseModel):
    pair: str


class ElementsOut(BaseModel):
    elements: list[str]


class ElementFactorsOut(BaseModel):
    gamma: str
    delta: str


class SuiteResult(BaseModel):
    suite: str
    cases: int
    failures: int
    passed: bool
    report: str


class CheckOut(BaseModel):
    passed: bool
    failures: int
    results: list[SuiteResult]
    report: str


def create_app() -> FastAPI:
    app = FastAPI(title="cofinpl", version="0.1.0")

    @app.exception_handler(ParseError)
    async def _parse_error(_: Request, exc: ParseError):
        return JSONResponse(
            status_code=422,
            content={
                "detail": {
                    "kind": "parse",
                    "message": exc.message,
                    "position": exc.position,
                }
            },
        )

    @app.exception_handler(UnknownSuite)
    async def _unknown_suite(_: Request, exc: UnknownSuite):
        return JSONResponse(
            status_code=422,
            content={"detail": {"kind": "usage", "message": str(exc)}},
        )

    @app.exception_handler(DomainError)
    async def _domain_error(_: Request, exc: DomainError):
        return JSONResponse(
            status_code=409,
            content={
                "detail": {
                    "kind": "domain",
                    "error": type(exc).__name__,
                    "message": str(exc),
                }
            },
        )

    @app.post("/eval", response_model=ValueOut)
    def eval_point(body: EvalIn):
        a = text.parse_element(body.element)
        value = a(text.parse_rational(body.point))
        return ValueOut(value=None if value is None else text.format_rational(value))

    @app.post("/compose", response_model=ElementOut)
    def compose(body: PairOfElementsIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        return ElementOut(element=text.format_element(a.then(b)))

    @app.post("/invert", response_model=ElementOut)
    def invert(body: ElementIn):
        a = text.parse_element(body.element)
        return ElementOut(element=text.format_element(a.inverse()))

    @app.post("/idempotent", response_model=BoolOut)
    def idempotent(body: ElementIn):
        return BoolOut(result=text.parse_element(body.element).is_idempotent)

    @app.post("/defect", response_model=IntOut)
    def defect(body: ElementIn):
        return IntOut(value=text.parse_element(body.element).defect)

    @app.post("/green", response_model=BoolOut)
    def green_rel(body: GreenIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        return BoolOut(result=green.green_related(body.relation, a, b))

    @app.post("/leq", response_model=BoolOut)
    def leq(body: PairOfElementsIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        return BoolOut(result=natural_leq(a, b))

    @app.post("/ideal", response_model=BoolOut)
    def ideal(body: IdealIn):
        return BoolOut(result=green.ideal_member(body.index, text.parse_element(body.element)))

    @app.post("/gamma", response_model=MapOut)
    def gamma(body: ElementIn):
        a = text.parse_element(body.element)
        return MapOut(map=text.format_map(congruence.unit_extension(a)))

    @app.post("/sigma", response_model=SigmaOut)
    def sigma(body: PairOfElementsIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        witness = congruence.congruence_witness(a, b)
        return SigmaOut(
            related=witness is not None,
            witness=None if witness is None else text.format_element(witness),
        )

    @app.post("/pair", response_model=PairOut)
    def pair(body: ElementIn):
        a = text.parse_element(body.element)
        return PairOut(pair=text.format_pair(congruence.to_semidirect(a)))

    @app.post("/unpair", response_model=ElementOut)
    def unpair(body: PairIn):
        p = text.parse_pair(body.pair)
        return ElementOut(element=text.format_element(congruence.from_semidirect(p)))

    @app.post("/pairmul", response_model=PairOut)
    def pairmul(body: PairMulIn):
        p = text.parse_pair(body.left)
        q = text.parse_pair(body.right)
        return PairOut(pair=text.format_pair(congruence.semidirect_mul(p, q)))

    @app.post("/conjugator", response_model=MapOut)
    def conj(body: PairOfElementsIn):
        i = text.parse_element(body.left)
        e = text.parse_element(body.right)
        return MapOut(map=text.format_map(green.conjugator(i, e)))

    @app.post("/factor-defect", response_model=ElementFactorsOut)
    def factor_defect(body: PairOfElementsIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        g, d = green.factorize_same_defect(a, b)
        return ElementFactorsOut(
            gamma=text.format_element(g), delta=text.format_element(d)
        )

    @app.post("/factor-d", response_model=ElementFactorsOut)
    def factor_d(body: PairOfElementsIn):
        a = text.parse_element(body.left)
        b = text.parse_element(body.right)
        g, d = green.d_factorize(a, b)
        return ElementFactorsOut(gamma=text.format_map(g), delta=text.format_map(d))

    @app.post("/localize", response_model=ElementsOut)
    def localize_(body: ElementIn):
        a = text.parse_element(body.element)
        return ElementsOut(
            elements=[text.format_element(p) for p in green.localize(a)]
        )

    @app.post("/fmt", response_model=ElementOut)
    def fmt(body: TextIn):
        return ElementOut(element=text.format_element(text.parse_element(body.text)))

    @app.post("/check", response_model=CheckOut)
    def check(body: CheckIn):
        config = suites.SuiteConfig(
            cases=body.cases,
            seed=body.seed,
            max_defect=body.max_defect,
            max_knots=body.max_knots,
            coeff_bound=body.coeff_bound,
        )
        if body.suite == "all":
            reports = suites.run_all(config)
        else:
            reports = [suites.run_suite(body.suite, config)]
        results = [
            SuiteResult(
                suite=r.name,
                cases=r.config.cases,
                failures=len(r.failures),
                passed=r.passed,
                report=r.render(),
            )
            for r in reports
        ]
        return CheckOut(
            passed=all(r.passed for r in results),
            failures=sum(r.failures for r in results),
            results=results,
            report="\n\n".join(r.report for r in results),
        )

    return app


app = create_app()

"""Command-line front end.

A thin client of the HTTP service: every subcommand builds one request,
sends it, and prints the canonical text from the response.  By default the
request never leaves the process (the FastAPI app is mounted on an in-memory
transport), so the tool works offline with no server running; pass --url to
target a remote instance started with ``cofinpl serve``.

Exit codes: 0 success, 1 property-suite failure, 2 parse or usage error,
3 domain/precondition error.
"""

from __future__ import annotations

import argparse
import asyncio
import sys

import httpx

SUITE_CHOICES_HELP = (
    "inverse-laws, band, defect, green-witnesses, factorizations, gamma, "
    "sigma-quotient, localization, semidirect, or all"
)


def _post(args: argparse.Namespace, path: str, payload: dict) -> httpx.Response:
    async def go() -> httpx.Response:
        if args.url:
            client = httpx.AsyncClient(base_url=args.url, timeout=300.0)
        else:
            from . import service

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=service.app),
                base_url="http://cofinpl.internal",
                timeout=300.0,
            )
        async with client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        message = detail.get("message", "request failed")
        if detail.get("kind") == "parse" and "position" in detail:
            message = f"{message} (at position {detail['position']})"
        kind = detail.get("kind")
    else:
        message = str(detail) if detail is not None else f"HTTP {response.status_code}"
        kind = None
    print(f"error: {message}", file=sys.stderr)
    if response.status_code == 409 or kind == "domain":
        return 3
    return 2


def _run(args: argparse.Namespace, path: str, payload: dict, keys: list[str]) -> int:
    response = _post(args, path, payload)
    if response.status_code != 200:
        return _fail(response)
    body = response.json()
    for key in keys:
        value = body[key]
        if isinstance(value, bool):
            print("true" if value else "false")
        elif isinstance(value, list):
            for item in value:
                print(item)
        elif value is None:
            print("undefined")
        else:
            print(value)
    return 0


# -- subcommand handlers -----------------------------------------------------


def _cmd_eval(args) -> int:
    return _run(args, "/eval", {"element": args.element, "point": args.point}, ["value"])


def _cmd_compose(args) -> int:
    return _run(args, "/compose", {"left": args.left, "right": args.right}, ["element"])


def _cmd_invert(args) -> int:
    return _run(args, "/invert", {"element": args.element}, ["element"])


def _cmd_idempotent(args) -> int:
    return _run(args, "/idempotent", {"element": args.element}, ["result"])


def _cmd_defect(args) -> int:
    return _run(args, "/defect", {"element": args.element}, ["value"])


def _cmd_green(args) -> int:
    payload = {"relation": args.relation, "left": args.left, "right": args.right}
    return _run(args, "/green", payload, ["result"])


def _cmd_leq(args) -> int:
    return _run(args, "/leq", {"left": args.left, "right": args.right}, ["result"])


def _cmd_ideal(args) -> int:
    return _run(args, "/ideal", {"index": args.n, "element": args.element}, ["result"])


def _cmd_gamma(args) -> int:
    return _run(args, "/gamma", {"element": args.element}, ["map"])


def _cmd_sigma(args) -> int:
    response = _post(args, "/sigma", {"left": args.left, "right": args.right})
    if response.status_code != 200:
        return _fail(response)
    body = response.json()
    print("true" if body["related"] else "false")
    if body["witness"] is not None:
        print(body["witness"])
    return 0


def _cmd_pair(args) -> int:
    return _run(args, "/pair", {"element": args.element}, ["pair"])


def _cmd_unpair(args) -> int:
    return _run(args, "/unpair", {"pair": args.pair}, ["element"])


def _cmd_pairmul(args) -> int:
    return _run(args, "/pairmul", {"left": args.left, "right": args.right}, ["pair"])


def _cmd_conjugator(args) -> int:
    return _run(args, "/conjugator", {"left": args.left, "right": args.right}, ["map"])


def _cmd_factor_defect(args) -> int:
    return _run(
        args,
        "/factor-defect",
        {"left": args.left, "right": args.right},
        ["gamma", "delta"],
    )


def _cmd_factor_d(args) -> int:
    return _run(
        args, "/factor-d", {"left": args.left, "right": args.right}, ["gamma", "delta"]
    )


def _cmd_localize(args) -> int:
    return _run(args, "/localize", {"element": args.element}, ["elements"])


def _cmd_fmt(args) -> int:
    return _run(args, "/fmt", {"text": args.element}, ["element"])


def _cmd_check(args) -> int:
    payload = {
        "suite": args.suite,
        "cases": args.cases,
        "seed": args.seed,
        "max_defect": args.max_defect,
        "max_knots": args.max_knots,
        "coeff_bound": args.coeff_bound,
    }
    response = _post(args, "/check", payload)
    if response.status_code != 200:
        return _fail(response)
    body = response.json()
    print(body["report"])
    return 0 if body["passed"] else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from . import service

    uvicorn.run(service.app, host=args.host, port=args.port)
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cofinpl",
        description=(
            "Exact arithmetic for increasing piecewise-linear partial "
            "bijections of the rational line with finitely many excluded points."
        ),
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running service; default is in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def element_cmd(name: str, handler, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("element", help="element text, e.g. 'phom(aff(1,1);{0})'")
        p.set_defaults(handler=handler)
        return p

    def binary_cmd(name: str, handler, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(handler=handler)
        return p

    p = sub.add_parser("eval", help="apply an element at a rational point")
    p.add_argument("element")
    p.add_argument("point", help="rational, e.g. 1/2")
    p.set_defaults(handler=_cmd_eval)

    binary_cmd("compose", _cmd_compose, "compose two elements (left applied first)")
    element_cmd("invert", _cmd_invert, "invert an element")
    element_cmd("idempotent", _cmd_idempotent, "test for idempotency")
    element_cmd("defect", _cmd_defect, "number of excluded points")

    p = sub.add_parser("green", help="decide a Green relation")
    p.add_argument("relation", choices=["R", "L", "H", "D", "J"])
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_green)

    binary_cmd("leq", _cmd_leq, "natural partial order: left below right")

    p = sub.add_parser("ideal", help="membership in the n-th two-sided ideal")
    p.add_argument("n", type=int)
    p.add_argument("element")
    p.set_defaults(handler=_cmd_ideal)

    element_cmd("gamma", _cmd_gamma, "unit extension (class modulo the group congruence)")
    binary_cmd("sigma", _cmd_sigma, "group congruence verdict plus equalizing witness")
    element_cmd("pair", _cmd_pair, "encode as (unit, range-excluded set) pair")

    p = sub.add_parser("unpair", help="decode a (unit, set) pair back to an element")
    p.add_argument("pair", help="pair text, e.g. 'pair(aff(1,1);{1})'")
    p.set_defaults(handler=_cmd_unpair)

    binary_cmd("pairmul", _cmd_pairmul, "multiply two pairs in the semidirect product")
    binary_cmd("conjugator", _cmd_conjugator, "unit conjugating one idempotent to another")
    binary_cmd("factor-defect", _cmd_factor_defect, "factor left through equal-defect right")
    binary_cmd("factor-d", _cmd_factor_d, "unit sandwich: left = gamma right delta")
    element_cmd("localize", _cmd_localize, "interval pieces of a group H-class element")
    element_cmd("fmt", _cmd_fmt, "reprint element text in canonical form")

    p = sub.add_parser("check", help="run a property suite (or 'all')")
    p.add_argument("suite", help=SUITE_CHOICES_HELP)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-defect", type=int, default=4, dest="max_defect")
    p.add_argument("--max-knots", type=int, default=3, dest="max_knots")
    p.add_argument("--coeff-bound", type=int, default=12, dest="coeff_bound")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())

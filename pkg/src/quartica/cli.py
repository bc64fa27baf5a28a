"""Command-line interface: one subcommand per pipeline stage, JSON output by default."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, TextIO

from . import chord, cubic, search, surface
from .cubic import CubicPoint, CurveParams
from .errors import DegenerateError, NotASolutionError, OffCurveError, QuarticaError
from .exact.rational import as_rational, format_rational
from .families import FAMILIES, Family
from .surface import QuarticPoint

OK, DEGENERATE, ERROR = "ok", "degenerate", "error"
EXIT_CODES = {OK: 0, ERROR: 1, DEGENERATE: 2}

# lets "-2797/592" through as a positional value rather than an option
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


@dataclass
class CommandResult:
    command: str
    status: str
    payload: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"command": self.command, "status": self.status, "payload": self.payload}


def rational_arg(text: str):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected an exact rational p/q, got {text!r}") from exc


def _verified(q: QuarticPoint) -> dict:
    """JSON for a solution, re-checked on the surface first."""
    if surface.quartic_residual(q) != 0:
        raise AssertionError(f"refusing to print unverified solution {q}")
    prim = surface.primitive_integer(q)
    return {
        "point": q.to_json(),
        "primitive": prim.to_json(),
        "canonical": surface.canonicalize(q).to_json(),
        "equation": prim.equation(),
    }


def _point_arg(ns) -> QuarticPoint:
    return QuarticPoint(ns.x, ns.y, ns.z, ns.w)


# -- subcommands -------------------------------------------------------------


def cmd_verify(ns) -> CommandResult:
    q = _point_arg(ns)
    res = surface.quartic_residual(q)
    ok = res == 0
    payload = {"point": q.to_json(), "residual": format_rational(res), "solution": ok}
    if ok:
        payload["trivial"] = surface.is_trivial(q)
    verdict = "holds" if ok else "fails"
    return CommandResult("verify", OK if ok else ERROR, payload, [f"{q.equation()}: {verdict} (residual {res})"])


def cmd_map(ns) -> CommandResult:
    q = _point_arg(ns)
    c, p = cubic.image_of_quartic(q)
    res = cubic.curve_residual(c, p)
    back = cubic.lift(c, p, 1)
    if res != 0 or back != q:
        raise AssertionError(f"image of {q} failed its round trip")
    payload = {"m": format_rational(c.m), "n": format_rational(c.n), "s": format_rational(p.s),
               "t": format_rational(p.t), "r": format_rational(c.r), "curve_residual": format_rational(res)}
    line = f"m={c.m} n={c.n} s={p.s} t={p.t} r={c.r} (curve residual {res}, lift at g=1 recovers the input)"
    return CommandResult("map", OK, payload, [line])


def cmd_lift(ns) -> CommandResult:
    c, p = CubicPoint(ns.m, ns.n, ns.r), CurveParams(ns.s, ns.t)
    res = cubic.curve_residual(c, p)
    if res != 0:
        return CommandResult("lift", ERROR, {"curve_residual": format_rational(res)},
                             [f"{c} is not on C_({p.s},{p.t}): residual {res}"])
    sols = [{"g": format_rational(g), **_verified(q)} for g, q in cubic.fiber_solutions(c, p)]
    lines = [f"g={s['g']}: {s['equation']}" for s in sols] or ["no nonzero rational fiber roots"]
    return CommandResult("lift", OK, {"curve_residual": "0", "solutions": sols}, lines)


def cmd_euler(ns) -> CommandResult:
    p = CurveParams(ns.s, ns.t)
    q = cubic.euler_solution(p)
    payload = {"solution": _verified(q)}
    lines = [f"Euler solution: {payload['solution']['equation']}"]
    try:
        e = cubic.euler_point(p)
        payload["cubic_point"] = e.to_json()
        payload["g"] = format_rational(cubic.euler_fiber_g(p))
        lines.append(f"Euler point on C_({p.s},{p.t}): {e}")
    except DegenerateError as exc:
        lines.append(f"no Euler point: {exc}")
    if surface.is_trivial(q):
        payload["trivial"] = True
    return CommandResult("euler", OK, payload, lines)


def cmd_double(ns) -> CommandResult:
    q = _point_arg(ns)
    c, p = cubic.image_of_quartic(q)
    k, g, d = chord.tangent_step(c, p)
    sols = [{"g": format_rational(gg), **_verified(qq)} for gg, qq in cubic.fiber_solutions(d, p)]
    payload = {
        "image": c.to_json(),
        "params": p.to_json(),
        "k": format_rational(k),
        "g": None if g is None else format_rational(g),
        "doubled": d.to_json(),
        "solutions": sols,
    }
    lines = [f"tangent point: {d}"] + [s["equation"] for s in sols]
    return CommandResult("double", OK, payload, lines)


def cmd_pair(ns) -> CommandResult:
    q = _point_arg(ns)
    pq = cubic.pair_of(q)
    v = _verified(pq)
    return CommandResult("pair", OK, {"input": q.to_json(), "pair": v}, [f"pair: {v['equation']}"])


def _load_family(ns) -> Family:
    if ns.family:
        return FAMILIES[ns.family]
    data = json.loads(Path(ns.file).read_text())
    # accept the output of `quartica family` as is
    return Family.from_json(data.get("payload", data))


def cmd_paramcheck(ns) -> CommandResult:
    fam = _load_family(ns)
    residual = cubic.verify_parametric_family(*fam)
    if residual.is_zero():
        return CommandResult("paramcheck", OK, {"identity": True}, ["identity"])
    payload = {"identity": False, "residual": residual.to_json(), "residual_text": str(residual)}
    return CommandResult("paramcheck", ERROR, payload, [f"not an identity; residual = {residual}"])


def cmd_family(ns) -> CommandResult:
    fam = FAMILIES[ns.name]
    return CommandResult("family", OK, fam.to_json(), [f"{k} = {f}" for k, f in zip("xyzw", fam)])


def _trim_to_checkpoint(path: Path, emitted: int) -> None:
    # drop records written after the last checkpoint; the resumed run re-emits them
    kept = [line for line in path.read_text().splitlines(keepends=True)
            if json.loads(line).get("ordinal", 0) <= emitted]
    path.write_text("".join(kept))


def cmd_search(ns, out: TextIO) -> CommandResult:
    cfg = search.SearchConfig(
        tuple(ns.m), tuple(ns.n), tuple(ns.s), tuple(ns.t),
        emit_trivial=ns.emit_trivial, workers=ns.workers,
    )
    ck = search.Checkpoint(ns.checkpoint) if ns.checkpoint else None
    summary = search.SearchSummary()
    resuming = ck is not None and ck.path.exists()
    if resuming and ns.out and Path(ns.out).exists():
        _trim_to_checkpoint(Path(ns.out), ck.load(cfg)["summary"]["emitted"])
    sink = open(ns.out, "a" if resuming else "w") if ns.out else out
    try:
        for rec in search.run_search(cfg, checkpoint=ck, summary=summary):
            if ns.pretty and sink is out:
                sink.write(f"#{rec.ordinal} {rec.point.equation()}  [{rec.branch} cell {rec.cell}]\n")
            else:
                sink.write(json.dumps(rec.to_json()) + "\n")
            sink.flush()
    finally:
        if sink is not out:
            sink.close()
    return CommandResult("search", OK, {"summary": summary.to_json()},
                         [f"summary: {json.dumps(summary.to_json())}"])


# -- parser ------------------------------------------------------------------


def _allow_negative_rationals(parser: argparse.ArgumentParser) -> None:
    parser._negative_number_matcher = _NEGATIVE_RATIONAL  # type: ignore[attr-defined]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quartica", description="Rational points on x^4 + y^4 = z^4 + w^4.")
    parser.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def point_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        for coord in "xyzw":
            p.add_argument(coord, type=rational_arg)
        return p

    point_cmd("verify", "check a quadruple against the equation").set_defaults(func=cmd_verify)
    point_cmd("map", "image of a solution on the cubic family (g = 1)").set_defaults(func=cmd_map)
    point_cmd("double", "tangent-double the image and lift the result").set_defaults(func=cmd_double)
    point_cmd("pair", "second solution on the fiber line").set_defaults(func=cmd_pair)

    p = sub.add_parser("lift", help="fiber solutions of a cubic point")
    for name in ("m", "n", "r", "s", "t"):
        p.add_argument(name, type=rational_arg)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("euler", help="Euler's solution and point for parameters s, t")
    p.add_argument("s", type=rational_arg)
    p.add_argument("t", type=rational_arg)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("paramcheck", help="verify a parametric family symbolically")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help='JSON {"x": {"i,j": coef, ...}, "y": ..., "z": ..., "w": ...}')
    src.add_argument("--family", choices=sorted(FAMILIES), help="use a built-in family")
    p.set_defaults(func=cmd_paramcheck)

    p = sub.add_parser("family", help="print a built-in family as paramcheck JSON")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="enumerate cells (m, n, s, t) and stream solutions as JSONL")
    for name, default in (("m", (-3, 3)), ("n", (-3, 3)), ("s", (1, 13)), ("t", (1, 13))):
        p.add_argument(f"--{name}", nargs=2, type=int, default=list(default), metavar=("LO", "HI"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write JSONL records here instead of stdout")
    p.add_argument("--checkpoint", help="state file; resumed automatically when it exists")
    p.add_argument("--emit-trivial", action="store_true")
    p.set_defaults(func=cmd_search)

    for action in [parser, *sub.choices.values()]:
        _allow_negative_rationals(action)
    return parser


def run(argv: Optional[list[str]] = None, out: TextIO = sys.stdout) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    func: Callable = ns.func
    try:
        result = func(ns, out) if func is cmd_search else func(ns)
    except DegenerateError as exc:
        result = CommandResult(ns.command, DEGENERATE, {"reason": str(exc)}, [f"degenerate: {exc}"])
    except (NotASolutionError, OffCurveError, QuarticaError, ValueError, KeyError, OSError) as exc:
        result = CommandResult(ns.command, ERROR, {"reason": str(exc)}, [f"error: {exc}"])
    if ns.pretty:
        out.write("\n".join(result.lines) + "\n")
    else:
        out.write(json.dumps(result.to_json()) + "\n")
    return EXIT_CODES[result.status]


def main() -> None:
    sys.exit(run())

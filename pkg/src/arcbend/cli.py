"""Command-line interface: ``arcbend <command> ...``.

Exit codes: 0 success, 1 verification failure or negative verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import circle, families, grid, recognition, render, transforms
from .circle import ModelError
from .formats import (
    FormatError,
    emit_arcs,
    emit_graph,
    emit_paths,
    parse_arcs,
    parse_graph,
    parse_paths,
)
from .graph import Graph
from .grid import PathError

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class VerdictReport:
    command: str
    input_digest: str | None
    result: dict = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    ok: bool = True

    def as_json(self) -> str:
        payload = {
            "schema": SCHEMA,
            "command": self.command,
            "input_digest": self.input_digest,
            "ok": self.ok and all(self.checks.values()),
            "result": self.result,
            "checks": self.checks,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def as_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.input_digest:
            lines.append(f"input: sha256:{self.input_digest}")
        for key, value in self.result.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines += [f"  {row}" for row in value.rstrip("\n").splitlines()]
                continue
            lines.append(f"{key}: {value}")
        for key, passed in self.checks.items():
            lines.append(f"check {key}: {'pass' if passed else 'FAIL'}")
        lines.append(f"ok: {str(self.ok and all(self.checks.values())).lower()}")
        return "\n".join(lines) + "\n"

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok and all(self.checks.values()) else EXIT_FAIL


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_arcs(path: str) -> tuple[circle.CircularArcModel, str]:
    text = _read(path)
    return parse_arcs(text), text


def _load_graph_like(path: str) -> tuple[Graph, str]:
    """Accept either a ``.graph`` or an ``.arcs`` file."""
    text = _read(path)
    head = next((ln.split()[0] for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if head == "arcs":
        return circle.intersection_graph(parse_arcs(text)), text
    if head == "graph":
        return parse_graph(text), text
    raise InputError(f"{path}: expected an .arcs or .graph file")


def _frac(x) -> str:
    return str(x)


def _emit(args, text: str) -> None:
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(args, rep: VerdictReport) -> int:
    _emit(args, rep.as_json() if args.format == "json" else rep.as_text())
    return rep.exit_code


# -- commands ----------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family == "spider-fixture":
        _emit(args, emit_paths(families.spider_fixture(args.which)))
        return EXIT_OK
    spec = families.FamilySpec(args.family, args.n, args.k, args.seed)
    if args.model:
        _emit(args, emit_arcs(spec.model()))
    else:
        _emit(args, emit_graph(spec.graph()))
    return EXIT_OK


CONVERTERS = {
    "b3epg": (transforms.ca_to_b3_epg, 3),
    "b4epr": (transforms.ca_to_b4_epr, 4),
    "b2epr": (transforms.nca_to_b2_epr, 2),
    "b1epr": (None, 1),
}


def convert_model(m: circle.CircularArcModel, target: str) -> grid.GridModel:
    fn, _ = CONVERTERS[target]
    if fn is not None:
        return fn(m)
    fp = transforms.find_four_points(m)
    if fp is None:
        raise ModelError("no four points with no arc containing two of them; no one-bend model")
    return transforms.nhca_to_b1_epr(m, fp)


def cmd_convert(args) -> int:
    m, _ = _load_arcs(args.input)
    try:
        out = convert_model(m, args.to)
    except ModelError as exc:
        print(f"arcbend: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(args, emit_paths(out))
    return EXIT_OK


def analyze_model(m: circle.CircularArcModel) -> dict:
    g = circle.intersection_graph(m)
    fp = transforms.find_four_points(m)
    return {
        "n": m.n,
        "normal": circle.is_normal(m),
        "normal_helly": circle.is_normal_helly(m),
        "chordal": recognition.is_chordal(g),
        "four_points": None if fp is None else [_frac(p) for p in fp.points],
    }


def cmd_analyze(args) -> int:
    m, text = _load_arcs(args.input)
    result = analyze_model(m)
    if args.criterion:
        n, k, t = args.criterion
        result["containment_criterion"] = {
            "n": n, "k": k, "t": t,
            "contains": recognition.cycle_power_contains_criterion(n, k, t),
        }
    return _report(args, VerdictReport("analyze", _digest(text), result))


def decision_payload(d: recognition.B1Decision) -> dict:
    out = {
        "verdict": d.verdict.value,
        "reason": d.reason.value if d.reason else None,
        "obstruction_t": d.obstruction_t,
        "chordal": d.chordal,
        "four_points": None if d.four_points is None else [_frac(p) for p in d.four_points],
        "notes": d.notes,
    }
    if d.model is not None:
        out["paths"] = emit_paths(d.model)
    return out


def _decide_one(path: str) -> tuple[str, VerdictReport]:
    m, text = _load_arcs(path)
    d = recognition.decide_b1_epr(m)
    rep = VerdictReport("decide", _digest(text), decision_payload(d), dict(d.checks), ok=d.accepted)
    return path, rep


def cmd_decide(args) -> int:
    if len(args.inputs) == 1:
        _, rep = _decide_one(args.inputs[0])
        return _report(args, rep)
    if not args.out:
        raise InputError("several inputs need --out DIR for per-input reports")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    suffix = ".json" if args.format == "json" else ".txt"
    worst = EXIT_OK
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        for path, rep in pool.map(_decide_one, args.inputs):
            body = rep.as_json() if args.format == "json" else rep.as_text()
            (outdir / (Path(path).stem + suffix)).write_text(body)
            worst = max(worst, rep.exit_code)
    return worst


def cmd_subgraph(args) -> int:
    g, text = _load_graph_like(args.input)
    n, k = args.target
    h = families.cycle_power(n, k)
    found = recognition.contains_induced(g, h)
    rep = VerdictReport("subgraph", _digest(text), {"target": f"C_{n}^{k}", "contains_induced": found})
    return _report(args, rep)


def verify_paths(gm: grid.GridModel, against: Graph, *, bends: int | None, epr: bool) -> dict[str, bool]:
    checks = {"graph_equality": grid.epg_intersection_graph(gm) == against}
    if bends is not None:
        checks["bend_bound"] = grid.max_bends(gm) <= bends
    if epr or gm.rect is not None:
        checks["epr_valid"] = grid.validate_epr(gm)
        if checks["epr_valid"] and grid.max_bends(gm) <= 1:
            checks["nh_valid"] = circle.is_normal_helly(transforms.epr_to_ca(gm))
    return checks


def cmd_verify(args) -> int:
    text = _read(args.input)
    gm = parse_paths(text)
    g, _ = _load_graph_like(args.against)
    checks = verify_paths(gm, g, bends=args.bends, epr=args.epr)
    result = {"paths": len(gm.paths), "max_bends": grid.max_bends(gm), "mode": gm.mode}
    return _report(args, VerdictReport("verify", _digest(text), result, checks))


def cmd_render(args) -> int:
    gm = parse_paths(_read(args.input))
    _emit(args, render.render_ascii(gm) if args.ascii else render.render_svg(gm))
    return EXIT_OK


# -- parser -------------------------------------------------------------


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies must not overwrite values given before the subcommand
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=default(None), help="seed for random families")
    p.add_argument("--format", choices=("json", "text"), default=default("text"))
    p.add_argument("--out", default=default(None), help="output file (directory for batch runs)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    ap = argparse.ArgumentParser(
        prog="arcbend",
        description="Bend-number tools for circular-arc graphs.",
        parents=[_global_flags(suppress=False)],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family member")
    p.add_argument("family", choices=("cycle-power", "thick-spider", "interval", "random-ca", "spider-fixture"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--model", action="store_true", help="emit an .arcs model instead of a .graph")
    p.add_argument("--which", choices=[f.value for f in families.SpiderFixture], default="S3_B1EPG")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", parents=[common], help="build a grid model from an .arcs model")
    p.add_argument("input")
    p.add_argument("--to", choices=tuple(CONVERTERS), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("analyze", parents=[common], help="normality, Helly, four points, criterion")
    p.add_argument("input")
    p.add_argument("--criterion", type=int, nargs=3, metavar=("N", "K", "T"))
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", parents=[common], help="B1-EPR decision for one or more .arcs models")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("subgraph", parents=[common], help="induced cycle-power search")
    p.add_argument("input")
    p.add_argument("--target", nargs=3, required=True, metavar=("cycle-power", "N", "K"))
    p.set_defaults(func=cmd_subgraph)

    p = sub.add_parser("verify", parents=[common], help="check a .paths model against a graph or model")
    p.add_argument("input")
    p.add_argument("--against", required=True)
    p.add_argument("--bends", type=int, default=None, help="required bend bound")
    p.add_argument("--epr", action="store_true", help="require a valid rectangle model")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="draw a .paths model")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--svg", action="store_true", default=True)
    g.add_argument("--ascii", action="store_true")
    p.add_argument("input")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "subgraph":
        kind, n, k = args.target
        if kind != "cycle-power":
            parser.error("--target supports only 'cycle-power N K'")
        try:
            args.target = (int(n), int(k))
        except ValueError:
            parser.error("--target N and K must be integers")
    try:
        return args.func(args)
    except (FormatError, InputError, ModelError, PathError, ValueError) as exc:
        print(f"arcbend: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

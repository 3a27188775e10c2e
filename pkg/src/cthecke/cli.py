"""Command-line front end: ``cthecke enumerate | classes | verify``.

Exit codes: 0 when everything passes, 1 when a verification check fails,
2 for usage and parse errors.  JSON output is written with sorted keys and
carries no timing, so identical invocations are byte-identical.  Timing goes
to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .compositions import SkewShape, parse_shape
from .hecke import class_to_dot, partition_classes
from .tableaux import enumerate_sct
from .verify import SUITES, run

DEFAULT_CEILING = 6
HARD_CAP = 8
ENV_CEILING = "CTHECKE_MAX_N"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 5
    suites: tuple[str, ...] = ("all",)
    seed: int = 0
    shape: SkewShape | None = None
    ceiling: int = DEFAULT_CEILING
    variables: int = 0


def effective_ceiling(requested: int, env: dict | None = None) -> int:
    """The requested ceiling, capped at the hard limit and possibly lowered by the environment."""
    env = os.environ if env is None else env
    if not 1 <= requested <= HARD_CAP:
        raise UsageError(f"--ceiling must lie in [1, {HARD_CAP}]")
    ceiling = requested
    raw = env.get(ENV_CEILING)
    if raw:
        try:
            lowered = int(raw)
        except ValueError:
            raise UsageError(f"{ENV_CEILING}={raw!r} is not an integer") from None
        ceiling = min(ceiling, lowered)
    return ceiling


def _shape(text: str) -> SkewShape:
    try:
        return parse_shape(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse shape {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(target: str, text: str, out) -> None:
    if target == "-":
        out.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_enumerate(args, out) -> int:
    shape = _shape(args.shape)
    tableaux = enumerate_sct(shape)
    for t in tableaux:
        out.write(f"{t}\n")
    out.write(f"count: {len(tableaux)}\n")
    return 0


def class_records(shape: SkewShape) -> list[dict]:
    records = []
    for k, e in enumerate(partition_classes(shape)):
        records.append(
            {
                "class_id": k,
                "size": len(e),
                "source": str(e.source),
                "sink": str(e.sink),
                "rank_profile": e.rank_profile(),
                "interval": [str(e.col(e.source)), str(e.col(e.sink))],
                "covers": len(e.covers),
            }
        )
    return records


def cmd_classes(args, out) -> int:
    shape = _shape(args.shape)
    classes = partition_classes(shape)
    records = class_records(shape)
    for r in records:
        out.write(
            f"class {r['class_id']}: size {r['size']}, source {r['source']}, sink {r['sink']}, "
            f"ranks {r['rank_profile']}, interval [{r['interval'][0]}, {r['interval'][1]}]\n"
        )
    out.write(f"classes: {len(records)}, total: {sum(r['size'] for r in records)}\n")
    if args.dot:
        _write(args.dot, "".join(class_to_dot(e, f"E{k}") for k, e in enumerate(classes)), out)
    if args.json:
        _write(args.json, _dump({"schema": 1, "shape": str(shape), "classes": records}), out)
    return 0


def _config(args) -> VerifyConfig:
    ceiling = effective_ceiling(args.ceiling)
    shape = _shape(args.shape) if args.shape else None
    top = shape.size if shape else args.max_n
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    if top > ceiling:
        raise UsageError(f"size {top} exceeds the ceiling {ceiling}")
    if args.variables < 0:
        raise UsageError("--variables must be nonnegative")
    return VerifyConfig(
        max_n=top,
        suites=(args.suite,),
        seed=args.seed,
        shape=shape,
        ceiling=ceiling,
        variables=args.variables,
    )


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    start = time.perf_counter()
    shapes = [cfg.shape] if cfg.shape else None
    report = run(cfg.suites, cfg.max_n, seed=cfg.seed, shapes=shapes, variables=cfg.variables)
    print(f"verify finished in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    _write(args.out or "-", _dump(report), out)
    for p in report["properties"]:
        status = "PASS" if p["passed"] else "FAIL"
        print(f"{status} {p['name']} ({p['checked']} checked)", file=sys.stderr)
    return 0 if report["passed"] else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cthecke", description="0-Hecke modules on standard composition tableaux")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list all tableaux of a shape")
    p.add_argument("shape", help='e.g. "(1,4,3)" or "(1,3)/(2)"')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classes", help="equivalence classes of a shape")
    p.add_argument("shape")
    p.add_argument("--dot", metavar="FILE", help="write Hasse diagrams as DOT ('-' for stdout)")
    p.add_argument("--json", metavar="FILE", help="write class records as JSON ('-' for stdout)")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", help="check a single shape instead of a size sweep")
    p.add_argument("--out", metavar="FILE", help="write the JSON report here instead of stdout")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING, help=f"largest allowed size (at most {HARD_CAP})")
    p.add_argument("--variables", type=int, default=0, help="qsym variable count (raised to n when smaller)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"cthecke: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

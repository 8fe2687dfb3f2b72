"""Command-line front end: verification, dimension tables, reductions and the
frame catalog, over the structured frame file format.

Exit codes are a stable contract: 0 success or pass, 1 semantic failure
(failed verification, refused reduction), 2 malformed input (unparseable file
or bad arguments), 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .frames import (
    BudgetExhaustedError,
    FrameError,
    FrameParseError,
    catalog,
    dependence,
    load_frame,
    reduce_once,
    save_frame,
    scaling_reduce,
    serialize_frame,
    verify,
)
from .kscalar import Field, scalar_to_str
from .phi import dim_phi, upper_bound

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_MALFORMED = 2
EXIT_BUDGET = 3

__all__ = ["RunConfig", "entry", "main"]


@dataclass
class RunConfig:
    """Options shared by all commands; defaults keep runs reproducible."""

    mode: str = "exact"
    tolerance: float = 1e-9
    seed: int = 0
    grid: Optional[int] = None
    output: str = "text"
    out: Optional[str] = None

    def __post_init__(self):
        if self.mode not in ("exact", "float"):
            raise ValueError(f"mode must be exact or float, got {self.mode!r}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.output not in ("text", "json"):
            raise ValueError(f"output must be text or json, got {self.output!r}")


def _emit(report: dict, config: RunConfig) -> None:
    if config.output == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if key == "steps":
            for i, step in enumerate(value, start=1):
                omega = ",".join(step["omega"])
                print(f"step {i}: pivot={step['pivot']} omega={omega}")
            continue
        print(f"{key}: {value}")


def _bound_entry(field: Field, m: int, p: int):
    if m < 2:
        return None
    return upper_bound(field, m, p)


def cmd_verify(path: str, config: RunConfig) -> int:
    frame = load_frame(path)
    exact = config.mode == "exact" and frame.is_exact
    result = verify(frame, tolerance=None if exact else config.tolerance)
    bound = _bound_entry(frame.field, frame.m, frame.p)
    report = {
        "verdict": "pass" if result.passed else "fail",
        "mode": "exact" if exact else "float",
        "n": frame.n,
        "dim": dim_phi(frame.field, frame.m, frame.p),
        "bound": bound if bound is not None else "refused (m=1)",
        "residual_max": result.max_residual,
        "residual_terms": len(result.residual.terms),
    }
    _emit(report, config)
    return EXIT_PASS if result.passed else EXIT_FAIL


def cmd_dim(field: Field, m: int, p: int, config: RunConfig) -> int:
    bound = _bound_entry(field, m, p)
    report = {
        "field": field.name,
        "m": m,
        "p": p,
        "dim": dim_phi(field, m, p),
        "bound": bound if bound is not None else "refused (m=1)",
    }
    _emit(report, config)
    return EXIT_PASS


def cmd_reduce(path: str, config: RunConfig) -> int:
    frame = load_frame(path)
    if not frame.is_exact:
        print("reduce requires exact rational entries", file=sys.stderr)
        return EXIT_FAIL
    if not verify(frame).passed:
        print("input frame does not verify; refusing to reduce", file=sys.stderr)
        return EXIT_FAIL
    steps = []
    current = frame
    while True:
        cert = dependence(current)
        if cert is None:
            break
        steps.append({"pivot": cert.pivot,
                      "omega": [scalar_to_str(om) for om in cert.omega]})
        current = reduce_once(current, cert)
    report = {"n_initial": frame.n, "steps": steps, "n_final": current.n}
    if not steps:
        report["note"] = "no dependence"
    if config.out:
        save_frame(current, config.out)
        report["out"] = config.out
    _emit(report, config)
    return EXIT_PASS


def cmd_scale_reduce(path: str, config: RunConfig) -> int:
    frame = load_frame(path)
    reduced = scaling_reduce(frame, grid=config.grid, tolerance=config.tolerance)
    if reduced is None:
        _emit({"result": "none", "n_initial": frame.n}, config)
        return EXIT_PASS
    check = verify(reduced, tolerance=None if reduced.is_exact else config.tolerance)
    report = {
        "result": "reduced",
        "n_initial": frame.n,
        "n_final": reduced.n,
        "exact": reduced.is_exact,
        "residual_max": check.max_residual,
    }
    if config.out:
        save_frame(reduced, config.out)
        report["out"] = config.out
    _emit(report, config)
    return EXIT_PASS


def cmd_catalog(field: Field, m: int, p: int, kind: str, config: RunConfig) -> int:
    frame = catalog(field, m, p, kind)
    report = {
        "kind": kind,
        "field": field.name,
        "m": m,
        "p": p,
        "n": frame.n,
    }
    if config.out:
        save_frame(frame, config.out)
        report["out"] = config.out
        _emit(report, config)
    else:
        print(serialize_frame(frame), end="")
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--grid", type=int, default=None)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="path for the emitted frame file")

    parser = argparse.ArgumentParser(
        prog="isoframe",
        description="Verify, analyze and reduce weighted frames of isometric "
                    "embeddings into l_p spaces over R, C or H.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check the frame identity of a frame file")
    p_verify.add_argument("path")

    p_dim = sub.add_parser("dim", parents=[common],
                           help="dimension of Phi_K(m,p) and the frame-size bound")
    p_dim.add_argument("field", choices=("R", "C", "H"))
    p_dim.add_argument("m", type=int)
    p_dim.add_argument("p", type=int)

    p_reduce = sub.add_parser("reduce", parents=[common],
                              help="remove linear dependences among the frame forms")
    p_reduce.add_argument("path")

    p_scale = sub.add_parser("scale-reduce", parents=[common],
                             help="diagonal-scaling reduction via the cone search")
    p_scale.add_argument("path")

    p_catalog = sub.add_parser("catalog", parents=[common],
                               help="emit a known frame")
    p_catalog.add_argument("field", choices=("R", "C", "H"))
    p_catalog.add_argument("m", type=int)
    p_catalog.add_argument("p", type=int)
    p_catalog.add_argument("kind")

    return parser


def entry(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_MALFORMED
    try:
        config = RunConfig(mode=args.mode, tolerance=args.tolerance, seed=args.seed,
                           grid=args.grid, output=args.output, out=args.out)
        if args.command == "verify":
            return cmd_verify(args.path, config)
        if args.command == "dim":
            return cmd_dim(Field.from_tag(args.field), args.m, args.p, config)
        if args.command == "reduce":
            return cmd_reduce(args.path, config)
        if args.command == "scale-reduce":
            return cmd_scale_reduce(args.path, config)
        if args.command == "catalog":
            return cmd_catalog(Field.from_tag(args.field), args.m, args.p,
                               args.kind, config)
        raise AssertionError(f"unhandled command {args.command}")
    except FrameParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FrameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(entry())


if __name__ == "__main__":
    main()

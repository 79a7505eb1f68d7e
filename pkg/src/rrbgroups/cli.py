"""Command line front end.

Subcommands: validate, enumerate, cohomology, wells, inducible.
Exit codes: 0 success, 1 parse error, 2 semantic invalidity, 3 budget or
order bound exceeded.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import serialize
from .cohomology import cochain_complex
from .groups import GroupError
from .rrb import RRBError, enumerate_rrb_operators
from .serialize import ParseError, _load_json
from .wells import WellsContext, verify_wells_exactness, is_inducible, \
    inducible_by_module_criterion, pair_is_compatible, wells_map

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = 10 ** 6


@dataclass
class JobConfig:
    command: str
    format: str = "text"
    max_order: int = 64
    budget: int = DEFAULT_BUDGET
    seed: int = 0


def _emit(config: JobConfig, payload: dict, text_lines: List[str]) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_validate(config: JobConfig, path: str) -> int:
    obj, base = _load_json(path)
    kind = serialize.detect_payload(obj)
    loader = {"group": serialize.load_group, "structure": serialize.load_rrb,
              "module": serialize.load_module, "extension": serialize.load_extension}[kind]
    try:
        loader(obj, base)
    except (GroupError, RRBError) as exc:
        payload = {"kind": kind, "valid": False, "code": exc.code,
                   "witness": list(getattr(exc, "witness", ()))}
        _emit(config, payload, [f"{kind}: INVALID", f"  {exc}"])
        return EXIT_INVALID
    _emit(config, {"kind": kind, "valid": True}, [f"{kind}: valid"])
    return EXIT_OK


def cmd_enumerate(config: JobConfig, h_path: str, g_path: str, phi_path: str) -> int:
    H = serialize.load_group(*_load_json(h_path))
    G = serialize.load_group(*_load_json(g_path))
    phi, _ = _load_json(phi_path)
    operators = enumerate_rrb_operators(H, G, phi, budget=config.budget)
    payload = {"count": len(operators), "operators": [op.tolist() for op in operators]}
    lines = [f"operators: {len(operators)}"]
    lines += ["  " + " ".join(str(x) for x in op.tolist()) for op in operators]
    _emit(config, payload, lines)
    return EXIT_OK


def cmd_cohomology(config: JobConfig, module_path: str, show_reps: bool = False) -> int:
    module = serialize.load_module(*_load_json(module_path))
    cx = cochain_complex(module)
    payload = {
        "z1": list(cx.z1().factors),
        "z2": list(cx.z2().factors),
        "b2": list(cx.b2().factors),
        "h2": list(cx.h2().factors),
        "orders": {"z1": cx.z1().order, "z2": cx.z2().order,
                   "b2": cx.b2().order, "h2": cx.h2().order},
    }
    lines = [
        f"z1: factors {list(cx.z1().factors)} order {cx.z1().order}",
        f"z2: factors {list(cx.z2().factors)} order {cx.z2().order}",
        f"b2: factors {list(cx.b2().factors)} order {cx.b2().order}",
        f"h2: factors {list(cx.h2().factors)} order {cx.h2().order}",
    ]
    if show_reps:
        reps = []
        for cls in cx.h2_classes():
            fs = cx.class_representative(cls)
            reps.append({"class": list(cls.coords),
                         "representative": serialize.factor_system_to_json(
                             fs, module.K.order, module.L.order)})
            lines.append(f"class {list(cls.coords)}: "
                         f"tau1 {fs.tau1.tolist()} tau2 {fs.tau2.tolist()} "
                         f"rho {fs.rho.tolist()} chi {fs.chi.tolist()}")
        payload["witnesses"] = reps
    _emit(config, payload, lines)
    return EXIT_OK


def cmd_wells(config: JobConfig, ext_path: str) -> int:
    ext = serialize.load_extension(*_load_json(ext_path))
    report = verify_wells_exactness(ext, max_order=config.max_order)
    pair_objs = []
    lines = []
    for rec in report.pairs:
        obj = serialize.pair_to_json(rec.pair)
        obj["in_C"] = rec.in_C
        obj["omega"] = list(rec.omega) if rec.omega is not None else None
        obj["inducible"] = rec.inducible
        pair_objs.append(obj)
        lines.append(f"pair psi={rec.pair.psi.psi.image.tolist()}"
                     f"/{rec.pair.psi.eta.image.tolist()} "
                     f"theta={rec.pair.theta.psi.image.tolist()}"
                     f"/{rec.pair.theta.eta.image.tolist()} "
                     f"in_C={rec.in_C} omega={obj['omega']} inducible={rec.inducible}")
    payload = {"pairs": pair_objs, "exactness": dict(report.exactness),
               "omega_is_homomorphism": report.omega_is_homomorphism}
    lines.append("exactness: " + " ".join(
        f"{k}={v}" for k, v in sorted(report.exactness.items())))
    lines.append(f"omega_is_homomorphism: {report.omega_is_homomorphism}")
    _emit(config, payload, lines)
    return EXIT_OK


def cmd_inducible(config: JobConfig, ext_path: str, pair_path: str) -> int:
    ext = serialize.load_extension(*_load_json(ext_path))
    pair_obj, base = _load_json(pair_path)
    try:
        pair = serialize.load_pair(pair_obj, ext.quotient, ext.kernel, base)
    except (GroupError, RRBError) as exc:
        _emit(config, {"error": str(exc)}, [f"pair invalid: {exc}"])
        return EXIT_INVALID
    if not (pair.psi.is_bijective() and pair.theta.is_bijective()):
        _emit(config, {"error": "pair is not a pair of automorphisms"},
              ["pair invalid: components are not bijective"])
        return EXIT_INVALID
    ctx = WellsContext(ext, max_order=config.max_order)
    verdict, witness = is_inducible(ext, pair, ctx)
    by_module = inducible_by_module_criterion(ext, pair, ctx)
    in_c = pair_is_compatible(ctx.module, pair)
    payload = {
        "in_C": in_c,
        "omega": list(wells_map(ext, pair, ctx).coords) if in_c else None,
        "inducible": verdict,
        "inducible_by_module_criterion": by_module,
        "deciders_agree": verdict == by_module,
        "witness": serialize.morphism_to_json(witness) if witness else None,
    }
    lines = [f"in_C: {in_c}",
             f"omega: {payload['omega']}",
             f"inducible: {verdict}",
             f"module criterion: {by_module}",
             f"deciders agree: {payload['deciders_agree']}"]
    if witness is not None:
        lines.append(f"witness psi: {witness.psi.image.tolist()}")
        lines.append(f"witness eta: {witness.eta.image.tolist()}")
    _emit(config, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-order", type=int, default=64,
                        help="enumeration bound on component group orders")
    common.add_argument("--budget", type=int, default=None,
                        help="evaluation cap for operator enumeration "
                             "(RRB_BUDGET overrides the default)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed recorded in the job config")
    parser = argparse.ArgumentParser(
        prog="rrbgroups",
        description="Validate, enumerate, and analyze operator-group data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="validate a group/structure/module/extension file")
    p.add_argument("path")

    p = sub.add_parser("enumerate", parents=[common],
                       help="enumerate operators for (H, G, phi)")
    p.add_argument("H")
    p.add_argument("G")
    p.add_argument("phi")

    p = sub.add_parser("cohomology", parents=[common],
                       help="cochain groups of a module file")
    p.add_argument("module")
    p.add_argument("--reps", action="store_true", help="dump class representatives")

    p = sub.add_parser("wells", parents=[common],
                       help="full lifting/exactness report for an extension")
    p.add_argument("extension")

    p = sub.add_parser("inducible", parents=[common],
                       help="decide liftability of an automorphism pair")
    p.add_argument("extension")
    p.add_argument("pair")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("RRB_BUDGET", DEFAULT_BUDGET))
    config = JobConfig(command=args.command, format=args.format,
                       max_order=args.max_order, budget=budget, seed=args.seed)
    if config.max_order <= 0 or config.budget <= 0:
        print("bounds must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "validate":
            return cmd_validate(config, args.path)
        if args.command == "enumerate":
            return cmd_enumerate(config, args.H, args.G, args.phi)
        if args.command == "cohomology":
            return cmd_cohomology(config, args.module, show_reps=args.reps)
        if args.command == "wells":
            return cmd_wells(config, args.extension)
        if args.command == "inducible":
            return cmd_inducible(config, args.extension, args.pair)
        raise AssertionError(f"unknown command {args.command}")
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GroupError, RRBError) as exc:
        code = getattr(exc, "code", "")
        if code in ("OrderTooLarge", "BudgetExceeded"):
            print(f"bound exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())

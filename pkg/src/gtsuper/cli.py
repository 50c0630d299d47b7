"""Command line front end: structure, check-admissible, build-module, verify, berezinian, export."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import (
    Shape,
    Weight,
    iter_basis,
    presentation_relations,
    relation_to_json,
    weight_to_json,
)
from .berezinian import berezinian_eigenvalue, highest_weight_scalar
from .module import COVARIANT, TYPICAL, ActionError, ModuleSpace, build_module, module_from_json
from .rational import parse_list
from .relations import (
    RelationError,
    RelationSet,
    SuperRelationSet,
    admissibility_report,
    is_covariant_admissible,
)
from .sampling import random_pair, random_seed
from .tableau import Tableau
from .verify import FAIL, SUITES, dumps_reports, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad input: reported on stderr with exit code 2."""


@dataclass
class RunConfig:
    command: str
    shape: Optional[Shape] = None
    inputs: dict = field(default_factory=dict)
    out: Optional[str] = None
    cap: int = 20000
    radius: Optional[int] = None
    seed: int = 0
    order: int = 2
    flags: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("cap", "order"):
            if getattr(self, name) <= 0:
                raise UsageError(f"--{name} must be positive")
        if self.radius is not None and self.radius <= 0:
            raise UsageError("--radius must be positive")
        if self.seed < 0:
            raise UsageError("--seed must be nonnegative")


# --- I/O helpers ---------------------------------------------------------------------


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(text: str) -> None:
    print(text, file=sys.stderr)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: parse error at line {exc.lineno}, column {exc.colno} (offset {exc.pos}): {exc.msg}") from exc


def _shape(text: Optional[str]) -> Optional[Shape]:
    if text is None:
        return None
    try:
        return Shape.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --shape {text!r}: {exc}") from exc


def _weight(text: str, shape: Shape) -> Weight:
    try:
        w = Weight(parse_list(text))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --weight {text!r}: {exc}") from exc
    if len(w) != shape.total:
        raise UsageError(f"--weight needs {shape.total} entries for {shape}, got {len(w)}")
    return w


def _relations(data, shape: Optional[Shape] = None) -> SuperRelationSet:
    try:
        C = SuperRelationSet.from_json(data)
    except RelationError as exc:
        raise UsageError(str(exc)) from exc
    if shape is not None and (C.m, C.n) != (shape.m, shape.n):
        raise UsageError(f"relation set is for gl({C.m}|{C.n}), not {shape}")
    return C


def _mode(args) -> str:
    return COVARIANT if getattr(args, "covariant", False) else TYPICAL


# --- commands ----------------------------------------------------------------------


def cmd_structure(cfg: RunConfig) -> int:
    shape = cfg.shape
    basis = [{"element": str(el), "i": el.i, "j": el.j, "parity": el.parity(shape)} for el in iter_basis(shape)]
    relations = [relation_to_json(r) for r in presentation_relations(shape)]
    if cfg.flags.get("json"):
        _emit(_dump({"shape": {"m": shape.m, "n": shape.n}, "basis": basis, "relations": relations}), cfg.out)
    else:
        lines = [f"{shape}: {len(basis)} basis elements, {len(relations)} relations"]
        lines += [f"  {b['element']}  parity {b['parity']}" for b in basis]
        lines += [f"  {r['family']:<14} {r['relation']}" for r in relations]
        _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_check_admissible(cfg: RunConfig) -> int:
    data = _load_json(cfg.inputs["relations"])
    if not isinstance(data, dict):
        raise UsageError("relation file must hold a JSON object")
    try:
        if "c1" in data or "c2" in data:
            C = SuperRelationSet.from_json(data)
            parts = {"c1": admissibility_report(C.c1), "c2": admissibility_report(C.c2)}
            result = {"kind": "super", "admissible": not any(parts.values()), "violations": parts}
            result["covariant_admissible"] = is_covariant_admissible(C)
        else:
            C = RelationSet.from_json(data)
            report = admissibility_report(C)
            result = {"kind": "gl", "admissible": not report, "violations": report}
    except RelationError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_dump(result), cfg.out)
    if result["admissible"]:
        _note("admissible")
    else:
        flat = result["violations"] if isinstance(result["violations"], list) else sum(result["violations"].values(), [])
        _note("not admissible: " + "; ".join(flat))
    return EXIT_OK


def _build(cfg: RunConfig, args) -> ModuleSpace:
    mode = _mode(args)
    if getattr(args, "module", None):
        try:
            return module_from_json(_load_json(args.module), cap=cfg.cap)
        except (ValueError, RelationError) as exc:
            raise UsageError(str(exc)) from exc
    shape = cfg.shape
    if shape is None:
        raise UsageError("--shape is required")
    if getattr(args, "random", False):
        rng = random.Random(cfg.seed)
        for _ in range(100):
            C = random_pair(shape, rng)
            t = random_seed(C, rng)
            if t is not None:
                break
        else:
            raise UsageError("no random seed found; try another --seed")
        radius = cfg.radius if cfg.radius is not None else 3
        return build_module(t, C, mode, cap=cfg.cap, radius=radius)
    if args.tableau:
        seed = _tableau(args.tableau)
    elif args.weight:
        seed = Tableau.highest(_weight(args.weight, shape), shape)
    else:
        raise UsageError("give --weight, --tableau, --module or --random")
    if args.relations:
        C = _relations(_load_json(args.relations), shape)
    elif args.standard:
        C = SuperRelationSet.standard(shape.m, shape.n)
    else:
        raise UsageError("give --relations FILE or --standard")
    try:
        return build_module(seed, C, mode, cap=cfg.cap, radius=cfg.radius)
    except RelationError as exc:
        raise UsageError(str(exc)) from exc


def _tableau(path: str) -> Tableau:
    try:
        return Tableau.from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: malformed tableau: {exc}") from exc


def _module_json(M: ModuleSpace, cfg: RunConfig, matrices: bool = False) -> dict:
    data = M.to_json(matrices=matrices)
    data["rng_seed"] = cfg.seed
    data["dim"] = len(M.basis)
    return data


def cmd_build_module(cfg: RunConfig, args) -> int:
    M = _build(cfg, args)
    _emit(_dump(_module_json(M, cfg)), cfg.out)
    state = "finite" if M.finite else ("ball of radius %d" % M.radius if M.radius else "truncated at cap")
    _note(f"{M.shape} {M.mode} module: {len(M.basis)} tableaux ({state}); seed {cfg.seed}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    M = _build(cfg, args)
    reports = run_suite(M, args.suite, seed=cfg.seed, sample_size=args.sample)
    _emit(dumps_reports(reports, timing=args.timing), cfg.out)
    failed = [r for r in reports if r.status == FAIL]
    summary = ", ".join(f"{r.check}={r.status}" for r in reports)
    _note(f"{M.shape} {len(M.basis)} tableaux, seed {cfg.seed}: {summary}")
    for r in reports:
        if r.check == "irreducibility" and "oracle" in r.details:
            _note("irreducible" if r.details["oracle"] else "reducible (proper submodule found)")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_berezinian(cfg: RunConfig, args) -> int:
    M = _build(cfg, args)
    N = M.shape.total
    rows = []
    for t in M.basis:
        series = [berezinian_eigenvalue(k, t) for k in range(1, N + 1)]
        rows.append(
            {
                "tableau": t.to_json(),
                "factored": [str(s) for s in series],
                "coefficients": [[str(c) for c in s.coefficients(cfg.order)] for s in series],
            }
        )
    scalar = highest_weight_scalar(Weight(M.seed.top), M.shape)
    data = {
        "shape": {"m": M.shape.m, "n": M.shape.n},
        "order": cfg.order,
        "highest_weight_scalar": str(scalar),
        "tableaux": rows,
    }
    _emit(_dump(data), cfg.out)
    _note(f"B(t) acts on the top by {scalar}")
    return EXIT_OK


def cmd_export(cfg: RunConfig, args) -> int:
    M = _build(cfg, args)
    try:
        data = _module_json(M, cfg, matrices=True)
    except ActionError as exc:
        raise UsageError(str(exc)) from exc
    data["weight"] = weight_to_json(Weight(M.seed.top), M.shape)
    _emit(_dump(data), cfg.out)
    _note(f"exported {len(M.basis)} tableaux with generator matrices")
    return EXIT_OK


# --- parser ------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", help="m,n")
    common.add_argument("--seed", type=int, default=0, help="random seed (recorded in the output)")
    common.add_argument("--out", help="write the JSON result here instead of stdout")
    common.add_argument("--json", action="store_true", help="JSON output where text is the default")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--module", help="module JSON written by build-module")
    source.add_argument("--weight", help="highest weight, e.g. 3,1,-5 or 1/2,0")
    source.add_argument("--tableau", help="seed tableau JSON file")
    source.add_argument("--relations", help="super relation set JSON file")
    source.add_argument("--standard", action="store_true", help="use the standard relation pair")
    source.add_argument("--random", action="store_true", help="random admissible pair and seed (uses --seed)")
    source.add_argument("--covariant", action="store_true", help="quasi-covariant construction")
    source.add_argument("--cap", type=int, default=20000, help="largest basis to enumerate")
    source.add_argument("--radius", type=int, help="enumerate a ball of this shift radius")

    parser = argparse.ArgumentParser(prog="gtsuper", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("structure", parents=[common], help="basis and relation listing")
    p = sub.add_parser("check-admissible", parents=[common], help="admissibility diagnostics")
    p.add_argument("relations_file", metavar="RELATIONS")
    sub.add_parser("build-module", parents=[common, source], help="enumerate a tableau module")
    p = sub.add_parser("verify", parents=[common, source], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--sample", type=int, help="check relations on this many random tableaux only")
    p.add_argument("--timing", action="store_true", help="include wall times (breaks byte stability)")
    p = sub.add_parser("berezinian", parents=[common, source], help="factored Berezinian eigenvalues")
    p.add_argument("--order", type=int, default=2)
    sub.add_parser("export", parents=[common, source], help="module with generator matrices")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            shape=_shape(args.shape),
            inputs={"relations": getattr(args, "relations_file", None) or getattr(args, "relations", None)},
            out=args.out,
            cap=getattr(args, "cap", 20000),
            radius=getattr(args, "radius", None),
            seed=args.seed,
            order=getattr(args, "order", 2),
            flags={"json": args.json},
        )
        if args.command == "structure":
            if cfg.shape is None:
                raise UsageError("--shape is required")
            return cmd_structure(cfg)
        if args.command == "check-admissible":
            return cmd_check_admissible(cfg)
        handler = {
            "build-module": cmd_build_module,
            "verify": cmd_verify,
            "berezinian": cmd_berezinian,
            "export": cmd_export,
        }[args.command]
        return handler(cfg, args)
    except UsageError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

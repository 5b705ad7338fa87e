"""Command-line entry point: ``twocat <command> ...``.

Exit status is 0 when every check passes, 1 when some axiom check fails
(the report lists witnesses), and 2 for usage, parse or schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .centers import build_ZG, check_g_crossed_axioms, compare_centers, trivial_component_center, validate_braided
from .core2 import Fin2Cat, FinGroup, ValidationReport, Violation, validate_2category
from .equivariant import enumerate_equivariant, forgetful_Phi
from .errors import RequiresTwoFunctors, SearchBudgetExceeded, TwoCatError
from .formats import EXTENSIONS, ParseError, SchemaError, ValidationError, Workspace
from .gaction import GroupAction2, validate_action
from .pseudo import DEFAULT_CAP, identity_pseudofunctor, relative_center, validate_monoidal, validate_pseudofunctor
from .standard import FIXTURE_DIR
from .strictify import BGCaps, check_H_biequivalence, embedding_H, enumerate_BG, strict_action_on_BG

MAX_REPORTED = 100
FAIL, USAGE = 1, 2


class UsageError(TwoCatError):
    pass


# --------------------------------------------------------------------------
# reports


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (str, bool, type(None))):
        return value
    if isinstance(value, float):
        return value
    try:
        return int(value)
    except (TypeError, ValueError):
        return str(value)


def make_report(command, inputs, caps, report: ValidationReport, counts, started, status=None) -> dict:
    shown = [{"axiom": v.axiom, "cells": _plain(v.cells)} for v in report.violations[:MAX_REPORTED]]
    return {
        "command": command,
        "inputs": inputs,
        "caps": caps,
        "status": status or report.status,
        "counts": _plain(counts),
        "violations": {"total": len(report.violations), "shown": shown},
        "wall_time_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def render_text(rep: dict) -> str:
    lines = [f"command: {rep['command']}", f"status: {rep['status']}"]
    for item in rep["inputs"]:
        lines.append(f"input: {item['name']} ({item['kind']}) {item.get('path') or ''}".rstrip())
    lines.append("caps: " + ", ".join(f"{k}={v}" for k, v in rep["caps"].items()))
    lines.append("counts:")
    for key, value in rep["counts"].items():
        lines.append(f"  {key}: {value}")
    total = rep["violations"]["total"]
    lines.append(f"violations: {total}")
    for v in rep["violations"]["shown"]:
        lines.append(f"  {v['axiom']} {v['cells']}")
    if total > len(rep["violations"]["shown"]):
        lines.append(f"  ... {total - len(rep['violations']['shown'])} more")
    lines.append(f"wall_time_ms: {rep['wall_time_ms']}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# name resolution


class Session:
    def __init__(self, validate_on_load: bool, extra_paths=()):
        paths = [str(p) for p in extra_paths] + [str(Path.cwd()), str(FIXTURE_DIR)]
        self.workspace = Workspace(search_paths=paths, validate=validate_on_load)
        self.used: list[str] = []

    def resolve(self, ref: str, kind: str | None = None):
        path = Path(ref)
        if path.suffix in EXTENSIONS.values() and path.is_file():
            names = self.workspace.load(path)
            if not names:
                raise UsageError(f"{ref} contains no documents")
            ref = names[0]
        value = self.workspace.get(ref, kind)
        if ref not in self.used:
            self.used.append(ref)
        return ref, value

    def inputs(self) -> list[dict]:
        out = []
        for name in self.used:
            e = self.workspace.entry(name)
            out.append({"name": name, "kind": e.kind, "path": e.path, "sha256": e.sha256})
        return out


def _same_base(bname: str, B: Fin2Cat, action: GroupAction2):
    if not B.same_tables(action.base):
        raise UsageError(f"action {action.name} does not act on {bname}")


# --------------------------------------------------------------------------
# commands


def cmd_validate(session: Session, args, caps):
    name, value = session.resolve(args.name)
    if isinstance(value, FinGroup):
        return ValidationReport(), {"kind": "group", "order": value.order}
    if isinstance(value, Fin2Cat):
        n0, n1, n2 = value.n0, value.n1, value.n2
        return validate_2category(value), {"kind": "2category", "cells0": n0, "cells1": n1, "cells2": n2}
    report = validate_action(value)
    return report, {"kind": "action", "group_order": value.group.order, "strict": value.strict if report.ok else False}


def cmd_strictify(session: Session, args, caps):
    bname, B = session.resolve(args.base, "2category")
    _, action = session.resolve(args.action, "action")
    _same_base(bname, B, action)
    pre = validate_action(action)
    if not pre.ok:
        return pre, {}
    bg = enumerate_BG(action, BGCaps(search_budget=caps["search_budget"]))
    report = validate_2category(bg.cat).prefixed("B[G]")
    strict = strict_action_on_BG(bg)
    report = report.merged(validate_action(strict).prefixed("L"))
    Hs = embedding_H(bg)
    report = report.merged(validate_pseudofunctor(Hs.H).prefixed("H"), check_H_biequivalence(bg, Hs))
    if report.ok and not strict.strict:
        report = report.merged(ValidationReport((Violation("NotStrictAction", ("L",)),)))
    return report, {"cells0": bg.cat.n0, "cells1": bg.cat.n1, "cells2": bg.cat.n2, "strict": strict.strict}


def cmd_equivariantize(session: Session, args, caps):
    bname, B = session.resolve(args.base, "2category")
    _, action = session.resolve(args.action, "action")
    _same_base(bname, B, action)
    pre = validate_action(action)
    if not pre.ok:
        return pre, {}
    eq = enumerate_equivariant(action, caps["search_budget"])
    report = validate_2category(eq.cat) if eq.cat.n0 else ValidationReport()
    report = report.merged(validate_pseudofunctor(forgetful_Phi(eq)).prefixed("Phi")) if eq.cat.n0 else report
    return report, {"cells0": eq.cat.n0, "cells1": eq.cat.n1, "cells2": eq.cat.n2}


def cmd_zg(session: Session, args, caps):
    bname, B = session.resolve(args.base, "2category")
    _, action = session.resolve(args.action, "action")
    _same_base(bname, B, action)
    pre = validate_action(action)
    if not pre.ok:
        return pre, {}
    counts = {"strictified": False}
    if not action.strict:
        bg = enumerate_BG(action, BGCaps(search_budget=caps["search_budget"]))
        action, B = strict_action_on_BG(bg), bg.cat
        counts = {"strictified": True, "BG_cells0": B.n0, "BG_cells1": B.n1, "BG_cells2": B.n2}
    Z = build_ZG(B, action, caps["search_budget"])
    report = check_g_crossed_axioms(Z)
    counts.update(Z.counts())
    counts["empty_grades"] = [action.group.elements[g] for g in action.group if not Z.component(g)]
    return report, counts


def cmd_center(session: Session, args, caps):
    _, B = session.resolve(args.base, "2category")
    M = trivial_component_center(B)
    report = validate_monoidal(M).merged(validate_braided(M))
    return report, M.counts()


def _center_of(cat):
    return relative_center(identity_pseudofunctor(cat))


def cmd_check_theorem(session: Session, args, caps):
    if args.theorem != "center-equi":
        raise UsageError(f"unknown theorem {args.theorem!r}; available: center-equi")
    bname, B = session.resolve(args.base, "2category")
    _, action = session.resolve(args.action, "action")
    _same_base(bname, B, action)
    pre = validate_action(action)
    if not pre.ok:
        return pre, {}
    cap = caps["search_budget"]
    catalog = enumerate_equivariant(action, cap)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=1) as pool:
            future = pool.submit(_center_of, catalog.cat)
            result = compare_centers(B, action, cap, catalog=catalog, center_of_equivariant=future)
    else:
        result = compare_centers(B, action, cap, catalog=catalog)
    return result.report, result.counts()


COMMANDS = {
    "validate": cmd_validate,
    "strictify": cmd_strictify,
    "equivariantize": cmd_equivariantize,
    "zg": cmd_zg,
    "center": cmd_center,
    "check-theorem": cmd_check_theorem,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", type=int, default=DEFAULT_CAP, metavar="N",
                        help="search budget: maximum candidate assignments per enumeration")
    common.add_argument("--out", type=Path, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, metavar="K", help="worker processes")
    common.add_argument("--path", action="append", default=[], type=Path,
                        help="extra directory searched for .grp/.2cat/.act files")

    parser = argparse.ArgumentParser(prog="twocat", description="Finite 2-categories with group actions.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("validate", parents=[common], help="validate a group, 2-category or action")
    p.add_argument("name")
    for cmd, text in (("strictify", "build B[G] and check the biequivalence"),
                      ("equivariantize", "enumerate B^G"),
                      ("zg", "build and check the braided G-crossed center")):
        p = sub.add_parser(cmd, parents=[common], help=text)
        p.add_argument("base")
        p.add_argument("action")
    p = sub.add_parser("center", parents=[common], help="braided center Z(B)")
    p.add_argument("base")
    p = sub.add_parser("check-theorem", parents=[common], help="compare Z(Phi)^G with Z(B^G)")
    p.add_argument("theorem")
    p.add_argument("base")
    p.add_argument("action")
    return parser


def run_command(argv) -> tuple[int, dict]:
    """Run one command and return ``(exit status, report)`` without printing."""
    return execute(build_parser().parse_args(argv))


def execute(args: argparse.Namespace) -> tuple[int, dict]:
    started = time.perf_counter()
    caps = {"search_budget": args.caps}
    command = args.command if args.command != "check-theorem" else f"check-theorem {args.theorem}"
    session = Session(validate_on_load=args.command != "validate", extra_paths=args.path)
    if args.caps <= 0 or args.jobs <= 0:
        err = ValidationReport((Violation("UsageError", ("--caps and --jobs must be positive",)),))
        return USAGE, make_report(command, [], caps, err, {}, started, "error")
    try:
        report, counts = COMMANDS[args.command](session, args, caps)
    except (ParseError, SchemaError, ValidationError, UsageError) as exc:
        cells = (str(exc),)
        if isinstance(exc, ValidationError):
            cells = (str(exc), exc.axiom, *exc.witness)
        err = ValidationReport((Violation(type(exc).__name__, cells),))
        return USAGE, make_report(command, session.inputs(), caps, err, {}, started, "error")
    except (SearchBudgetExceeded, RequiresTwoFunctors) as exc:
        err = ValidationReport((Violation(type(exc).__name__, (str(exc),)),))
        return FAIL, make_report(command, session.inputs(), caps, err, {}, started, "fail")
    rep = make_report(command, session.inputs(), caps, report, counts, started)
    return (0 if report.ok else FAIL), rep


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else 0
    status, rep = execute(args)
    text = json.dumps(rep, indent=2) + "\n" if args.format == "json" else render_text(rep)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if rep["status"] == "error":
        sys.stderr.write(f"twocat: {rep['violations']['shown'][0]['cells'][0]}\n")
    return status


if __name__ == "__main__":
    sys.exit(main())

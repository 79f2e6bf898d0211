"""Command-line interface.

Data goes to stdout, diagnostics to stderr.  Exit status: 0 success or
compliant, 1 violations found, 2 input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path

from inventio.carneades import ProofStandard, evaluate
from inventio.casefile import CaseFile, CaseFileError, load_case_file
from inventio.dot import export_dot
from inventio.dung import admissible_sets, derive_af, grounded_extension, preferred_extensions
from inventio.errors import ArgumentationError
from inventio.pleadings import InventioMode, Regime, check_award, classify_pattern, enumerate_decisions


class ExitStatus(IntEnum):
    OK = 0
    VIOLATIONS = 1
    INPUT_ERROR = 2
    INTERNAL_ERROR = 3


class InputError(Exception):
    pass


@dataclass
class Result:
    status: ExitStatus = ExitStatus.OK
    records: list[dict] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)


def _fmt(ids) -> str:
    return "{" + ", ".join(sorted(ids)) + "}"


# -- subcommands -----------------------------------------------------------------


def cmd_evaluate(case: CaseFile, args) -> Result:
    labeling = evaluate(case.graph, case.audience, args.standard)
    out = Result()
    for sid in sorted(case.graph.statements):
        status = labeling[sid].value
        text = case.graph.statements[sid].text
        out.records.append({"statement": sid, "status": status, "text": text})
        out.lines.append(f"{sid}\t{status}\t{text}")
    return out


def cmd_extensions(case: CaseFile, args) -> Result:
    af = derive_af(case.graph)
    if args.semantics == "grounded":
        extensions = [grounded_extension(af)]
    elif args.semantics == "admissible":
        extensions = admissible_sets(af)
    else:
        extensions = list(preferred_extensions(af))
    out = Result()
    for ext in sorted(extensions, key=lambda e: (len(e), sorted(e))):
        out.records.append({"semantics": args.semantics, "extension": sorted(ext)})
        out.lines.append(f"{args.semantics}\t{_fmt(ext)}")
    return out


def cmd_check_award(case: CaseFile, args) -> Result:
    if case.award is None:
        raise InputError("case file has no award section")
    report = check_award(case.award, case.record, args.regime, args.mode)
    out = Result(ExitStatus.OK if report.compliant else ExitStatus.VIOLATIONS)
    for v in report.violations:
        out.records.append({"record": "violation", "kind": v.kind.value, "item": v.item, "detail": v.detail})
        out.lines.append(f"VIOLATION\t{v.kind.value}\t{v.item}\t{v.detail}")
    for w in report.warnings:
        out.records.append(
            {"record": "warning", "kind": "unaddressed-argument", "item": w.item, "detail": str(w.proposal)}
        )
        out.lines.append(f"WARNING\tunaddressed-argument\t{w.item}\t{w.proposal}")
    verdict = "compliant" if report.compliant else "non-compliant"
    out.records.append(
        {"record": "summary", "compliant": report.compliant, "regime": args.regime, "mode": args.mode,
         "violations": len(report.violations), "warnings": len(report.warnings)}
    )
    out.lines.append(f"RESULT\t{verdict}\tregime={args.regime}\tmode={args.mode}")
    return out


def cmd_enumerate(case: CaseFile, args) -> Result:
    templates = enumerate_decisions(case.record, args.item, args.mode)
    out = Result()
    for t in sorted(templates, key=lambda t: (t.conclusion, len(t.grounds), sorted(t.grounds))):
        out.records.append(
            {"item": args.item, "conclusion": t.conclusion, "grounds": sorted(t.grounds), "open": t.open}
        )
        out.lines.append(f"{args.item}\t{t}")
    return out


def cmd_classify(case: CaseFile, args) -> Result:
    if case.award is None:
        raise InputError("case file has no award section")
    out = Result()
    for ai in case.award.items:
        label = classify_pattern(ai, case.record)
        name = label.value if label else "no-match"
        finding = label.finding if label else None
        out.records.append({"item": ai.item, "pattern": name, "finding": finding})
        out.lines.append(f"{ai.item}\t{name}" + (f"\t({finding})" if finding else ""))
    return out


def cmd_export_dot(case: CaseFile, args) -> Result:
    labeling = evaluate(case.graph, case.audience, args.standard) if args.evaluated else None
    text = export_dot(case.graph, labeling)
    return Result(records=[{"dot": text}], lines=[text.rstrip("\n")])


COMMANDS = {
    "evaluate": cmd_evaluate,
    "extensions": cmd_extensions,
    "check-award": cmd_check_award,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "export-dot": cmd_export_dot,
}


# -- plumbing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("case", help="case file, or a directory of *.case files")
    common.add_argument("--format", choices=["text", "machine-readable"], default="text")

    parser = argparse.ArgumentParser(prog="inventio", description="Structured argumentation and award checking")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", parents=[common], help="label every statement")
    p.add_argument("--standard", choices=[s.value for s in ProofStandard], default="preponderance")

    p = sub.add_parser("extensions", parents=[common], help="Dung extensions of the derived framework")
    p.add_argument("--semantics", choices=["preferred", "grounded", "admissible"], default="preferred")

    p = sub.add_parser("check-award", parents=[common], help="check the award against a regime")
    p.add_argument("--regime", choices=[r.value for r in Regime], required=True)
    p.add_argument("--mode", choices=[m.value for m in InventioMode], required=True)

    p = sub.add_parser("enumerate", parents=[common], help="decision space for one item")
    p.add_argument("--item", required=True)
    p.add_argument("--mode", choices=[m.value for m in InventioMode], required=True)

    sub.add_parser("classify", parents=[common], help="justification pattern per award item")

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT text")
    p.add_argument("--evaluated", action="store_true", help="mark statuses from an evaluation")
    p.add_argument("--standard", choices=[s.value for s in ProofStandard], default="preponderance")
    return parser


def run_one(path: Path, args) -> Result:
    try:
        case = load_case_file(path)
        return COMMANDS[args.command](case, args)
    except OSError as exc:
        return Result(ExitStatus.INPUT_ERROR, errors=[f"{path}: {exc.strerror or exc}"])
    except (CaseFileError, InputError, ArgumentationError) as exc:
        return Result(ExitStatus.INPUT_ERROR, errors=[f"{path}: {exc}"])
    except Exception as exc:  # noqa: BLE001
        return Result(ExitStatus.INTERNAL_ERROR, errors=[f"{path}: internal error: {type(exc).__name__}: {exc}"])


def _case_paths(target: str) -> list[Path]:
    path = Path(target)
    if path.is_dir():
        return sorted(path.glob("*.case"))
    return [path]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors exit 2, --help exits 0
        return int(exc.code or 0)

    paths = _case_paths(args.case)
    if not paths:
        print(f"error: no *.case files in {args.case}", file=sys.stderr)
        return ExitStatus.INPUT_ERROR
    if len(paths) == 1:
        results = [run_one(paths[0], args)]
    else:
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda p: run_one(p, args), paths))

    many = Path(args.case).is_dir()
    for path, result in zip(paths, results):
        for err in result.errors:
            print(f"error: {err}", file=sys.stderr)
        if args.format == "machine-readable":
            for rec in result.records:
                rec = {"case": str(path), **rec} if many else rec
                print(json.dumps(rec, ensure_ascii=False))
        else:
            if many:
                print(f"# {path}")
            for line in result.lines:
                print(line)
    return max(r.status for r in results)


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

    admcovers z3 lambda1 --n 2 --m 2
    admcovers z3 verify --max-total 12
    admcovers z3 integral --n 5 --m 2 --trace
    admcovers z3 table --max-total 8
    admcovers z2 lambda1 --branch 8
    admcovers z2 lambda2 --branch 8 --form closed-printed
    admcovers z2 check --max-branch 40

Exit status: 0 on success, 1 on bad arguments, 2 when a verification or
forms check fails.  Every command accepts ``--format text|json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence, TextIO

from . import hodge_z2, integrals_z3, lambda1_z3
from .arith import format_rational

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def rational_json(q: Fraction) -> dict[str, str]:
    return {"numerator": str(q.numerator), "denominator": str(q.denominator)}


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_json(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _text(obj: Any) -> str:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (list, tuple)):
        return "(" + ",".join(_text(v) for v in obj) + ")"
    if isinstance(obj, dict):
        return " ".join(f"{k}={_text(v)}" for k, v in obj.items())
    return str(obj)


class Document:
    """One command's output: kind, inputs, result records, discrepancies."""

    def __init__(self, kind: str, inputs: dict):
        self.kind = kind
        self.inputs = inputs
        self.metadata: dict = {}
        self.results: list[dict] = []
        self.discrepancies: list[dict] = []

    def add(self, kind: str, **payload) -> None:
        self.results.append({"kind": kind, **payload})

    def as_json(self) -> dict:
        doc = {"kind": self.kind, "inputs": self.inputs}
        if self.metadata:
            doc["metadata"] = self.metadata
        doc["results"] = self.results
        if self.discrepancies:
            doc["discrepancies"] = self.discrepancies
        return _jsonable(doc)

    def write(self, fmt: str, out: TextIO) -> None:
        if fmt == "json":
            json.dump(self.as_json(), out, indent=2)
            out.write("\n")
            return
        out.write(f"# {self.kind} {_text(self.inputs)}\n")
        for k, v in self.metadata.items():
            out.write(f"# {k}: {_text(v)}\n")
        for rec in self.results:
            body = {k: v for k, v in rec.items() if k not in ("kind", "terms")}
            out.write(_text(body) + "\n")
            for term in rec.get("terms", ()):
                out.write("    " + _text(term) + "\n")
        for d in self.discrepancies:
            out.write("! discrepancy " + _text(d) + "\n")


# z3 -------------------------------------------------------------------------


def cmd_z3_lambda1(args) -> tuple[Document, int]:
    expr = lambda1_z3.lambda1_expression(args.n, args.m)
    doc = Document("z3-lambda1", {"n": args.n, "m": args.m})
    doc.metadata["pullback_factor"] = expr.pullback_factor
    for d, a in expr.entries.items():
        doc.add("coefficient", divisor=[d.i, d.j], alpha=a)
    return doc, EXIT_OK


def _verification_record(doc: Document, report: lambda1_z3.VerificationReport) -> None:
    doc.add(
        "verification",
        n=report.n,
        m=report.m,
        total_curves=report.total_curves,
        family_counts={f.value: report.family_counts.get(f, 0) for f in lambda1_z3.Family},
        failures=[
            {"curve": [[b.omega_count, b.omegabar_count] for b in c.blocks], "computed": got, "expected": want}
            for c, got, want in report.failures
        ],
    )


def cmd_z3_verify(args) -> tuple[Document, int]:
    if args.max_total is not None:
        if args.n is not None or args.m is not None:
            raise UsageError("give either --max-total or --n/--m, not both")
        reports = lambda1_z3.verify_range(args.max_total)
        doc = Document("z3-verify", {"max_total": args.max_total})
    else:
        if args.n is None or args.m is None:
            raise UsageError("z3 verify needs --n and --m, or --max-total")
        reports = [lambda1_z3.verify_theorem(args.n, args.m)]
        doc = Document("z3-verify", {"n": args.n, "m": args.m})
    for r in reports:
        _verification_record(doc, r)
    failures = sum(len(r.failures) for r in reports)
    doc.metadata["total_curves"] = sum(r.total_curves for r in reports)
    doc.metadata["total_failures"] = failures
    return doc, EXIT_FAILED if failures else EXIT_OK


def _integral_discrepancy(doc: Document, key: integrals_z3.IntegralKey, value: Fraction) -> None:
    printed = integrals_z3.printed_discrepancy(key)
    if printed is not None:
        doc.discrepancies.append(
            {
                "key": [key.n, key.m],
                "computed": value,
                "printed": printed,
                "note": "published table value differs from the recursion",
            }
        )


def cmd_z3_integral(args) -> tuple[Document, int]:
    key = integrals_z3.IntegralKey(args.n, args.m)
    value = integrals_z3.hodge_integral(key)
    doc = Document("z3-integral", {"n": args.n, "m": args.m})
    rec = {"n": args.n, "m": args.m, "value": value}
    if args.trace:
        if integrals_z3.is_base_case(key):
            doc.metadata["base_case"] = True
            rec["terms"] = []
        else:
            canon = key.canonical()
            if canon != key:
                doc.metadata["evaluated_as"] = [canon.n, canon.m]
            rec["terms"] = [
                {
                    "i": t.i,
                    "j": t.j,
                    "coefficient": t.coefficient,
                    "combinatorial_factor": t.combinatorial_factor,
                    "left_key": [t.left_key.n, t.left_key.m],
                    "right_key": [t.right_key.n, t.right_key.m],
                    "term_value": t.term_value,
                }
                for t in integrals_z3.trace_terms(key)
            ]
    doc.add("integral", **rec)
    _integral_discrepancy(doc, key, value)
    return doc, EXIT_OK


def cmd_z3_table(args) -> tuple[Document, int]:
    doc = Document("z3-table", {"max_total": args.max_total})
    for key, value in integrals_z3.integral_table(args.max_total):
        doc.add("integral", n=key.n, m=key.m, value=value)
        _integral_discrepancy(doc, key, value)
    return doc, EXIT_OK


# z2 -------------------------------------------------------------------------


def cmd_z2_lambda1(args) -> tuple[Document, int]:
    doc = Document("z2-lambda1", {"branch": args.branch})
    for d, a in hodge_z2.lambda1_expression_z2(args.branch).items():
        doc.add("coefficient", divisor=d.i, alpha=a)
    return doc, EXIT_OK


def cmd_z2_lambda2(args) -> tuple[Document, int]:
    expr = hodge_z2.lambda2_expression(args.branch, args.form)
    doc = Document("z2-lambda2", {"branch": args.branch, "form": args.form})
    doc.metadata["normalizations"] = list(expr.normalizations)
    for c, a in expr.coefficients.items():
        doc.add("coefficient", stratum=list(c.triple), alpha=a)
        if args.form == "closed-printed":
            composed = hodge_z2.alpha_z2_lambda2_composed(c)
            if composed != a:
                doc.discrepancies.append(
                    {
                        "stratum": list(c.triple),
                        "printed": a,
                        "composed": composed,
                        "note": "printed all-even closed form omits 2*i2^2 in the numerator",
                    }
                )
    return doc, EXIT_OK


def cmd_z2_check(args) -> tuple[Document, int]:
    doc = Document("z2-check", {"max_branch": args.max_branch})
    printed = hodge_z2.check_forms(args.max_branch, corrected=False)
    corrected = hodge_z2.check_forms(args.max_branch, corrected=True)
    for label, rows in (("closed-printed", printed), ("closed-corrected", corrected)):
        for c, comp, closed in rows:
            doc.add("forms-check", form=label, stratum=list(c.triple), composed=comp, closed=closed)
    doc.metadata["printed_mismatches"] = len(printed)
    doc.metadata["corrected_mismatches"] = len(corrected)
    return doc, EXIT_FAILED if corrected else EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="admcovers", description="Hodge classes on cyclic admissible cover spaces.")
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    z3 = top.add_parser("z3", help="degree-3 cyclic covers").add_subparsers(dest="command", required=True)
    p = leaf(z3, "lambda1", cmd_z3_lambda1, "boundary coefficients of lambda_1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = leaf(z3, "verify", cmd_z3_verify, "check lambda_1 against every curve class")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-total", type=int)
    p = leaf(z3, "integral", cmd_z3_integral, "integral of lambda_1^(n+m-3)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p = leaf(z3, "table", cmd_z3_table, "table of integrals with n >= m")
    p.add_argument("--max-total", type=int, required=True)

    z2 = top.add_parser("z2", help="degree-2 covers").add_subparsers(dest="command", required=True)
    p = leaf(z2, "lambda1", cmd_z2_lambda1, "boundary coefficients of lambda_1")
    p.add_argument("--branch", type=int, required=True)
    p = leaf(z2, "lambda2", cmd_z2_lambda2, "codimension-2 coefficients of lambda_2")
    p.add_argument("--branch", type=int, required=True)
    p.add_argument("--form", choices=hodge_z2.FORMS, default="composed")
    p = leaf(z2, "check", cmd_z2_check, "compare closed and composed lambda_2 forms")
    p.add_argument("--max-branch", type=int, required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, code = args.func(args)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        stderr.write(parser.format_usage())
        return EXIT_USAGE
    except ValueError as exc:
        stderr.write(f"admcovers: error: {exc}\n")
        stderr.write(parser.format_usage())
        return EXIT_USAGE
    doc.write(args.format, stdout)
    if code == EXIT_FAILED:
        stderr.write("admcovers: check failed\n")
    return code


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Every subcommand writes one report to stdout. The default format is JSON
with the fixed top-level keys ``command``, ``params``, ``result``,
``witnesses`` and ``verified_to``, in that order, so identical inputs give
byte-identical output; ``--format table`` renders the same report as text,
and ``--format csv`` is accepted only by ``classify``. Messages that are
not part of a report go to stderr.

Exit status: 0 when the run completed and every verification it performed
passed, 1 when a verification failed or a theorem cross-check was violated,
2 on usage errors (including unknown lemma or case ids).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classify, exclusions, identities, qseries, repcount
from .repcount import QuaternaryForm


def _form_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected a form triple like 1,2,4")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer in form triple: {text!r}") from None
    try:
        QuaternaryForm(a, b, c)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return a, b, c


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexforms",
        description="Representation counts, identity checks, and universality "
                    "classification for forms a*x^2 + b*y^2 + c*(z^2+zw+w^2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, with_csv=False):
        choices = ["json", "csv", "table"] if with_csv else ["json", "table"]
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("count", help="representation count of n by a form")
    p.add_argument("--form", type=_form_triple, required=True, metavar="A,B,C")
    p.add_argument("--n", type=_nonnegative, required=True)
    add_format(p)

    p = sub.add_parser("hex", help="count of z^2+zw+w^2 = n over (z, w)")
    p.add_argument("--n", type=_nonnegative, required=True)
    add_format(p)

    p = sub.add_parser("series", help="coefficients of a theta series")
    p.add_argument("--which", choices=["phi", "psi", "hex"], required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    add_format(p)

    p = sub.add_parser("exclusion", help="is n in a lemma's exclusion set")
    p.add_argument("--lemma", choices=list(exclusions.lemma_ids()), required=True)
    p.add_argument("--n", type=_nonnegative, required=True)
    add_format(p)

    p = sub.add_parser("verify-lemma", help="check a lemma against brute force")
    p.add_argument("--lemma", choices=list(exclusions.lemma_ids()), required=True)
    p.add_argument("--bound", type=_nonnegative, default=5000)
    add_format(p)

    p = sub.add_parser("identities", help="verify the series identities")
    p.add_argument("--case", choices=["base", *identities.CASE_IDS], required=True)
    p.add_argument("--order", type=_nonnegative, default=None)
    add_format(p)

    p = sub.add_parser("universal", help="gap scan plus escalator test")
    p.add_argument("--form", type=_form_triple, required=True, metavar="A,B,C")
    p.add_argument("--bound", type=_positive, default=classify.DEFAULT_SCAN_BOUND)
    add_format(p)

    p = sub.add_parser("escalator", help="test the six escalator values")
    p.add_argument("--form", type=_form_triple, required=True, metavar="A,B,C")
    add_format(p)

    p = sub.add_parser("classify", help="scan a box for universal triples")
    p.add_argument("--amax", type=_positive, required=True)
    p.add_argument("--bmax", type=_positive, required=True)
    p.add_argument("--cmax", type=_positive, required=True)
    p.add_argument("--bound", type=_positive, default=classify.DEFAULT_SCAN_BOUND)
    p.add_argument("--allow-small-box", action="store_true",
                   help="scan a box too small to contain the full classification")
    add_format(p, with_csv=True)

    p = sub.add_parser("ternary-gap", help="first gap of a*x^2 + c*(y^2+yz+z^2)")
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--c", type=_positive, required=True)
    p.add_argument("--bound", type=_positive, default=classify.DEFAULT_SCAN_BOUND)
    add_format(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        report, status = handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render(report, args), end="")
    return status


run = main  # alias: run(argv) -> exit status


def _report(command: str, params: dict, result, witnesses=(), verified_to=None) -> dict:
    return {
        "command": command,
        "params": params,
        "result": result,
        "witnesses": list(witnesses),
        "verified_to": verified_to,
    }


def _cmd_count(args):
    value = repcount.count_quaternary(args.form, args.n)
    return _report("count", {"form": list(args.form), "n": args.n}, value), 0


def _cmd_hex(args):
    return _report("hex", {"n": args.n}, repcount.count_hex(args.n)), 0


def _cmd_series(args):
    builder = {
        "phi": qseries.phi_series,
        "psi": qseries.psi_series,
        "hex": qseries.hex_theta_series,
    }[args.which]
    coeffs = list(builder(args.order).coeffs)
    return _report("series", {"which": args.which, "order": args.order}, coeffs), 0


def _cmd_exclusion(args):
    value = exclusions.excluded_for(args.lemma, args.n)
    return _report("exclusion", {"lemma": args.lemma, "n": args.n}, value), 0


def _cmd_verify_lemma(args):
    verification = exclusions.verify_lemma(args.lemma, args.bound)
    witnesses = [
        {"n": d.n, "representable": d.representable, "excluded": d.excluded}
        for d in verification.discrepancies
    ]
    report = _report(
        "verify-lemma",
        {"lemma": args.lemma, "bound": args.bound},
        {"verified": verification.verified, "discrepancy_count": len(witnesses)},
        witnesses,
        verified_to=args.bound if verification.verified else None,
    )
    return report, 0 if verification.verified else 1


def _identity_check_dict(check):
    return {
        "id": check.identity_id,
        "verified": check.verified,
        "failed_at": check.failed_at,
        "lhs": check.lhs_value,
        "rhs": check.rhs_value,
    }


def _cmd_identities(args):
    if args.case == "base":
        order = identities.DEFAULT_BASE_ORDER if args.order is None else args.order
        checks = identities.verify_base_identities(order)
        ok = all(c.verified for c in checks)
        result = {"checks": [_identity_check_dict(c) for c in checks], "verified": ok}
        witnesses = [c.failed_at for c in checks if c.failed_at is not None]
    else:
        order = identities.DEFAULT_CASE_ORDER if args.order is None else args.order
        rel = identities.verify_coefficient_relations(args.case, order)
        ok = rel.verified and rel.routes_agree
        result = {
            "enumeration": _identity_check_dict(rel.enumeration),
            "series": _identity_check_dict(rel.series),
            "routes_agree": rel.routes_agree,
            "verified": ok,
        }
        witnesses = [c.failed_at for c in (rel.enumeration, rel.series)
                     if c.failed_at is not None]
    report = _report(
        "identities", {"case": args.case, "order": order}, result,
        witnesses, verified_to=order if ok else None,
    )
    return report, 0 if ok else 1


def _cmd_universal(args):
    gap_report = classify.is_universal(QuaternaryForm(*args.form), args.bound)
    result = {
        "universal_to_bound": gap_report.universal_to_bound,
        "first_gap": gap_report.first_gap,
        "escalator": {
            "passed": gap_report.escalator.passed,
            "failed_at": gap_report.escalator.failed_at,
        },
        "theorem_violation": gap_report.theorem_violation,
    }
    witnesses = [n for n in (gap_report.first_gap, gap_report.escalator.failed_at)
                 if n is not None]
    report = _report("universal", {"form": list(args.form), "bound": args.bound},
                     result, witnesses, verified_to=args.bound)
    return report, 1 if gap_report.theorem_violation else 0


def _cmd_escalator(args):
    verdict = classify.escalator_passes(QuaternaryForm(*args.form))
    result = {"passed": verdict.passed, "failed_at": verdict.failed_at}
    witnesses = [] if verdict.passed else [verdict.failed_at]
    return _report("escalator", {"form": list(args.form)}, result, witnesses), 0


def _cmd_classify(args):
    report = classify.classify_all(
        args.amax, args.bmax, args.cmax, args.bound,
        enforce_minimum_box=not args.allow_small_box,
    )
    result = {
        "universal_triples": [list(t) for t in report.universal_triples],
        "count": len(report.universal_triples),
        "theorem_violations": [list(t) for t in report.theorem_violations],
    }
    witnesses = [{"triple": list(r.triple), "first_gap": r.first_gap}
                 for r in report.rejections]
    out = _report(
        "classify",
        {"amax": args.amax, "bmax": args.bmax, "cmax": args.cmax, "bound": args.bound},
        result, witnesses, verified_to=args.bound,
    )
    return out, 1 if report.theorem_violations else 0


def _cmd_ternary_gap(args):
    gap = classify.ternary_first_gap(args.a, args.c, args.bound)
    result = {"first_gap": gap, "verdict": "gap-found" if gap is not None else "inconclusive"}
    witnesses = [gap] if gap is not None else []
    report = _report("ternary-gap", {"a": args.a, "c": args.c, "bound": args.bound},
                     result, witnesses, verified_to=args.bound)
    return report, 0


_HANDLERS = {
    "count": _cmd_count,
    "hex": _cmd_hex,
    "series": _cmd_series,
    "exclusion": _cmd_exclusion,
    "verify-lemma": _cmd_verify_lemma,
    "identities": _cmd_identities,
    "universal": _cmd_universal,
    "escalator": _cmd_escalator,
    "classify": _cmd_classify,
    "ternary-gap": _cmd_ternary_gap,
}


def _render(report: dict, args) -> str:
    fmt = getattr(args, "format", "json")
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_table(report)


def _render_csv(report: dict) -> str:
    # Only the classification table has a CSV form: one universal triple per row.
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "b", "c"])
    for triple in report["result"]["universal_triples"]:
        writer.writerow(triple)
    return buf.getvalue()


def _render_table(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key, value in report["params"].items():
        lines.append(f"  {key}: {value}")
    lines.append("result:")
    result = report["result"]
    if isinstance(result, dict):
        for key, value in result.items():
            lines.append(f"  {key}: {value}")
    else:
        lines.append(f"  {result}")
    if report["witnesses"]:
        lines.append(f"witnesses: {report['witnesses']}")
    if report["verified_to"] is not None:
        lines.append(f"verified to: {report['verified_to']}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    sys.exit(main())

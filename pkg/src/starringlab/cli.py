"""Command-line front end for the verification engine.

Subcommands
-----------
verify             run a law suite on an instance and emit a report
gallery            run the curated counterexample suite
classify-relation  compute and classify one of the derived order relations
list-laws          print the registered laws, scopes and coverage tags
audit-registry     check that every statement tag has a law or an
                   out-of-scope marker

Exit codes: 0 all executed laws matched their expected status, 1 at least
one mismatch, 2 usage or configuration error.  The environment variable
STARRINGLAB_BUDGET_MS caps bounded-search time; laws past the budget are
reported Unknown.
"""

import argparse
import json
import os
import sys

from . import verifier
from .cones import OrderName, relation
from .relorder import classify
from .starring import (
    BUILTIN_INSTANCES,
    generate_probes,
    get_instance,
    instance_from_json,
)


class UsageError(Exception):
    pass


def _load_instance(name_or_path):
    if name_or_path in BUILTIN_INSTANCES:
        return get_instance(name_or_path)
    if os.path.exists(name_or_path):
        try:
            with open(name_or_path, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError("cannot read instance file %s: %s" % (name_or_path, exc))
        try:
            return instance_from_json(obj)
        except KeyError as exc:
            raise UsageError(
                "malformed instance file %s: missing field %s" % (name_or_path, exc)
            )
        except (TypeError, ValueError) as exc:
            raise UsageError("malformed instance file %s: %s" % (name_or_path, exc))
    raise UsageError(
        "unknown instance %r; builtins: %s"
        % (name_or_path, ", ".join(sorted(BUILTIN_INSTANCES)))
    )


def _budget_ms():
    raw = os.environ.get("STARRINGLAB_BUDGET_MS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("STARRINGLAB_BUDGET_MS must be an integer, got %r" % raw)
    if value <= 0:
        raise UsageError("STARRINGLAB_BUDGET_MS must be positive")
    return value


def _emit(text, output):
    if output is None or output == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _add_run_args(sub, with_suite):
    sub.add_argument("--instance", required=True,
                     help="builtin name or path to an instance JSON file")
    if with_suite:
        sub.add_argument("--suite", default="all",
                         help="law suite to run (default: all)")
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--probes", type=int, default=64,
                     help="probe count before star/negation closure")
    sub.add_argument("--depth", type=int, default=8,
                     help="bounded-search depth for memberships")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--output", default=None,
                     help="output path (default: standard output)")


def build_parser():
    parser = argparse.ArgumentParser(prog="starringlab")
    subs = parser.add_subparsers(dest="command")

    _add_run_args(subs.add_parser("verify", help="run a law suite"), True)
    _add_run_args(subs.add_parser("gallery", help="run the counterexample suite"),
                  False)

    cls = subs.add_parser("classify-relation",
                          help="classify a derived order relation")
    _add_run_args(cls, False)
    cls.add_argument("--order", required=True,
                     choices=sorted(o.value for o in OrderName))

    ll = subs.add_parser("list-laws", help="print the law registry")
    ll.add_argument("--format", choices=("json", "text"), default="text")
    ll.add_argument("--output", default=None)

    ar = subs.add_parser("audit-registry", help="audit statement-tag coverage")
    ar.add_argument("--format", choices=("json", "text"), default="text")
    ar.add_argument("--output", default=None)

    return parser


def _cmd_verify(args, suite):
    inst = _load_instance(args.instance)
    report = verifier.run_suite(
        inst,
        suite=suite,
        seed=args.seed,
        probe_count=args.probes,
        search_depth=args.depth,
        budget_ms=_budget_ms(),
    )
    text = report.dumps() if args.format == "json" else report.render_text()
    _emit(text, args.output)
    return 0 if report.ok else 1


def _cmd_classify(args):
    inst = _load_instance(args.instance)
    order = OrderName(args.order)
    probes = generate_probes(inst, args.seed, args.probes)
    rel = relation(inst, probes, order, args.depth)
    cls = classify(rel.rel)
    payload = {
        "instance": inst.id,
        "order": order.value,
        "seed": args.seed,
        "probeCount": args.probes,
        "provenance": rel.provenance,
        "incomplete": rel.incomplete,
        "classification": {
            "reflexive": cls.reflexive,
            "transitive": cls.transitive,
            "antisymmetric": cls.antisymmetric,
            "symmetric": cls.symmetric,
            "preorder": cls.preorder,
            "partialOrder": cls.partial_order,
            "equivalence": cls.equivalence,
            "hasInterpolation": cls.has_interpolation,
            "hasRieszInterpolation": cls.has_riesz_interpolation,
            "separative": cls.separative,
        },
    }
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        lines = ["%s on %s (%s)" % (order.value, inst.id, rel.provenance)]
        for key, val in sorted(payload["classification"].items()):
            lines.append("  %-22s %s" % (key, val))
        text = "\n".join(lines)
    _emit(text, args.output)
    return 0


def _cmd_list_laws(args):
    rows = verifier.list_laws()
    if args.format == "json":
        text = json.dumps(rows, sort_keys=True, indent=2)
    else:
        lines = []
        for row in rows:
            tags = (" [%s]" % ", ".join(row["tags"])) if row["tags"] else ""
            lines.append(
                "%-30s %-14s %s%s" % (row["lawId"], row["suite"], row["scope"], tags)
            )
        text = "\n".join(lines)
    _emit(text, args.output)
    return 0


def _cmd_audit(args):
    audit = verifier.audit_registry()
    if args.format == "json":
        text = json.dumps(audit, sort_keys=True, indent=2)
    else:
        lines = ["coverage ok: %s" % audit["ok"]]
        if audit["missing"]:
            lines.append("missing tags: %s" % ", ".join(audit["missing"]))
        lines.append("covered tags: %d" % len(audit["covered"]))
        lines.append("out of scope: %s" % ", ".join(audit["outOfScope"]))
        text = "\n".join(lines)
    _emit(text, args.output)
    return 0 if audit["ok"] else 1


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; preserve both
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args, args.suite)
        if args.command == "gallery":
            return _cmd_verify(args, "gallery")
        if args.command == "classify-relation":
            return _cmd_classify(args)
        if args.command == "list-laws":
            return _cmd_list_laws(args)
        if args.command == "audit-registry":
            return _cmd_audit(args)
        parser.print_usage(sys.stderr)
        return 2
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front door.

Subcommands:

* ``lab algebra``    -- seeded batch checks on sp(2n, R) (rank/kernel or
                        closed-form classification), JSON or CSV reports.
* ``lab omega``      -- analyze the invariant 2-form of one element given
                        as a JSON matrix of rationals.
* ``lab cohomology`` -- dimension reports for a chosen model and theories.
* ``lab suite``      -- run every acceptance criterion and print an
                        expected-vs-computed table.

Exit codes: 0 success, 1 precondition or computation failure (with a JSON
error record on stdout), 2 usage errors.  Identical arguments and seed
produce byte-identical report files; set LAB_OUTPUT_DIR to redirect any
--output path into a fixed directory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys

from . import algebra_forms as forms
from . import cohomology as coh
from . import lie_core as lie
from . import suite as acceptance
from .linalg import Matrix
from .models import (build_polynomial_model, build_suspension_model,
                     build_torus_model)

USAGE_EXIT = 2
FAILURE_EXIT = 1


def _resolve_output(path: str | None) -> str | None:
    if path is None:
        return None
    outdir = os.environ.get("LAB_OUTPUT_DIR")
    if outdir:
        return os.path.join(outdir, os.path.basename(path))
    return path


def _emit(text: str, path: str | None) -> None:
    target = _resolve_output(path)
    if target is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(target, "w") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _error(op: str, reason: str) -> int:
    sys.stdout.write(_json_text({"error": {"op": op, "reason": reason}}))
    return FAILURE_EXIT


# -- algebra ------------------------------------------------------------------

def _cmd_algebra(args) -> int:
    ctx = lie.standard_basis(args.n)
    rng = random.Random(args.seed)
    if args.check == "rank-kernel":
        rows = []
        for i in range(args.samples):
            a = lie.random_regular_element(ctx, rng)
            omega = forms.omega_from_element(a)
            kernel = forms.form_kernel(omega)
            rows.append({
                "sample": i,
                "regular": True,
                "rank": forms.form_rank(omega),
                "kernel_dim": kernel.dim,
                "kernel_abelian": lie.is_abelian(kernel),
                "kernel_equals_centralizer": kernel == lie.centralizer(a),
            })
        if args.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["sample", "regular", "rank", "kernel_dim",
                             "kernel_abelian", "kernel_equals_centralizer"])
            for r in rows:
                writer.writerow([r["sample"], str(r["regular"]).lower(), r["rank"],
                                 r["kernel_dim"], str(r["kernel_abelian"]).lower(),
                                 str(r["kernel_equals_centralizer"]).lower()])
            _emit(buf.getvalue(), args.output)
        else:
            _emit(_json_text({"n": args.n, "seed": args.seed, "check": args.check,
                              "samples": rows}), args.output)
        return 0
    # closed-forms
    dim = forms.closed_two_form_dimension(ctx)
    trips = all(
        forms.potential_element(forms.omega_from_element(a)).coords == a.coords
        for a in (lie.random_element(ctx, rng) for _ in range(args.samples)))
    report = {"n": args.n, "seed": args.seed, "check": args.check,
              "closed_two_form_dim": dim, "algebra_dim": ctx.dim,
              "potential_roundtrip_exact": trips}
    _emit(_json_text(report), args.output)
    return 0


# -- omega --------------------------------------------------------------------

def _parse_element(text: str) -> Matrix:
    obj = json.loads(text)
    if isinstance(obj, dict):
        return Matrix.from_json_dict(obj)
    return Matrix(obj)


def _cmd_omega(args) -> int:
    ctx = lie.standard_basis(args.n)
    mat = _parse_element(args.element)
    a = ctx.element_from_matrix(mat)
    report = forms.omega_report(a)
    report["n"] = args.n
    report["regular"] = lie.is_regular(a)
    report["spectral_type"] = lie.spectral_type(a).to_dict()
    _emit(_json_text(report), args.output)
    return 0


# -- cohomology ----------------------------------------------------------------

THEORY_FLAGS = {"dr": "deRham", "dpl": "dPlusDLambda", "ddl": "ddLambda"}


def _cmd_cohomology(args) -> int:
    theories = [t.strip() for t in args.theories.split(",") if t.strip()]
    if not theories:
        raise SystemExit(USAGE_EXIT)
    unknown = [t for t in theories if t not in THEORY_FLAGS and t != "hodge"]
    if unknown:
        print(f"unknown theories: {','.join(unknown)}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)
    if args.model == "torus":
        model = build_torus_model(args.n)
        windowed = False
    elif args.model == "polynomial":
        model = build_polynomial_model(args.n, args.cutoff)
        windowed = True
    else:
        model = build_suspension_model(args.cutoff)
        windowed = False
    reports = [coh.compute_report(model, THEORY_FLAGS[t], windowed=windowed)
               for t in theories if t != "hodge"]
    hodge_reports = []
    if "hodge" in theories:
        hodge_reports.append(coh.hodge_check(model))
    if args.format == "csv":
        _emit(coh.reports_to_csv(reports, hodge_reports), args.output)
    else:
        payload = {"model": model.name,
                   "reports": [coh.report_to_json_dict(r) for r in reports]}
        if hodge_reports:
            payload["hodge"] = coh.hodge_to_json_dict(hodge_reports[0])
        _emit(_json_text(payload), args.output)
    return 0


# -- suite ----------------------------------------------------------------------

def _cmd_suite(args) -> int:
    results = acceptance.run_all(args.seed)
    print(acceptance.format_table(results))
    if args.output:
        if args.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["criterion", "name", "expected", "computed", "passed"])
            for r in results:
                writer.writerow([r.cid, r.name, r.expected, r.computed,
                                 str(r.passed).lower()])
            _emit(buf.getvalue(), args.output)
        else:
            _emit(_json_text([r.to_dict() for r in results]), args.output)
    return 0 if all(r.passed for r in results) else FAILURE_EXIT


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lab",
        description="Exact computations with invariant 2-forms on sp(2n,R) "
                    "and finite models of symplectic cohomology.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_alg = sub.add_parser("algebra", help="seeded batch checks on sp(2n,R)")
    p_alg.add_argument("--n", type=int, required=True)
    p_alg.add_argument("--check", choices=["rank-kernel", "closed-forms"],
                       default="rank-kernel")
    p_alg.add_argument("--samples", type=int, default=50)
    p_alg.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p_alg.add_argument("--format", choices=["json", "csv"], default="json")
    p_alg.add_argument("--output", default=None)
    p_alg.set_defaults(fn=_cmd_algebra)

    p_om = sub.add_parser("omega", help="analyze the invariant 2-form of one element")
    p_om.add_argument("--n", type=int, required=True)
    p_om.add_argument("--element", required=True,
                      help='JSON matrix, e.g. \'[["1","0"],["0","-1"]]\'')
    p_om.add_argument("--output", default=None)
    p_om.set_defaults(fn=_cmd_omega)

    p_coh = sub.add_parser("cohomology", help="dimension reports for a model")
    p_coh.add_argument("--model", choices=["torus", "polynomial", "suspension"],
                       required=True)
    p_coh.add_argument("--n", type=int, default=1)
    p_coh.add_argument("--cutoff", type=int, default=4,
                       help="coefficient degree D (polynomial) or Fourier cutoff N (suspension)")
    p_coh.add_argument("--theories", default="dr,dpl,ddl",
                       help="comma-separated subset of dr,dpl,ddl,hodge")
    p_coh.add_argument("--format", choices=["json", "csv"], default="json")
    p_coh.add_argument("--output", default=None)
    p_coh.set_defaults(fn=_cmd_cohomology)

    p_suite = sub.add_parser("suite", help="run all acceptance criteria")
    p_suite.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p_suite.add_argument("--format", choices=["json", "csv"], default="json")
    p_suite.add_argument("--output", default=None)
    p_suite.set_defaults(fn=_cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cutoff", 1) < 1:
        print("cutoff must be >= 1", file=sys.stderr)
        return USAGE_EXIT
    if getattr(args, "n", 1) < 1:
        print("n must be >= 1", file=sys.stderr)
        return USAGE_EXIT
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        return _error(args.command, str(exc))


if __name__ == "__main__":
    sys.exit(main())

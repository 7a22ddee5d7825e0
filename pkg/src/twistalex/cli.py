"""Command line front end.

Verbs: delta, duality, cohom, deform, locus, suite, charvar.  Input files
use the presentation and representation formats of :mod:`groups` and
:mod:`reps`; scalars are cyclotomic expressions in the ``z`` syntax with
the conductor set by ``--field`` (default 12).  ``--json`` switches to a
flat machine-readable document.  Exit codes: 0 success, 1 parse or input
error, 2 degenerate computation, 3 hypothesis violation raised by deform.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import alexander_data, duality_check
from .cohomology import build_complex, cohomology_dims
from .cyclotomic import field
from .deform import classify_deformation, nonsemisimple_locus
from .errors import (DegeneratePresentation, NoCocycle,
                     NonPolynomialQuotient, TwistalexError)
from .groups import parse_presentation
from .laurent import laurent_to_str
from .reps import build_adjoint, build_tensor_dual, parse_representation
from .trefoil import trace_coordinates, trefoil_suite, suite_passed

_UNITS = "   (up to units c*t^k)"


def _load_group(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def _load_rep(path, P):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_representation(fh.read(), P)


def _poly(p):
    return laurent_to_str(p)


def _emit(args, text_lines, doc):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_delta(args):
    P = _load_group(args.group)
    rep = _load_rep(args.rep, P)
    module = rep.as_module()
    if args.twist_lambda is not None:
        lam = field(args.field).parse(args.twist_lambda)
        module = module.twist(lam, args.twist_pow)
    data = alexander_data(P, module)
    doc = {
        "delta0": _poly(data.delta0),
        "wada_num": _poly(data.wada_num),
        "wada_den": _poly(data.wada_den),
        "delta1": _poly(data.delta1) if data.delta1 is not None else None,
        "removed_generator": P.generators[data.removed_generator],
    }
    lines = [
        f"Delta0 = {doc['delta0']}{_UNITS}",
        f"Wada numerator = {doc['wada_num']}{_UNITS}",
        f"Wada denominator = {doc['wada_den']}{_UNITS}",
    ]
    if data.delta1 is not None:
        lines.append(f"Delta1 = {doc['delta1']}{_UNITS}")
    else:
        lines.append("Delta1 = (undefined: degree-zero order vanishes)")
    lines.append(f"removed generator = {doc['removed_generator']}")
    for note in data.notes:
        lines.append(f"note: {note}")
    _emit(args, lines, doc)
    return 0


def _cmd_duality(args):
    P = _load_group(args.group)
    alpha = _load_rep(args.rep_a, P)
    beta = _load_rep(args.rep_b, P)
    report = duality_check(alpha, beta)
    doc = {
        "degree0_ok": report.degree0_ok,
        "degree1_ok": report.degree1_ok,
        "hypothesis_ok": report.hypothesis_ok,
        "delta0_plus": _poly(report.plus.delta0),
        "delta1_plus": _poly(report.plus.delta1)
        if report.plus.delta1 is not None else None,
        "delta0_minus": _poly(report.minus.delta0),
        "delta1_minus": _poly(report.minus.delta1)
        if report.minus.delta1 is not None else None,
    }
    lines = [
        f"degree 0 associated under t -> 1/t: {_yn(report.degree0_ok)}",
        f"degree 1 associated under t -> 1/t: {_yn(report.degree1_ok)}",
        f"hypothesis (both factors irreducible): {_yn(report.hypothesis_ok)}",
        f"Delta0+ = {doc['delta0_plus']}{_UNITS}",
        f"Delta1+ = {doc['delta1_plus']}{_UNITS}",
        f"Delta0- = {doc['delta0_minus']}{_UNITS}",
        f"Delta1- = {doc['delta1_minus']}{_UNITS}",
    ]
    for note in report.notes:
        lines.append(f"note: {note}")
    _emit(args, lines, doc)
    return 0


def _cmd_cohom(args):
    P = _load_group(args.group)
    spec = args.module
    if spec in ("raw", "ad") and args.rep is None:
        raise TwistalexError(f"--module {spec} needs --rep")
    if spec == "raw":
        rep = _load_rep(args.rep, P)
        module = rep.as_module()
    elif spec == "ad":
        rep = _load_rep(args.rep, P)
        module = build_adjoint(rep)
    elif spec.startswith("tensor:"):
        parts = spec[len("tensor:"):].split(",")
        if len(parts) != 4:
            raise TwistalexError("tensor module needs tensor:A,B,LAMBDA,POW")
        alpha = _load_rep(parts[0], P)
        beta = _load_rep(parts[1], P)
        lam = field(args.field).parse(parts[2])
        module = build_tensor_dual(alpha, beta, lam, int(parts[3]))
    else:
        raise TwistalexError(f"unknown module kind {spec!r}")
    dims = cohomology_dims(build_complex(P, module))
    doc = {"h0": dims.h0, "z1": dims.z1, "b1": dims.b1, "h1": dims.h1,
           "h2": dims.h2, "aspherical": dims.aspherical}
    lines = [f"h0 = {dims.h0}", f"z1 = {dims.z1}", f"b1 = {dims.b1}",
             f"h1 = {dims.h1}", f"h2 = {dims.h2}"]
    if dims.aspherical:
        lines.append("h2 caveat: none (aspherical presentation; h2 is "
                     "group cohomology)")
    else:
        lines.append("h2 caveat: presentation not known aspherical; h2 is "
                     "an upper bound for group cohomology only")
    _emit(args, lines, doc)
    return 0


def _cmd_deform(args):
    P = _load_group(args.group)
    alpha = _load_rep(args.alpha, P)
    beta = _load_rep(args.beta, P)
    lam = field(args.field).parse(getattr(args, "lambda"))
    report = classify_deformation(P, alpha, beta, lam)
    doc = {
        "classification": report.classification,
        "n": report.n,
        "alpha_irreducible": report.alpha_irreducible,
        "beta_irreducible": report.beta_irreducible,
        "alpha_inf_regular": report.alpha_inf_regular,
        "beta_inf_regular": report.beta_inf_regular,
        "delta0_plus": _poly(report.delta0_plus),
        "delta1_plus": _poly(report.delta1_plus),
        "delta0_plus_at": str(report.delta0_plus_at),
        "delta1_plus_multiplicity": report.delta1_plus_multiplicity,
        "duality_cross_check": report.duality_cross_check,
        "notes": report.notes,
    }
    lines = [
        f"n = {report.n}",
        f"alpha irreducible: {_yn(report.alpha_irreducible)}   "
        f"infinitesimally regular: {_yn(report.alpha_inf_regular)}",
        f"beta irreducible: {_yn(report.beta_irreducible)}   "
        f"infinitesimally regular: {_yn(report.beta_inf_regular)}",
        f"Delta0+ = {doc['delta0_plus']}{_UNITS}",
        f"Delta1+ = {doc['delta1_plus']}{_UNITS}",
        f"Delta0+(lambda^n) = {doc['delta0_plus_at']}",
        f"multiplicity of lambda^n in Delta1+: "
        f"{report.delta1_plus_multiplicity}",
        f"duality cross-check: {_yn(report.duality_cross_check)}",
        f"classification: {report.classification}",
    ]
    for note in report.notes:
        lines.append(f"note: {note}")
    _emit(args, lines, doc)
    return 0 if report.hypotheses_ok else 3


def _cmd_locus(args):
    P = _load_group(args.group)
    alpha = _load_rep(args.alpha, P)
    beta = _load_rep(args.beta, P)
    poly = nonsemisimple_locus(P, alpha, beta)
    doc = {"locus": _poly(poly)}
    _emit(args, [f"locus polynomial = {doc['locus']}{_UNITS}",
                 "a non-semisimple representation with the character of "
                 "the twisted sum exists iff lambda^n is a root"], doc)
    return 0


def _cmd_suite(args):
    records = trefoil_suite(seed=args.seed, fast=args.fast)
    doc = [{"id": r.id, "label": r.label, "status": r.status,
            "evidence": r.evidence} for r in records]
    lines = []
    for r in records:
        lines.append(f"[{'PASS' if r.status else 'FAIL'}] {r.id}: {r.label}")
        for e in r.evidence:
            lines.append(f"    {e}")
    ok = suite_passed(records)
    lines.append(f"suite result: {'all checks passed' if ok else 'FAILURES'}")
    _emit(args, lines, doc)
    return 0 if ok else 2


def _cmd_charvar(args):
    fld = field(args.field)
    s = fld.parse(args.s)
    t = fld.parse(args.t)
    cc = trace_coordinates(s, t, fld=fld)
    doc = {"s": str(cc.s), "t": str(cc.t),
           "trace_m": str(cc.trace_m), "trace_m_inv": str(cc.trace_m_inv)}
    _emit(args, [f"s = {doc['s']}", f"t = {doc['t']}",
                 f"trace(m) = {doc['trace_m']}",
                 f"trace(m^-1) = {doc['trace_m_inv']}"], doc)
    return 0


def _yn(flag):
    return "yes" if flag else "no"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twistalex",
        description="Exact twisted Alexander polynomials, cohomology and "
                    "deformations of knot group representations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.add_argument("--field", type=int, default=12,
                       help="conductor N for scalar expressions "
                            "(default 12)")

    p = sub.add_parser("delta", help="twisted Alexander polynomials")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--twist-lambda", default=None)
    p.add_argument("--twist-pow", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("duality", help="t -> 1/t symmetry of tensor-dual "
                                       "polynomial pairs")
    p.add_argument("--group", required=True)
    p.add_argument("--rep-a", required=True)
    p.add_argument("--rep-b", required=True)
    common(p)
    p.set_defaults(func=_cmd_duality)

    p = sub.add_parser("cohom", help="cohomology dimensions of a module")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", default=None)
    p.add_argument("--module", required=True,
                   help="raw | ad | tensor:A,B,LAMBDA,POW")
    common(p)
    p.set_defaults(func=_cmd_cohom)

    p = sub.add_parser("deform", help="deformability classification")
    p.add_argument("--group", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--lambda", required=True)
    common(p)
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser("locus", help="non-semisimple character locus")
    p.add_argument("--group", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    common(p)
    p.set_defaults(func=_cmd_locus)

    p = sub.add_parser("suite", help="run the trefoil battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fast", action="store_true",
                   help="smaller randomized batteries")
    common(p)
    p.set_defaults(func=_cmd_suite)

    p = sub.add_parser("charvar", help="meridian trace coordinates of the "
                                       "SL3 trefoil family")
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    common(p)
    p.set_defaults(func=_cmd_charvar)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DegeneratePresentation, NonPolynomialQuotient, NoCocycle) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (TwistalexError, OSError, ValueError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

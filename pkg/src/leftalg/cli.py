"""Command-line front end.

Every command produces a report of named checks (pass, fail or skip);
the exit status is 0 exactly when no check fails.  ``--json PATH``
writes the report as JSON (``-`` for stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import algebraicity as alg_mod
from .errors import BoundViolated, NotInImage, ParseError, XCentral
from .expr import parse_element
from .orepoly import right_eval
from .quaternion import QAlgebra, quat_minpoly_center
from .sampling import (
    SamplerConfig,
    check_centralizer,
    check_degmin_additivity,
    check_derived_degrees,
    check_inverse_law,
    check_N_normality,
    check_operators,
    check_quaternion_laws,
    check_thm23,
    sample_series,
)
from .scalars import x
from .series import DEFAULT_PRECISION, SkewSeries, T, n_conjugate, n_contains
from .structure import (
    build_operator,
    cyclic_vector,
    invariant_factors,
    operator_minpoly,
    theorem33_pipeline,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"
SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "leftalg report",
    "type": "object",
    "required": ["command", "params", "checks", "seed", "timings", "schema_version"],
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "seed": {"type": "integer"},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
        "schema_version": {"const": SCHEMA_VERSION},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "details"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": [PASS, FAIL, SKIP]},
                    "details": {"type": "object"},
                    "certificate": {"type": "object"},
                },
                "additionalProperties": False,
            },
        },
    },
}


@dataclass
class Check:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    certificate: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "details": self.details}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class Report:
    command: str
    params: dict
    seed: int
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def add(self, name, ok, details=None, certificate=None, status=None):
        status = status or (PASS if ok else FAIL)
        self.checks.append(Check(name, status, details or {}, certificate))

    def add_sampled(self, name, rep, max_skip_rate=None):
        details = rep.to_dict()
        ok = rep.ok
        if max_skip_rate is not None:
            details["max_skip_rate"] = max_skip_rate
            ok = ok and rep.skip_rate < max_skip_rate
        self.add(name, ok, details)

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "seed": self.seed,
            "timings": self.timings,
            "schema_version": SCHEMA_VERSION,
        }


def _cfg(args, **overrides) -> SamplerConfig:
    return SamplerConfig(seed=args.seed, **overrides)


# -- verify ------------------------------------------------------------------------


X0_PLUS_T = x(0) + T
EXPECTED_X0_PLUS_T = [x(0) * x(1) - T * T, -(x(0) + x(1)), 1]


def verify_example(args, rep: Report):
    mp = alg_mod.left_minpoly(X0_PLUS_T, "K", 2, args.precision)
    exact = mp.algebraic and all(
        SkewSeries.coerce(c) == SkewSeries.coerce(e)
        for c, e in zip(mp.poly.coeffs, EXPECTED_X0_PLUS_T)
    ) and mp.degree == 2
    residual = right_eval(mp.poly, X0_PLUS_T) if mp.poly is not None else None
    ok = exact and residual is not None and SkewSeries.coerce(residual).is_zero()
    rep.add("left_minpoly_x0_plus_t", ok, mp.to_dict(), {"poly": str(mp.poly)})

    count = args.samples if args.samples is not None else 500
    cfg = _cfg(args)
    worst, lifted = 0, 0
    bad = []
    for idx in range(count):
        a = sample_series(cfg, "any", idx)
        res = alg_mod.left_minpoly(a, "K", 2, args.precision)
        if not res.algebraic or res.degree > 2:
            bad.append({"seed": args.seed, "index": idx, "element": str(a), "verdict": res.verdict})
        else:
            worst = max(worst, res.degree)
            lifted += bool(res.lift)
    rep.add(
        "left_degree_samples",
        not bad,
        {"samples": count, "max_degree": worst, "lifted": lifted, "failures": bad},
    )

    for n in range(1, args.right_degree + 1):
        for m in range(1, args.window + 1):
            k = alg_mod.right_alg_kernel(n, m, precision=2 * (n + m) + 2)
            rep.add(f"right_kernel_n{n}_M{m}", k.dimension == 0, k.to_dict())
    left = alg_mod.right_alg_kernel(2, 1, side="left")
    witnessed = all(alg_mod.kernel_relation_holds(h, "left") for h in left.witnesses)
    rep.add(
        "left_sanity_n2",
        left.dimension >= 1 and witnessed,
        left.to_dict(),
        {"witnesses": [[str(h) for h in hs] for hs in left.witnesses]},
    )
    for n in range(1, 7):
        rep.add(f"monomial_witness_n{n}", alg_mod.monomial_witness(n), {"n": n})


def verify_degmin(args, rep: Report):
    rep.add_sampled("degmin_additivity", check_degmin_additivity(_cfg(args), args.samples or 1000))
    rep.add_sampled("degmin_inverse", check_inverse_law(_cfg(args), args.samples or 500))
    try:
        SkewSeries.zero().degmin()
        rep.add("degmin_zero_undefined", False)
    except ArithmeticError as exc:
        rep.add("degmin_zero_undefined", True, {"error": type(exc).__name__})


def verify_normal_subgroup(args, rep: Report):
    rep.add("contains_x0_plus_t", n_contains(X0_PLUS_T))
    rep.add("excludes_t", not n_contains(T))
    conj = n_conjugate(x(1) + T, T)
    rep.add("conjugate_x1_plus_t_by_t", conj.degmin() == 0, {"result": str(conj)})
    rep.add_sampled(
        "N_normality_samples", check_N_normality(_cfg(args), args.samples or 500), 0.2
    )


def verify_centralizer(args, rep: Report):
    lhs, rhs = T * x(0), x(0) * T
    rep.add(
        "t_not_in_centralizer",
        lhs != rhs and lhs == x(1) * T,
        {"t*x0": str(lhs), "x0*t": str(rhs)},
    )
    rep.add_sampled("centralizer_samples", check_centralizer(_cfg(args), args.samples or 100))


def verify_thm23(args, rep: Report):
    window = 8
    for alpha in (0, 1, 2):
        precision = max(args.precision, window + 2)
        ident = alg_mod.thm23_identity(T, x(1), alpha, precision)
        rep.add(
            f"thm23_identity_alpha{alpha}",
            ident.ok and ident.window >= window,
            ident.to_dict(),
        )
        span = alg_mod.inverse_span_check(T, x(1), alpha, precision=precision)
        rep.add(
            f"inverse_span_alpha{alpha}",
            span.ok and span.window >= window,
            {"window": span.window, "lift": span.lift},
            {"betas": [str(b) for b in span.betas]},
        )
        perturbed = [b + 1 for b in span.betas]
        bad = alg_mod.inverse_span_check(T, x(1), alpha, perturbed, precision=precision)
        rep.add(f"inverse_span_mismatch_alpha{alpha}", not bad.ok, {"perturbed": True})
    rep.add_sampled("thm23_samples", check_thm23(_cfg(args), args.samples or 100, window))


def verify_lemma22(args, rep: Report):
    precision = max(args.precision, 10)
    ind = alg_mod.lemma22_independence(X0_PLUS_T, (0, 1, 2), "Q", precision)
    rep.add("x0_plus_t_over_Q_independent", ind.independent and ind.window >= 8, ind.to_dict())
    dep = alg_mod.lemma22_independence(T, (0, 1, 2), "K", precision)
    total = alg_mod.combine(dep.witness, dep.inverses) if dep.witness else None
    verified = total is not None and total.is_zero_on_window()
    rep.add(
        "t_over_K_dependent",
        not dep.independent and verified,
        dep.to_dict(),
        {"witness": [str(b) for b in dep.witness or []]},
    )
    for label, a, over in (("x0_plus_t_Q", X0_PLUS_T, "Q"), ("t_K", T, "K")):
        chk = alg_mod.lemma22_dichotomy(a, (0, 1, 2), over, precision)
        rep.add(
            f"dichotomy_{label}",
            chk.consistent,
            {"independence": chk.independence.verdict, "minpoly": chk.minpoly.verdict},
        )


def verify_quaternion(args, rep: Report):
    alg = QAlgebra.division(-1, -1)
    out = theorem33_pipeline(alg, alg.j, 2)
    rep.add(
        "pipeline_j_d2",
        out.ok and out.m == 2 and out.u_degree == 2 and out.dim_over_center == 4,
        {"m": out.m, "u": str(out.u), "u_degree": out.u_degree, "dim": out.dim_over_center},
    )
    cfg = _cfg(args)
    rep.add_sampled("quaternion_laws", check_quaternion_laws(alg, cfg, args.samples or 1000))
    rep.add_sampled("derived_degrees", check_derived_degrees(alg, cfg, args.samples or 200))


def verify_structure(args, rep: Report):
    alg = QAlgebra.division(-1, -1)
    for label, xq in (("j", alg.j), ("i", alg.i), ("scalar", alg(3))):
        op = build_operator(xq)
        inv = invariant_factors(op)
        f = operator_minpoly(op)
        cyc = cyclic_vector(op, seed=args.seed)
        rep.add(
            f"operator_{label}",
            inv.chain_holds()
            and sum(inv.degrees) == op.dim
            and inv.factors[-1] == f
            and cyc.rank == f.degree,
            {"matrix": str(op), "invariant_factors": [str(g) for g in inv.factors]},
            {"cyclic_vector": str(cyc.element), "order": str(cyc.order)},
        )
    rep.add_sampled("random_operators", check_operators(alg, _cfg(args), args.samples or 50))


VERIFY = {
    "example": verify_example,
    "degmin": verify_degmin,
    "normal-subgroup": verify_normal_subgroup,
    "centralizer": verify_centralizer,
    "thm23": verify_thm23,
    "lemma22": verify_lemma22,
    "quaternion": verify_quaternion,
    "structure": verify_structure,
}


# -- minpoly and quaternions ---------------------------------------------------------


def run_minpoly(args, rep: Report):
    a = parse_element(args.element, args.precision)
    res = alg_mod.left_minpoly(a, args.over, args.bound, args.precision)
    status = {"algebraic": PASS, "exceeds_bound": FAIL}.get(res.verdict, SKIP)
    cert = {"poly": str(res.poly), "degree": res.degree} if res.poly is not None else None
    rep.add("left_minpoly", None, {"element": str(a), **res.to_dict()}, cert, status)


def _algebra(args) -> QAlgebra:
    return QAlgebra.division(Fraction(args.a), Fraction(args.b))


def run_quat_pipeline(args, rep: Report):
    alg = _algebra(args)
    xq = alg.parse(args.x)
    try:
        out = theorem33_pipeline(alg, xq, args.d)
    except XCentral as exc:
        rep.add("x_noncentral", False, {"error": str(exc)})
        return
    except BoundViolated as exc:
        rep.add("bound", False, {"error": str(exc), "m": exc.m, "d": exc.d})
        return
    data = out.to_dict()
    checks = data.pop("checks")
    for name, ok in checks.items():
        rep.add(name, ok, {})
    rep.add("pipeline", out.ok, {}, data)


def run_quat_minpoly(args, rep: Report):
    alg = _algebra(args)
    q = alg.parse(args.q)
    p = quat_minpoly_center(q)
    rep.add("minpoly_center", right_eval(p, q).is_zero(), {"q": str(q)}, {"poly": str(p)})
    res = alg_mod.left_minpoly(q, "K", 2)
    rep.add("minpoly_over_K", res.algebraic, res.to_dict(), {"poly": str(res.poly)})


# -- argument parsing ------------------------------------------------------------------


def _globals_parser(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--seed", type=int, default=d if suppress else 0)
    p.add_argument("--precision", type=int, default=d if suppress else DEFAULT_PRECISION)
    p.add_argument("--json", metavar="PATH", default=d)
    p.add_argument("--samples", type=int, default=d)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _globals_parser(suppress=True)
    parser = argparse.ArgumentParser(
        prog="leftalg",
        description="Exact checks for left algebraicity in skew Laurent series and quaternion algebras.",
        parents=[_globals_parser(suppress=False)],
    )
    sub = parser.add_subparsers(dest="group", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    vsub = verify.add_subparsers(dest="target", required=True)
    ex = vsub.add_parser("example", parents=[common])
    ex.add_argument("--right-degree", type=int, default=3)
    ex.add_argument("--window", type=int, default=4)
    for name in VERIFY:
        if name != "example":
            vsub.add_parser(name, parents=[common])

    mp = sub.add_parser("minpoly", parents=[common], help="left minimal polynomial of an element")
    mp.add_argument("--element", required=True)
    mp.add_argument("--over", choices=["K", "F", "Q"], default="K")
    mp.add_argument("--bound", type=int, default=2)

    quat = sub.add_parser("quat", parents=[common], help="quaternion algebra commands")
    qsub = quat.add_subparsers(dest="target", required=True)
    pipe = qsub.add_parser("pipeline", parents=[common])
    pipe.add_argument("--a", default="-1")
    pipe.add_argument("--b", default="-1")
    pipe.add_argument("--x", required=True)
    pipe.add_argument("--d", type=int, required=True)
    qmp = qsub.add_parser("minpoly", parents=[common])
    qmp.add_argument("--a", default="-1")
    qmp.add_argument("--b", default="-1")
    qmp.add_argument("--q", required=True)
    return parser


def _params(args) -> dict:
    skip = {"group", "target", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv=None):
    """Parse ``argv``, run the command and return (report, exit code, args)."""
    args = build_parser().parse_args(argv)
    command = args.group if args.group == "minpoly" else f"{args.group} {args.target}"
    rep = Report(command, _params(args), args.seed)
    start = time.perf_counter()
    try:
        if args.group == "verify":
            VERIFY[args.target](args, rep)
        elif args.group == "minpoly":
            run_minpoly(args, rep)
        elif args.target == "pipeline":
            run_quat_pipeline(args, rep)
        else:
            run_quat_minpoly(args, rep)
    except ParseError as exc:
        rep.add("parse", False, {"error": str(exc), "offset": exc.offset, "expected": sorted(exc.expected)})
    except NotInImage as exc:
        rep.add("computable", False, {"error": str(exc)})
    rep.timings["total_seconds"] = round(time.perf_counter() - start, 3)
    return rep, (1 if rep.failed else 0), args


def _print(rep: Report, out):
    for c in sorted(rep.checks, key=lambda c: c.name):
        line = f"{c.status.upper():4} {c.name}"
        if c.certificate:
            flat = [f"{k}={v}" for k, v in c.certificate.items() if not isinstance(v, (dict, list))]
            if flat:
                line += "  " + "; ".join(flat)
        print(line, file=out)
    failed = rep.failed
    summary = f"{len(rep.checks) - len(failed)}/{len(rep.checks)} checks without failure"
    if failed:
        summary += "; failed: " + ", ".join(c.name for c in failed)
    print(summary, file=out)


def main(argv=None) -> int:
    rep, code, args = run(argv)
    dest = getattr(args, "json", None)
    if dest == "-":
        json.dump(rep.to_dict(), sys.stdout, indent=2, sort_keys=True)
        print()
        return code
    _print(rep, sys.stdout)
    if dest:
        with open(dest, "w") as fh:
            json.dump(rep.to_dict(), fh, indent=2, sort_keys=True)
    return code


if __name__ == "__main__":
    sys.exit(main())

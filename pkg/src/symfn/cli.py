"""Command-line front end.

One subcommand per capability, deterministic output (byte-identical across
runs for identical inputs), and machine-checkable exit codes:

* 0 -- success, or all checks passed;
* 1 -- a check failed (the counterexample is printed as JSON);
* 2 -- usage or parameter errors (malformed partition, unknown preset,
  pole at specialization), with a one-line diagnostic on stderr.

``--json`` switches from aligned text to the library's JSON schemas;
``--out`` redirects the payload to a file; ``--meta`` writes a small
metadata record (version, timestamp) to stderr, keeping stdout payloads
reproducible.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from . import __version__, audit as audit_mod
from .coeffs import Coeff, PoleError, sym
from .heisenberg import (
    RSequence,
    T_apply,
    T_apply_iterative,
    jack_D_apply,
    newton_triangularity_check,
    two_row_action,
)
from .oracle import DegenerateGramError, ghl_P
from .partitions import Partition, partitions_of, z_lambda
from .report import Report
from .symfunc import (
    EPS_JACK,
    SymFunc,
    eps_preset,
    inner,
    monomial,
    q_eps_lambda,
    to_q,
)
from .vertex import (
    EigenvalueCollisionError,
    OperatorSpec,
    eigenvalue,
    jj_closed_form,
    jj_recursion,
    self_adjoint_check,
    solve_Q,
    specialize_Q,
    x0_prime_row,
    x0_row,
)


def _partition_arg(text: str) -> Partition:
    return Partition.from_text(text)


def _emit(args, payload: dict, text: str) -> None:
    body = json.dumps(payload, indent=2) if args.json else text
    if not body.endswith("\n"):
        body += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _emit_failure(args, report: Report) -> int:
    """Check failures always carry their counterexample as JSON."""
    body = json.dumps(report.to_json(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return 1


def _aligned(rows: list[tuple[str, ...]], headers: tuple[str, ...]) -> str:
    table = [headers] + rows
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in table]
    return "\n".join(lines)


def _terms_rows(terms_sorted, basis: str) -> list[tuple[str, str]]:
    return [(f"{basis}[{lam.text()}]", str(c)) for lam, c in terms_sorted]


def _symfunc_payload(f: SymFunc) -> tuple[dict, str]:
    text = _aligned(_terms_rows(f.sorted_terms(), f.basis), ("term", "coefficient"))
    return f.to_json(), text


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_partitions(args) -> int:
    ps = partitions_of(args.n)
    payload = {
        "n": args.n,
        "count": len(ps),
        "partitions": [{"partition": lam.to_json(), "z": z_lambda(lam)} for lam in ps],
    }
    rows = [(str(i), lam.text() or "-", str(z_lambda(lam))) for i, lam in enumerate(ps)]
    _emit(args, payload, _aligned(rows, ("index", "partition", "z")))
    return 0


def cmd_qexpand(args) -> int:
    f = q_eps_lambda(args.lam, eps_preset(args.eps))
    payload, text = _symfunc_payload(f)
    _emit(args, payload, text)
    return 0


def cmd_mexpand(args) -> int:
    payload, text = _symfunc_payload(monomial(args.lam))
    _emit(args, payload, text)
    return 0


_BASIS_BUILDERS = {
    "p": lambda lam, eps: SymFunc.p(lam),
    "q": lambda lam, eps: q_eps_lambda(lam, eps),
    "m": lambda lam, eps: monomial(lam),
}


def cmd_inner(args) -> int:
    eps = eps_preset(args.eps)
    f = _BASIS_BUILDERS[args.left](args.lam, eps)
    g = _BASIS_BUILDERS[args.right](args.mu, eps)
    v = inner(f, g, eps)
    _emit(args, {"eps": args.eps, "left": args.left, "right": args.right,
                 "lambda": args.lam.to_json(), "mu": args.mu.to_json(),
                 "value": v.to_json()}, str(v))
    return 0


def cmd_newton_check(args) -> int:
    spec = OperatorSpec()
    checked = 0
    for w in range(1, args.max_weight + 1):
        for lam in partitions_of(w):
            rep = newton_triangularity_check(lam, spec.R, spec.cn, spec.eps)
            if not rep.passed:
                return _emit_failure(args, rep)
            checked += 1
    payload = {
        "claim": "raising-operator expansion is dominance-triangular with explicit leading term",
        "range": {"max_weight": args.max_weight},
        "status": "pass",
        "counterexample": None,
        "checked": checked,
    }
    _emit(args, payload, f"pass: {checked} partitions up to weight {args.max_weight}")
    return 0


def cmd_iterate_check(args) -> int:
    spec = OperatorSpec()
    checked = 0
    for w in range(1, args.max_weight + 1):
        for lam in partitions_of(w):
            direct = T_apply(lam, spec.R, spec.eps)
            if T_apply_iterative(lam, spec.R, spec.eps) != direct:
                rep = Report(
                    "iterative expansion equals the defining sum",
                    {"max_weight": args.max_weight}, "fail",
                    {"lambda": lam.to_json()},
                )
                return _emit_failure(args, rep)
            if len(lam) == 2:
                table = to_q(direct, spec.eps).terms
                if two_row_action(lam[0], lam[1], spec.cn) != table:
                    rep = Report(
                        "two-row closed form equals the defining sum",
                        {"max_weight": args.max_weight}, "fail",
                        {"lambda": lam.to_json()},
                    )
                    return _emit_failure(args, rep)
            checked += 1
    payload = {
        "claim": "iterative and closed-form expansions equal the defining sum",
        "range": {"max_weight": args.max_weight},
        "status": "pass",
        "counterexample": None,
        "checked": checked,
    }
    _emit(args, payload, f"pass: {checked} partitions up to weight {args.max_weight}")
    return 0


def cmd_two_row(args) -> int:
    if args.cn == "b":
        b = sym("b")
        cfun = lambda i: b**i - 1
    else:
        cfun = lambda i: Coeff.from_int(i)
    table = two_row_action(args.m, args.n, cfun)
    order = partitions_of(args.m + args.n)
    items = [(lam, table[lam]) for lam in order if lam in table]
    payload = {
        "m": args.m, "n": args.n, "cn": args.cn,
        "terms": [{"partition": lam.to_json(), "coeff": v.to_json()} for lam, v in items],
    }
    _emit(args, payload, _aligned(_terms_rows(items, "q"), ("term", "coefficient")))
    return 0


def cmd_jack_d(args) -> int:
    f = jack_D_apply(q_eps_lambda(args.lam, EPS_JACK))
    table = to_q(f, EPS_JACK)
    payload, text = _symfunc_payload(table)
    payload = {"lambda": args.lam.to_json(), "image": payload}
    _emit(args, payload, text)
    return 0


def cmd_x0(args) -> int:
    spec = OperatorSpec()
    row = x0_row(args.lam, spec)
    prime = x0_prime_row(args.lam, spec)
    order = [lam for lam in partitions_of(args.lam.weight) if lam in row or lam in prime]
    ev = eigenvalue(args.lam, spec)
    payload = {
        "lambda": args.lam.to_json(),
        "eigenvalue": ev.to_json(),
        "terms": [
            {
                "partition": lam.to_json(),
                "coeff": row.get(lam, Coeff.from_int(0)).to_json(),
                "prime": prime.get(lam, Coeff.from_int(0)).to_json(),
            }
            for lam in order
        ],
    }
    rows = [
        (f"q[{lam.text()}]", str(row.get(lam, Coeff.from_int(0))), str(prime.get(lam, Coeff.from_int(0))))
        for lam in order
    ]
    text = _aligned(rows, ("term", "coefficient", "renormalized")) + f"\neigenvalue  {ev}"
    _emit(args, payload, text)
    return 0


def cmd_selfadjoint_check(args) -> int:
    spec = OperatorSpec()
    if args.perturb_eta2:
        # deliberately broken weights: the check must fail
        from .symfunc import q_eps_lambda as _qel
        from .vertex import x0_apply_heisenberg

        eta_p = lambda n: spec.eta(n) + 1 if n == 2 else spec.eta(n)
        for w in range(0, args.max_weight + 1):
            ps = partitions_of(w)
            qv = {lam: _qel(lam, spec.eps) for lam in ps}
            xv = {lam: x0_apply_heisenberg(qv[lam], spec, eta=eta_p) for lam in ps}
            for i, lam in enumerate(ps):
                for mu in ps[i:]:
                    if inner(xv[lam], qv[mu], spec.eps) != inner(qv[lam], xv[mu], spec.eps):
                        rep = Report(
                            "<X0 q_lam, q_mu> = <q_lam, X0 q_mu> (perturbed eta_2)",
                            {"max_weight": args.max_weight}, "fail",
                            {"lambda": lam.to_json(), "mu": mu.to_json()},
                        )
                        return _emit_failure(args, rep)
        payload = {"status": "pass"}
        _emit(args, payload, "perturbed operator unexpectedly self-adjoint")
        return 0
    rep = self_adjoint_check(args.max_weight, spec)
    if not rep.passed:
        return _emit_failure(args, rep)
    _emit(args, rep.to_json(), f"pass: self-adjoint up to weight {args.max_weight}"
          + (f"; control witness {rep.data.get('control_witness')}" if rep.data.get("control_witness") else ""))
    return 0


def cmd_macdonald(args) -> int:
    spec = OperatorSpec()
    result = solve_Q(args.lam, spec)
    if args.spec:
        result = specialize_Q(result, args.spec)
    payload = result.to_json()
    order = partitions_of(args.lam.weight)
    rows = [
        (f"q[{lam.text()}]", str(result.terms[lam]))
        for lam in order
        if lam in result.terms
    ]
    text = _aligned(rows, ("term", "coefficient")) + f"\neigenvalue  {result.eigenvalue}"
    _emit(args, payload, text)
    return 0


def cmd_ghl(args) -> int:
    result = ghl_P(args.lam, eps_preset(args.eps))
    payload = result.to_json()
    rows_m = _terms_rows(result.P.sorted_terms(), "m")
    rows_q = _terms_rows(result.Q.sorted_terms(), "q")
    text = (
        "P (monic on m):\n" + _aligned(rows_m, ("term", "coefficient"))
        + "\n\nQ (diagonal one in q):\n" + _aligned(rows_q, ("term", "coefficient"))
        + f"\n\nnorm     {result.norm}\nrescale  {result.rescale}"
    )
    _emit(args, payload, text)
    return 0


def cmd_jj(args) -> int:
    gs = jj_recursion(args.m, args.n)
    for i, g in enumerate(gs):
        if g != jj_closed_form(args.m, args.n, i):
            rep = Report(
                "two-row recursion equals the closed form",
                {"m": args.m, "n": args.n}, "fail", {"i": i},
            )
            return _emit_failure(args, rep)
    payload = {"m": args.m, "n": args.n, "g": [g.to_json() for g in gs]}
    rows = [(f"g_{i}", str(g)) for i, g in enumerate(gs)]
    _emit(args, payload, _aligned(rows, ("index", "coefficient")))
    return 0


def cmd_audit(args) -> int:
    results = audit_mod.run_all()
    ok = all(r.passed for r in results)
    payload = {
        "status": "pass" if ok else "fail",
        "criteria": [r.to_json() for r in results],
    }
    text = "\n".join(r.line() for r in results) + f"\noverall: {'pass' if ok else 'FAIL'}"
    _emit(args, payload, text)
    if args.meta:
        timing = {f"criterion_{r.number}": round(r.seconds, 3) for r in results}
        print(json.dumps({"timing_s": timing}), file=sys.stderr)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symfn",
        description="Exact symmetric-function engine: deformed Newton identities, "
        "a self-adjoint vertex operator, and its orthogonal eigenfunctions.",
    )
    parser.add_argument("--version", action="version", version=f"symfn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_, **arguments):
        p = sub.add_parser(name, help=help_)
        for flag, kwargs in arguments.items():
            p.add_argument(flag, **kwargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="PATH", help="write the payload to a file")
        p.add_argument("--meta", action="store_true", help="write run metadata to stderr")
        p.set_defaults(func=handler)
        return p

    add("partitions", cmd_partitions, "list partitions of a weight in the fixed order",
        **{"--n": dict(type=int, required=True, metavar="N")})
    add("qexpand", cmd_qexpand, "deformed complete function in power sums",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV"),
           "--eps": dict(default="abc", metavar="PRESET")})
    add("mexpand", cmd_mexpand, "monomial symmetric function in power sums",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV")})
    add("inner", cmd_inner, "deformed scalar product of two basis elements",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV"),
           "--mu": dict(type=_partition_arg, required=True, metavar="CSV"),
           "--eps": dict(default="abc", metavar="PRESET"),
           "--left": dict(choices=("p", "q", "m"), default="p"),
           "--right": dict(choices=("p", "q", "m"), default="p")})
    add("newton-check", cmd_newton_check, "triangularity of the raising operator",
        **{"--max-weight": dict(type=int, default=6, metavar="W")})
    add("iterate-check", cmd_iterate_check, "iterative vs defining expansion of the raising operator",
        **{"--max-weight": dict(type=int, default=6, metavar="W")})
    add("two-row", cmd_two_row, "closed-form raising-operator table for two rows",
        **{"--m": dict(type=int, required=True),
           "--n": dict(type=int, required=True),
           "--cn": dict(choices=("b", "n"), default="b", help="scalar sequence: b^n-1 or n")})
    add("jack-d", cmd_jack_d, "apply the one-parameter differential operator",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV")})
    add("x0", cmd_x0, "vertex-operator action on a deformed complete product",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV")})
    add("selfadjoint-check", cmd_selfadjoint_check, "self-adjointness up to a weight bound",
        **{"--max-weight": dict(type=int, default=4, metavar="W"),
           "--perturb-eta2": dict(action="store_true", help="run the broken-weights negative control")})
    add("macdonald", cmd_macdonald, "orthogonal eigenfunction, optionally specialized",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV"),
           "--spec": dict(choices=("macdonaldA", "macdonaldB", "hl", "schur"), default=None)})
    add("ghl", cmd_ghl, "Gram-Schmidt orthogonal basis element (both normalizations)",
        **{"--lambda": dict(type=_partition_arg, required=True, dest="lam", metavar="CSV"),
           "--eps": dict(default="abc", metavar="PRESET")})
    add("jj", cmd_jj, "two-row coefficient list by product formula and recursion",
        **{"--m": dict(type=int, required=True),
           "--n": dict(type=int, required=True)})
    add("audit", cmd_audit, "run the full acceptance suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = datetime.datetime.now(datetime.timezone.utc)
    try:
        rc = args.func(args)
    except (PoleError, EigenvalueCollisionError, DegenerateGramError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.meta and args.command != "audit":
        meta = {"version": __version__, "timestamp": started.isoformat()}
        print(json.dumps({"meta": meta}), file=sys.stderr)
    return rc


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

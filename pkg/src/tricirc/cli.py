"""Command-line front end.

Subcommands expose the library operations one-to-one with deterministic
machine-readable output: identical inputs produce byte-identical
text/json/csv (data goes to stdout, diagnostics to stderr).  Exit
codes: 0 success, 1 verification failure or backend mismatch, 2 usage
error, 3 unsupported parameter regime.

``verify`` is the only command that may spawn worker processes; set the
environment variable TRICIRC_WORKERS to a positive integer to enable
that.  Results are merged in case order, so output bytes do not depend
on the worker count.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import permanent as permmod
from . import phi as phimod
from . import verify as verifymod
from .circulant import (
    MAX_WINDOW_BITS,
    CirculantSpec,
    det_bareiss,
    det_bruteforce,
    det_cycle_cover,
    reduce_theta,
    window_width,
)
from .errors import IrreducibleSpec, StateSpaceTooLarge, TooLarge
from .permclass import PermClassKey, construct_witness, enumerate_class, predict_structure

WORKERS_ENV = "TRICIRC_WORKERS"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"{WORKERS_ENV} must be positive, got {n}")
    return n


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_phi(args) -> int:
    # the no-invertible-band refusal outranks the t != q well-formedness check
    if (
        args.p >= 3
        and 1 <= args.t < args.p
        and 1 <= args.q < args.p
        and math.gcd(args.t, args.p) > 1
        and math.gcd(args.q, args.p) > 1
    ):
        raise IrreducibleSpec(
            f"gcd(t={args.t}, p={args.p}) > 1 and gcd(q={args.q}, p={args.p}) > 1"
        )
    spec = CirculantSpec(args.p, args.q, args.t)
    reduced = reduce_theta(spec)
    canon = reduced.spec
    if canon != spec:
        note = f"note: reduced to q' = {canon.q}"
        if reduced.swapped:
            note += " with x and y exchanged"
        print(note, file=sys.stderr)
    poly = phimod.phi_polynomial(canon.p, canon.q, args.backend)
    if reduced.swapped:
        poly = poly.swap_xy()
    if args.format == "json":
        _emit_json(
            {
                "command": "phi",
                "p": spec.p,
                "q": spec.q,
                "t": spec.t,
                "canonical_q": canon.q,
                "swapped": reduced.swapped,
                "backend": args.backend or phimod.default_backend(canon.p, canon.q),
                "polynomial": poly.to_json_dict(),
            }
        )
    else:
        print(poly.render())
    return EXIT_OK


def _cmd_coeff(args) -> int:
    rep = phimod.coefficient(args.p, args.q, args.r, args.s, args.backend)
    if args.format == "json":
        payload = rep.to_json_dict()
        payload["command"] = "coeff"
        _emit_json(payload)
    elif rep.present:
        print(
            f"a({rep.r},{rep.s}) = {rep.value} "
            f"[ell={rep.ell} k={rep.k} sign={rep.sign:+d} magnitude={rep.magnitude}]"
        )
    else:
        print(f"a({rep.r},{rep.s}) = 0 [absent]")
    return EXIT_OK


def _cmd_witness(args) -> int:
    key = PermClassKey(args.p, args.q, args.r, args.s)
    sigma = construct_witness(key)
    rep = predict_structure(key)
    if args.format == "json":
        _emit_json(
            {
                "command": "witness",
                "p": args.p,
                "q": args.q,
                "r": args.r,
                "s": args.s,
                "k": rep.k,
                "sign": rep.sign,
                "one_line": list(sigma.images),
                "cycles": [list(c) for c in sigma.cycles()],
            }
        )
    else:
        print(sigma.one_line())
        print(sigma.cycle_notation())
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    key = PermClassKey(args.p, args.q, args.r, args.s)
    members = enumerate_class(key)
    if args.format == "json":
        _emit_json(
            {
                "command": "enumerate",
                "p": args.p,
                "q": args.q,
                "r": args.r,
                "s": args.s,
                "count": len(members),
                "members": [list(m.images) for m in members],
            }
        )
    else:
        for m in members:
            print(m.one_line())
    return EXIT_OK


def _cmd_permanent(args) -> int:
    rep = permmod.bounds_report(args.p, args.q, args.backend)
    if args.format == "json":
        payload = rep.to_json_dict()
        payload["command"] = "permanent"
        _emit_json(payload)
    else:
        print(f"d11 = {rep.d11}")
        print(f"abs_sum = {rep.abs_sum}")
        print(f"max_coeff = {rep.max_coeff}")
        print(f"n_monomials = {rep.n_monomials}")
        print(f"lower_bound = {rep.lower_bound}")
        print(f"upper_bound = {rep.upper_bound}")
        print(f"lower_ok = {str(rep.lower_ok).lower()}")
        print(f"upper_ok = {str(rep.upper_ok).lower()}")
        print(f"sandwich_ok = {str(rep.sandwich_ok).lower()}")
    return EXIT_OK


def _cmd_growth(args) -> int:
    rows = permmod.growth_table(args.q, args.pmax)
    if args.format == "json":
        _emit_json(
            {"command": "growth", "rows": [r.to_json_dict() for r in rows]}
        )
    else:
        sys.stdout.write(permmod.growth_table_csv(rows))
    return EXIT_OK


def _cmd_verify(args) -> int:
    workers = _worker_count()
    cases = verifymod.build_cases(
        args.suite, args.pmax, args.q_policy, args.cases, args.seed
    )
    params = verifymod.suite_parameters(
        args.suite, args.pmax, args.q_policy, args.cases, args.seed
    )
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(verifymod.run_case, cases, chunksize=4))
    else:
        outcomes = [verifymod.run_case(c) for c in cases]
    res = verifymod.merge_outcomes(args.suite, outcomes, params)
    if args.format == "json":
        payload = res.to_json_dict()
        payload["command"] = "verify"
        _emit_json(payload)
    else:
        shown = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
        print(f"suite={res.suite} {shown} cases={res.cases} failures={res.failures}")
        if res.first_counterexample:
            print(f"first_counterexample: {res.first_counterexample}")
    return EXIT_OK if res.passed else EXIT_FAILED


_BENCH_BACKENDS = ("bareiss", "cycle_cover", "bruteforce", "ryser")


def _bench_supported(backend: str, p: int, q: int) -> bool:
    if p < 3 or not 2 <= q <= p - 1:
        return False
    if backend == "bruteforce":
        return p <= 10
    if backend == "ryser":
        return p <= permmod.RYSER_LIMIT
    if backend == "cycle_cover":
        return window_width(p, q) <= MAX_WINDOW_BITS
    return True


def _cmd_bench(args) -> int:
    backends = args.backends.split(",")
    for b in backends:
        if b not in _BENCH_BACKENDS:
            raise ValueError(
                f"unknown backend {b!r}; choose from {','.join(_BENCH_BACKENDS)}"
            )
    p_list = [int(v) for v in args.p.split(",")]
    q_list = [int(v) for v in args.q.split(",")]
    det_fns = {
        "bareiss": det_bareiss,
        "cycle_cover": det_cycle_cover,
        "bruteforce": det_bruteforce,
    }
    mismatch = False
    print("backend,p,q,seconds,status")
    for p in p_list:
        for q in q_list:
            polys = {}
            perms = {}
            for backend in backends:
                if not _bench_supported(backend, p, q):
                    print(f"{backend},{p},{q},,SKIPPED")
                    continue
                t0 = time.perf_counter()
                if backend == "ryser":
                    perms[backend] = permmod.permanent_ryser(p, q)
                else:
                    polys[backend] = det_fns[backend](CirculantSpec(p, q))
                dt = time.perf_counter() - t0
                print(f"{backend},{p},{q},{dt:.6f},ok")
            values = list(polys.values())
            bad = any(v != values[0] for v in values[1:])
            if perms and values:
                bad = bad or any(
                    v != values[0].abs_coefficient_sum() for v in perms.values()
                )
            if bad:
                mismatch = True
                print(
                    f"mismatch among backends at p={p} q={q}", file=sys.stderr
                )
    return EXIT_FAILED if mismatch else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_format(sub, choices=("text", "json"), default="text"):
    sub.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricirc",
        description=(
            "Exact determinant and permanent combinatorics of the p x p "
            "circulant with bands 1, -x, -y at offsets 0, t, q."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)
    backend_choices = tuple(sorted(phimod.BACKENDS))

    sp = subs.add_parser("phi", help="print the determinant polynomial")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--backend", choices=backend_choices, default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_phi)

    sp = subs.add_parser("coeff", help="report one coefficient a(r, s)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--backend", choices=backend_choices, default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_coeff)

    sp = subs.add_parser("witness", help="construct one class member")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    _add_format(sp)
    sp.set_defaults(func=_cmd_witness)

    sp = subs.add_parser("enumerate", help="list a whole class (p <= 10)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    _add_format(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = subs.add_parser("permanent", help="permanent value and bounds")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--backend", choices=backend_choices, default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_permanent)

    sp = subs.add_parser("growth", help="max-coefficient growth table")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--pmax", type=int, required=True)
    _add_format(sp, choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_growth)

    sp = subs.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", choices=verifymod.SUITES, required=True)
    sp.add_argument("--pmax", type=int, default=None)
    sp.add_argument(
        "--q-policy", dest="q_policy", choices=("all", "coprime"), default="all"
    )
    sp.add_argument("--cases", type=int, default=verifymod.DEFAULT_CASES)
    sp.add_argument("--seed", type=int, default=verifymod.DEFAULT_SEED)
    _add_format(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = subs.add_parser("bench", help="time the backends, CSV output")
    sp.add_argument("--backends", required=True)
    sp.add_argument("--p", required=True, help="comma-separated p values")
    sp.add_argument("--q", required=True, help="comma-separated q values")
    sp.set_defaults(func=_cmd_bench)

    return parser


def run(argv=None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (IrreducibleSpec, StateSpaceTooLarge, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

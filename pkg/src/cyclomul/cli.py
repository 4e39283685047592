"""Command-line front end.

Subcommands:

* ``mul``      -- multiply two vectors with a chosen algorithm.
* ``verify``   -- run the cross-checking sweeps (algorithm equivalence,
                  field redundancy, splitting-field oracle, normal-basis
                  end-to-end, operation-count exactness).
* ``count``    -- measure one multiplier's operation count.
* ``table``    -- render an operation-count comparison table.
* ``onb-scan`` -- list which optimal normal bases exist up to a bound.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys

from . import complexity, gaussonb, oracle
from .cyclocore import (
    FIELD,
    RING,
    CycloElement,
    fields_equal,
    format_coords,
    mul_alg1,
    mul_alg2,
    mul_direct,
    mul_general,
    parse_coords,
)
from .errors import CyclomulError, NotCoprime, OracleUnavailable
from .groundfield import GroundField, OpCount, is_prime

CYCLO_ALGOS = (
    "direct",
    "alg1",
    "alg2-ring",
    "alg2-field",
    "general-ring0",
    "general-ring1",
    "general-field1",
)
ONB_ALGOS = ("onb1-eq24", "onb1-eq25", "onb2-simpli", "onb2-eq29", "onb2-eq30")
ALL_ALGOS = CYCLO_ALGOS + ONB_ALGOS


class _UsageError(Exception):
    pass


def _ground_field(p: int) -> GroundField:
    if not is_prime(p):
        raise _UsageError("p must be prime")
    return GroundField(p)


def _run_cyclo(algo: str, a: CycloElement, b: CycloElement, ctx: OpCount):
    """Returns (product, pre-permutation vector or None)."""
    if algo == "direct":
        return mul_direct(a, b, ctx), None
    if algo == "alg1":
        d, prod = mul_alg1(a, b, ctx)
        return prod, d
    if algo == "alg2-ring":
        d, prod = mul_alg2(a, b, RING, ctx)
        return prod, d
    if algo == "alg2-field":
        d, prod = mul_alg2(a, b, FIELD, ctx)
        return prod, d
    return mul_general(a, b, algo.removeprefix("general-"), ctx), None


def cmd_mul(args) -> int:
    gf = _ground_field(args.p)
    ctx = OpCount()
    if args.algo in CYCLO_ALGOS:
        if args.n is None:
            raise _UsageError(f"--n is required for --algo {args.algo}")
        a = CycloElement(gf, parse_coords(args.a, gf, args.n, what="--a"))
        b = CycloElement(gf, parse_coords(args.b, gf, args.n, what="--b"))
        prod, droot = _run_cyclo(args.algo, a, b, ctx)
        print(format_coords(prod.coords))
        if args.show_sqrt:
            if droot is None:
                raise _UsageError("--show-sqrt only applies to alg1/alg2-*")
            print(f"sqrt={format_coords(droot.coords)}")
    else:
        if args.m is None:
            raise _UsageError(f"--m is required for --algo {args.algo}")
        if args.show_sqrt:
            raise _UsageError("--show-sqrt only applies to alg1/alg2-*")
        k = 1 if args.algo.startswith("onb1") else 2
        params = gaussonb.GaussParams.create(args.m, k, args.p)
        a = gaussonb.NormalBasisElement(
            params, parse_coords(args.a, gf, args.m, what="--a")
        )
        b = gaussonb.NormalBasisElement(
            params, parse_coords(args.b, gf, args.m, what="--b")
        )
        variant = {
            "onb1-eq24": "pairprod",
            "onb1-eq25": "pairsum",
            "onb2-simpli": "redundant",
            "onb2-eq29": "pairprod",
            "onb2-eq30": "pairsum",
        }[args.algo]
        if k == 1:
            out = gaussonb.mul_onb1(a, b, variant, ctx)
        else:
            out = gaussonb.mul_onb2(a, b, variant, ctx)
        print(format_coords(out.coords))
    return 0


# --- verify sweeps -------------------------------------------------------


def _pairs(gf: GroundField, n: int, exhaustive: bool, samples: int, rng):
    """Yield (a, b) input pairs, exhaustively when affordable."""
    if exhaustive and gf.p ** (2 * n) <= 1 << 14:
        space = [
            CycloElement(gf, c) for c in itertools.product(range(gf.p), repeat=n)
        ]
        for a in space:
            for b in space:
                yield a, b
    else:
        for _ in range(samples):
            a = CycloElement(gf, tuple(rng.randrange(gf.p) for _ in range(n)))
            b = CycloElement(gf, tuple(rng.randrange(gf.p) for _ in range(n)))
            yield a, b


def _sweep_ring_equivalence(p, sizes, exhaustive, samples, rng):
    gf = GroundField(p)
    ctx = OpCount()
    for n in sizes:
        for a, b in _pairs(gf, n, exhaustive, samples, rng):
            want = mul_direct(a, b, ctx)
            got = {
                "alg1": mul_alg1(a, b, ctx)[1],
                "alg2-ring": mul_alg2(a, b, RING, ctx)[1],
                "general-ring0": mul_general(a, b, "ring0", ctx),
                "general-ring1": mul_general(a, b, "ring1", ctx),
            }
            for name, res in got.items():
                if res != want:
                    return (
                        f"{name} mismatch at p={p} n={n}: a={a.coords} "
                        f"b={b.coords} expected={want.coords} got={res.coords}"
                    )
    return None


def _sweep_field_equivalence(p, sizes, exhaustive, samples, rng):
    gf = GroundField(p)
    ctx = OpCount()
    for n in sizes:
        for a, b in _pairs(gf, n, exhaustive, samples, rng):
            want = mul_direct(a, b, ctx)
            for name, res in (
                ("alg2-field", mul_alg2(a, b, FIELD, ctx)[1]),
                ("general-field1", mul_general(a, b, "field1", ctx)),
            ):
                if not fields_equal(res, want):
                    return (
                        f"{name} not field-equal at p={p} n={n}: a={a.coords} "
                        f"b={b.coords} direct={want.coords} got={res.coords}"
                    )
    return None


def _sweep_oracle(p, sizes, samples, rng):
    gf = GroundField(p)
    ctx = OpCount()
    for n in sizes:
        try:
            sf, beta = oracle.splitting_field(p, n)
        except NotCoprime:
            continue  # x^n - 1 is inseparable over GF(p); no oracle arena
        for _ in range(samples):
            a = CycloElement(gf, tuple(rng.randrange(p) for _ in range(n)))
            b = CycloElement(gf, tuple(rng.randrange(p) for _ in range(n)))
            want = oracle.sf_mul(
                oracle.eval_at_beta(a, beta), oracle.eval_at_beta(b, beta)
            )
            results = {
                "direct": mul_direct(a, b, ctx),
                "general-ring1": mul_general(a, b, "ring1", ctx),
                "general-field1": mul_general(a, b, "field1", ctx),
            }
            if n % 2:
                results["alg1"] = mul_alg1(a, b, ctx)[1]
                results["alg2-field"] = mul_alg2(a, b, FIELD, ctx)[1]
            for name, res in results.items():
                if oracle.eval_at_beta(res, beta) != want:
                    return (
                        f"{name} breaks the evaluation homomorphism at "
                        f"p={p} n={n}: a={a.coords} b={b.coords}"
                    )
    return None


def _sweep_onb(p, max_m, samples, rng):
    if p == 2:
        cases = [(2, 1), (4, 1), (3, 2), (5, 2), (6, 2)]
    elif p == 3:
        cases = [(4, 1), (2, 2)]
    else:
        cases = []  # no built-in basis list for other ground fields
    ctx = OpCount()
    for m, k in cases:
        if m > max_m:
            continue
        params = gaussonb.GaussParams.create(m, k, p)
        sf, beta = oracle.splitting_field(p, params.n)
        variants = (
            gaussonb.ONB1_VARIANTS if k == 1 else gaussonb.ONB2_VARIANTS
        )
        mul = gaussonb.mul_onb1 if k == 1 else gaussonb.mul_onb2
        for _ in range(samples):
            a = gaussonb.NormalBasisElement(
                params, tuple(rng.randrange(p) for _ in range(m))
            )
            b = gaussonb.NormalBasisElement(
                params, tuple(rng.randrange(p) for _ in range(m))
            )
            ref = gaussonb.extract(
                mul_direct(gaussonb.embed(a), gaussonb.embed(b), ctx), params, ctx
            )
            ea = oracle.eval_at_beta(gaussonb.embed(a), beta)
            eb = oracle.eval_at_beta(gaussonb.embed(b), beta)
            want = oracle.sf_mul(ea, eb)
            for variant in variants:
                res = mul(a, b, variant, ctx)
                if res != ref:
                    return (
                        f"onb{k} {variant} mismatch at m={m}: a={a.coords} "
                        f"b={b.coords} expected={ref.coords} got={res.coords}"
                    )
                if oracle.eval_at_beta(gaussonb.embed(res), beta) != want:
                    return (
                        f"onb{k} {variant} breaks the homomorphism at m={m}: "
                        f"a={a.coords} b={b.coords}"
                    )
    return None


def _sweep_counts(p, sizes):
    for records in (
        complexity.render_table("table1", [n for n in sizes if n % 2], p),
        complexity.render_table("table6", [2, 3, 4, 5, 6]) if p == 2 else [],
    ):
        for r in records:
            if r.match is False:
                return (
                    f"count mismatch: {r.row_label} size={r.size} "
                    f"expected={r.expected} measured={r.measured}"
                )
    return None


def cmd_verify(args) -> int:
    _ground_field(args.p)
    rng = random.Random(args.seed)
    odd_sizes = [n for n in range(3, args.max_n + 1, 2)]
    suites = [
        (
            "ring-equivalence",
            lambda: _sweep_ring_equivalence(
                args.p, odd_sizes, args.exhaustive, args.samples, rng
            ),
        ),
        (
            "field-redundancy",
            lambda: _sweep_field_equivalence(
                args.p, odd_sizes, args.exhaustive, args.samples, rng
            ),
        ),
        (
            "oracle-homomorphism",
            lambda: _sweep_oracle(
                args.p, range(2, args.max_n + 1), min(args.samples, 100), rng
            ),
        ),
        (
            "onb-end-to-end",
            lambda: _sweep_onb(args.p, args.onb_max_m, min(args.samples, 100), rng),
        ),
        ("counter-exactness", lambda: _sweep_counts(args.p, odd_sizes)),
    ]
    failed = False
    for name, run in suites:
        failure = run()
        if failure is None:
            print(f"PASS {name}")
        else:
            failed = True
            print(f"FAIL {name}: {failure}")
    return 1 if failed else 0


def cmd_count(args) -> int:
    if not is_prime(args.p):
        raise _UsageError("p must be prime")
    size = args.n if args.n is not None else args.m
    if size is None:
        raise _UsageError("one of --n or --m is required")
    got = complexity.measure(args.algo, args.p, size)
    line = (
        f"algo={args.algo} p={args.p} size={size} mult={got.mult} "
        f"doub={got.doub} add={got.add} total={got.total}"
    )
    for table in ("table1", "table6"):
        for row in complexity.TABLES[table]:
            if row.measure_id(size, args.p) == args.algo:
                exp = complexity.expected_counts(row, size)
                flag = "true" if exp == got else "false"
                line += f" row={row.label} expected_total={exp.total} match={flag}"
                break
        else:
            continue
        break
    print(line)
    return 0


def cmd_table(args) -> int:
    if not is_prime(args.p):
        raise _UsageError("p must be prime")
    sizes = (
        [int(s) for s in args.sizes.split(",")]
        if args.sizes
        else ([3, 5, 7, 9, 11, 13] if args.which == "table1" else list(range(2, 13)))
    )
    records = complexity.render_table(args.which, sizes, args.p)
    if args.output == "structured":
        text = "\n".join(r.to_line() for r in records)
    else:
        text = complexity.render_text(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_onb_scan(args) -> int:
    if not is_prime(args.p):
        raise _UsageError("p must be prime")
    lines = []
    for m in range(2, args.max_m + 1):
        for k in (1, 2):
            n = m * k + 1
            n_prime = is_prime(n)
            if not n_prime:
                status = "false"
            else:
                try:
                    status = (
                        "true" if oracle.verify_normal_basis(m, k, args.p) else "false"
                    )
                except OracleUnavailable:
                    status = "unavailable"
            if args.output == "structured":
                lines.append(
                    f"m={m} k={k} n={n} n_prime={'true' if n_prime else 'false'} "
                    f"basis={status}"
                )
            else:
                kind = "type-I " if k == 1 else "type-II"
                verdict = {
                    "true": f"{kind} ONB exists",
                    "false": (
                        f"no {kind.strip()} basis"
                        + ("" if n_prime else f" (n={n} not prime)")
                    ),
                    "unavailable": "oracle unavailable",
                }[status]
                lines.append(f"m={m:>3} k={k} (n={n:>3}): {verdict}")
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomul",
        description="Multiplication in cyclotomic rings/fields and ONB "
        "finite-field multipliers, with exact operation counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mul = sub.add_parser("mul", help="multiply two vectors")
    p_mul.add_argument("--p", type=int, default=2, help="ground-field prime")
    p_mul.add_argument("--n", type=int, help="vector dimension (ring algorithms)")
    p_mul.add_argument("--m", type=int, help="extension degree (ONB algorithms)")
    p_mul.add_argument("--algo", required=True, choices=ALL_ALGOS)
    p_mul.add_argument("--a", required=True, help="first operand, e.g. 1,0,1")
    p_mul.add_argument("--b", required=True, help="second operand")
    p_mul.add_argument(
        "--show-sqrt",
        action="store_true",
        help="also print the pre-permutation vector of alg1/alg2",
    )
    p_mul.set_defaults(func=cmd_mul)

    p_ver = sub.add_parser("verify", help="run the cross-checking sweeps")
    p_ver.add_argument("--p", type=int, default=2)
    p_ver.add_argument("--max-n", type=int, default=9)
    p_ver.add_argument("--exhaustive", action="store_true",
                       help="exhaust input pairs where the space is small")
    p_ver.add_argument("--samples", type=int, default=200,
                       help="random pairs per size otherwise")
    p_ver.add_argument("--onb-max-m", type=int, default=6)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=cmd_verify)

    p_cnt = sub.add_parser("count", help="measure one multiplier's cost")
    p_cnt.add_argument("--p", type=int, default=2)
    p_cnt.add_argument("--n", type=int)
    p_cnt.add_argument("--m", type=int)
    p_cnt.add_argument("--algo", required=True, choices=complexity.MULTIPLIER_IDS)
    p_cnt.set_defaults(func=cmd_count)

    p_tab = sub.add_parser("table", help="render an operation-count table")
    p_tab.add_argument("--which", required=True, choices=("table1", "table6"))
    p_tab.add_argument("--sizes", help="comma-separated sizes")
    p_tab.add_argument("--p", type=int, default=2,
                       help="measurement field for table1")
    p_tab.add_argument("--output", choices=("text", "structured"), default="text")
    p_tab.add_argument("--out", help="write the report to a file")
    p_tab.set_defaults(func=cmd_table)

    p_scan = sub.add_parser("onb-scan", help="scan for optimal normal bases")
    p_scan.add_argument("--p", type=int, default=2)
    p_scan.add_argument("--max-m", type=int, default=12)
    p_scan.add_argument("--output", choices=("text", "structured"), default="text")
    p_scan.add_argument("--out", help="write the listing to a file")
    p_scan.set_defaults(func=cmd_onb_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CyclomulError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

"""Command line interface: ``genfoulkes <subcommand> ...``.

Exit codes: 0 success/verified, 1 mathematical mismatch, 2 usage error,
3 resource bound exceeded.  Data goes to stdout, progress to stderr.
"""

import argparse
import json
import os
import sys

from . import _config, foulkes, oracle
from .characters import character_table
from .partitions import format_partition, omega_k, parse_partition, partitions_of
from .symfun import restrict

CLAIMS = (
    "theorem1",
    "thrall",
    "corollaries",
    "sign-lemma",
    "tabloid-lemma",
    "corollary6",
    "eq1",
    "conjecture",
)


class UsageError(Exception):
    pass


def parse_range(text):
    """``"2..5"`` -> [2, 3, 4, 5]; ``"3"`` -> [3]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi or lo < 0:
        raise UsageError(f"empty or negative range {text!r}")
    return list(range(lo, hi + 1))


def _partition_arg(text, b=None, name="nu"):
    try:
        lam = parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if b is not None and sum(lam) != b:
        raise UsageError(f"{name}={text} is not a partition of b={b}")
    return lam


def _emit(args, payload, table_lines):
    if args.format == "table":
        for line in table_lines:
            print(line)
    else:
        print(json.dumps(payload, indent=2))


def cmd_decompose(args):
    nu = _partition_arg(args.nu, args.b)
    dec = foulkes.foulkes_decomposition(nu, args.a)
    payload = {
        "a": args.a,
        "b": args.b,
        "nu": format_partition(nu),
        "decomposition": dec.to_json(),
        "dimension": dec.dimension(),
    }
    lines = [f"{format_partition(lam)}\t{c}" for lam, c in dec.items()]
    lines.append(f"dimension\t{dec.dimension()}")
    _emit(args, payload, lines)
    return 0


def cmd_kronecker(args):
    if args.table is not None:
        b = args.table
        _config.check_bound("b", b, _config.CHARACTER_TABLE_BOUND, "GENFOULKES_CHARACTER_TABLE_BOUND")
        table = foulkes.kronecker_table(b)
        entries = [
            {"mu": format_partition(mu), "lambda": format_partition(lam), "nu": format_partition(nu), "c": c}
            for (mu, lam, nu), c in table.items()
        ]
        lines = [f"{e['mu']}\t{e['lambda']}\t{e['nu']}\t{e['c']}" for e in entries]
        _emit(args, {"b": b, "coefficients": entries}, lines)
        return 0
    if len(args.partitions) != 3:
        raise UsageError("kronecker needs three partitions or --table B")
    mu, lam, nu = (_partition_arg(p, name="partition") for p in args.partitions)
    if not sum(mu) == sum(lam) == sum(nu):
        raise UsageError("kronecker: partitions must have equal weight")
    _config.check_bound("b", sum(nu), _config.CHARACTER_TABLE_BOUND, "GENFOULKES_CHARACTER_TABLE_BOUND")
    c = foulkes.kronecker(mu, lam, nu)
    payload = {"mu": format_partition(mu), "lambda": format_partition(lam), "nu": format_partition(nu), "c": c}
    _emit(args, payload, [str(c)])
    return 0


def cmd_char_table(args):
    table = character_table(args.n)
    classes = [format_partition(rho) for rho in table.classes]
    rows = {format_partition(lam): list(vals) for lam, vals in table.rows.items()}
    lines = ["\t" + "\t".join(classes)]
    lines += [f"{lam}\t" + "\t".join(str(v) for v in vals) for lam, vals in rows.items()]
    _emit(args, {"n": args.n, "classes": classes, "rows": rows}, lines)
    return 0


def cmd_restrict(args):
    nu = _partition_arg(args.nu, args.b)
    n = args.a * args.b
    if not 1 <= args.k < n:
        raise UsageError(f"k={args.k} outside 1..{n - 1}")
    dec = foulkes.foulkes_decomposition(nu, args.a)
    res = restrict(dec, args.k)
    components = [
        {
            "lambda": format_partition(lam),
            "P_lambda": foulkes.count_P_lambda(args.a, args.b, args.k, lam),
            "dimension": foulkes.v_dimension(nu, args.a, args.k, lam),
        }
        for lam in omega_k(args.a, args.b, args.k)
    ]
    payload = {
        "a": args.a,
        "b": args.b,
        "nu": format_partition(nu),
        "k": args.k,
        "restriction": res.to_json(),
        "components": components,
        "dimension": res.dimension(),
    }
    lines = [f"{format_partition(mu)} x {format_partition(lam)}\t{c}" for (mu, lam), c in res.items()]
    lines += [f"V^{c['lambda']}\tdim {c['dimension']}" for c in components]
    lines.append(f"dimension\t{res.dimension()}")
    _emit(args, payload, lines)
    return 0


def cmd_oracle(args):
    nu = _partition_arg(args.nu, args.b)
    k = args.k if args.k is not None else args.b
    lam = _partition_arg(args.lam, k, name="lam") if args.lam else (1,) * k
    dec = oracle.oracle_decompose(args.a, args.b, nu, k, lam)
    payload = {
        "a": args.a,
        "b": args.b,
        "nu": format_partition(nu),
        "k": k,
        "lambda": format_partition(lam),
        "dimension": dec.dimension(),
        "decomposition": dec.to_json(),
    }
    lines = [f"{format_partition(m)} x {format_partition(l)}\t{c}" for (m, l), c in dec.items()]
    lines.append(f"dimension\t{dec.dimension()}")
    _emit(args, payload, lines)
    return 0


def _verify_jobs(args):
    a_range = parse_range(args.a) if args.a else None
    b_range = parse_range(args.b) if args.b else None
    claim = args.claim

    def need(name, value):
        if value is None:
            raise UsageError(f"verify {claim} needs --{name}")
        return value

    jobs = []
    if claim == "theorem1":
        for a in need("a", a_range):
            if a < 2:
                raise UsageError("theorem1 needs a >= 2")
            for b in need("b", b_range):
                jobs += [(foulkes.verify_theorem1, (nu, a)) for nu in partitions_of(b)]
    elif claim == "thrall":
        for b in need("b", b_range):
            jobs.append((foulkes.verify_thrall_b, (b,)))
        for a in a_range or b_range:
            jobs.append((foulkes.verify_thrall_a, (a,)))
    elif claim == "corollaries":
        jobs = [(foulkes.verify_corollaries, (b,)) for b in need("b", b_range)]
    elif claim == "sign-lemma":
        for a in need("a", a_range):
            for b in need("b", b_range):
                jobs += [(foulkes.verify_sign_component_lemma, (nu, a)) for nu in partitions_of(b)]
    elif claim == "tabloid-lemma":
        jobs = [(foulkes.verify_tabloid_lemma, (a, b)) for a in need("a", a_range) for b in need("b", b_range)]
    elif claim == "corollary6":
        jobs = [(foulkes.verify_corollary6, (a, b)) for a in need("a", a_range) for b in need("b", b_range)]
    elif claim == "eq1":
        k_range = parse_range(args.k) if args.k else None
        for a in need("a", a_range):
            for b in need("b", b_range):
                ks = [k for k in (k_range or range(1, a * b)) if 1 <= k < a * b]
                jobs += [(foulkes.verify_eq1, (nu, a, k)) for nu in partitions_of(b) for k in ks]
    elif claim == "conjecture":
        for a in need("a", a_range):
            for b in need("b", b_range):
                if a > b:
                    raise UsageError(f"conjecture needs a <= b, got a={a}, b={b}")
                jobs.append((foulkes.check_foulkes_conjecture, (a, b)))
    return jobs


def _precheck_bounds(args):
    a_max = max(parse_range(args.a)) if args.a else 2
    b_max = max(parse_range(args.b)) if args.b else 2
    extra = 1 if args.claim == "corollary6" else 0
    if args.claim == "thrall":
        n = 2 * max(a_max, b_max)
    else:
        n = (a_max + extra) * b_max
    _config.check_bound("ab", n, _config.PLETHYSM_BOUND, "GENFOULKES_PLETHYSM_BOUND")


def cmd_verify(args):
    _precheck_bounds(args)
    jobs = _verify_jobs(args)
    print(f"verify {args.claim}: {len(jobs)} instance(s), jobs={args.jobs}", file=sys.stderr)
    reports = foulkes.run_sweep(jobs, args.jobs)
    status = "verified" if all(r.ok for r in reports) else "mismatch"
    payload = {"claim": args.claim, "status": status, "reports": [r.to_json() for r in reports]}
    lines = [f"{r.status}\t{r.claim}\t{json.dumps(r.params)}" for r in reports]
    lines.append(f"overall\t{status}")
    _emit(args, payload, lines)
    return 0 if status == "verified" else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="genfoulkes", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="Specht decomposition of F_nu^a")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--nu", required=True, help="partition of b, e.g. [2,1]")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("kronecker", help="Kronecker coefficient(s)")
    p.add_argument("partitions", nargs="*", help="mu lambda nu")
    p.add_argument("--table", type=int, metavar="B", help="every coefficient for weight B")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("char-table", help="character table of S_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("restrict", help="restriction of F_nu^a to S_k x S_{ab-k}")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("verify", help="verify one family of identities over a sweep")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--a", "-a", dest="a", help="N or LO..HI")
    p.add_argument("--b", "-b", dest="b", help="N or LO..HI")
    p.add_argument("--k", "-k", dest="k", help="cut points for eq1, N or LO..HI")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force decomposition of a restriction component")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("-k", type=int, help="cut point (default b)")
    p.add_argument("--lam", help="intersection type (default [1^k])")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _config.BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

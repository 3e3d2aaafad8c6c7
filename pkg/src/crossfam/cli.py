"""Command line surface for the library.

Commands: weight, lambda, classify, shift, partner, search, certify,
walkcount. Rationals cross the boundary as "num/den" strings, never
decimals. Identical invocations produce byte-identical output; the
certify report embeds elapsed_ms=0 for that reason (pass --timings for
real timings on standard error).

Exit codes: 0 success (certify: every record passed), 1 certify had at
least one failing record, 2 parse error (arguments or family files),
3 bad numeric parameter, 4 size cap exceeded, 5 unknown claim id.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from .certify import ClaimReport, certify_all, claim_ids
from .familyfile import FamilyFileError, parse_family, serialize_family
from .families import classify_walk, lambda_family
from .measure import count_walks_avoiding_line, mu_weight
from .search import UPSET_CAP, max_product
from .shifting import maximal_partner, shift_ij, shift_pair_to_fixpoint

EXIT_PARSE = 2
EXIT_BADPARAM = 3
EXIT_CAP = 4
EXIT_UNKNOWN = 5

REPORT_HEADER = "# crossfam-certify v1"


def _die(code: int, message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _load_family(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _die(EXIT_PARSE, f"cannot read {path}: {exc}")
    try:
        return parse_family(text)
    except FamilyFileError as exc:
        _die(EXIT_PARSE, f"{path}: {exc}")


def _parse_bias(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        _die(EXIT_BADPARAM, f"bad bias {text!r}, expected num/den in (0,1)")
    if not (0 < p < 1):
        _die(EXIT_BADPARAM, f"bias {text} outside (0,1)")
    return p


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _member_text(subset) -> str:
    els = subset.sorted_elements()
    return ",".join(str(e) for e in els) if els else "-"


def cmd_weight(args) -> int:
    fam = _load_family(args.family)
    p = _parse_bias(args.p)
    print(mu_weight(fam, p))
    return 0


def cmd_lambda(args) -> int:
    fam = _load_family(args.family)
    try:
        print(lambda_family(fam))
    except ValueError as exc:
        _die(EXIT_PARSE, str(exc))
    return 0


def cmd_classify(args) -> int:
    fam = _load_family(args.family)
    for subset in sorted(fam, key=lambda s: s.sorted_elements()):
        try:
            cls = classify_walk(subset, args.line)
        except ValueError as exc:
            _die(EXIT_BADPARAM, str(exc))
        print(f"{_member_text(subset)} {cls.name}")
    return 0


def cmd_shift(args) -> int:
    if args.family_b is None:
        if args.i is None or args.j is None:
            _die(EXIT_PARSE, "single-family shift needs --i and --j")
        fam = _load_family(args.family)
        try:
            out = shift_ij(fam, args.i, args.j)
        except ValueError as exc:
            _die(EXIT_BADPARAM, str(exc))
        sys.stdout.write(serialize_family(out))
        return 0
    if args.i is not None or args.j is not None:
        _die(EXIT_PARSE, "pair mode shifts to a fixpoint; --i/--j not allowed")
    fam_a = _load_family(args.family)
    fam_b = _load_family(args.family_b)
    try:
        shifted_a, shifted_b = shift_pair_to_fixpoint(fam_a, fam_b)
    except ValueError as exc:
        _die(EXIT_BADPARAM, str(exc))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path_a = out_dir / "shifted_A.fam"
    path_b = out_dir / "shifted_B.fam"
    path_a.write_text(serialize_family(shifted_a), encoding="utf-8")
    path_b.write_text(serialize_family(shifted_b), encoding="utf-8")
    print(path_a)
    print(path_b)
    return 0


def cmd_partner(args) -> int:
    fam = _load_family(args.family)
    if args.t < 0:
        _die(EXIT_BADPARAM, "threshold must be nonnegative")
    try:
        out = maximal_partner(fam, args.t)
    except ValueError as exc:
        _die(EXIT_PARSE, str(exc))
    sys.stdout.write(serialize_family(out))
    return 0


def cmd_search(args) -> int:
    p = _parse_bias(args.p)
    if args.n > UPSET_CAP and not args.unsafe_n:
        _die(EXIT_CAP, f"search capped at n = {UPSET_CAP}; pass --unsafe-n to override")
    try:
        result = max_product(args.n, args.t, p, unsafe_n=args.unsafe_n)
    except ValueError as exc:
        _die(EXIT_BADPARAM, str(exc))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "witness_A.fam").write_text(
        serialize_family(result.witness_A), encoding="utf-8"
    )
    (out_dir / "witness_B.fam").write_text(
        serialize_family(result.witness_B), encoding="utf-8"
    )
    print(result.best_value)
    return 0


def _record_line(report: ClaimReport) -> str:
    parts = [f"claim_id={report.claim_id}"]
    parts += [f"{k}={v}" for k, v in report.params]
    parts.append(f"lhs={_rat(report.lhs)}")
    parts.append(f"rhs={_rat(report.rhs)}")
    parts.append(f"verdict={'pass' if report.verdict else 'fail'}")
    parts.append("elapsed_ms=0")
    return " ".join(parts)


def cmd_certify(args) -> int:
    claims = None
    if args.claim is not None:
        if args.claim not in claim_ids():
            _die(EXIT_UNKNOWN, f"unknown claim id {args.claim!r}")
        claims = [args.claim]
    t_grid = None
    if args.t is not None:
        try:
            t_grid = [int(part) for part in args.t.split(",") if part.strip()]
        except ValueError:
            _die(EXIT_PARSE, f"bad t list {args.t!r}")
        if not t_grid:
            _die(EXIT_PARSE, "empty t list")
    started = time.monotonic()
    try:
        reports = certify_all(t_grid=t_grid, p_policy=args.p_policy, claims=claims)
    except ValueError as exc:
        _die(EXIT_BADPARAM, str(exc))
    print(REPORT_HEADER)
    passed = 0
    for report in reports:
        print(_record_line(report))
        passed += report.verdict
    failed = len(reports) - passed
    print(f"# total={len(reports)} pass={passed} fail={failed}")
    if args.timings:
        ms = int((time.monotonic() - started) * 1000)
        print(f"# elapsed {ms} ms", file=sys.stderr)
    return 1 if failed else 0


def cmd_walkcount(args) -> int:
    try:
        print(count_walks_avoiding_line(args.x0, args.y0, args.c))
    except ValueError as exc:
        _die(EXIT_BADPARAM, str(exc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossfam",
        description="exact set-family weights, shifts, searches and bound certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("weight", help="biased weight of a family")
    w.add_argument("family")
    w.add_argument("--p", required=True, help="bias as num/den")
    w.set_defaults(func=cmd_weight)

    lam = sub.add_parser("lambda", help="least peak line level over the family")
    lam.add_argument("family")
    lam.set_defaults(func=cmd_lambda)

    cl = sub.add_parser("classify", help="walk class of each member against a line")
    cl.add_argument("family")
    cl.add_argument("--line", type=int, required=True)
    cl.set_defaults(func=cmd_classify)

    sh = sub.add_parser("shift", help="one (i,j) shift, or pair fixpoint with two files")
    sh.add_argument("family")
    sh.add_argument("family_b", nargs="?")
    sh.add_argument("--i", type=int)
    sh.add_argument("--j", type=int)
    sh.add_argument("--out-dir", default=".")
    sh.set_defaults(func=cmd_shift)

    pa = sub.add_parser("partner", help="largest family cross t-intersecting the input")
    pa.add_argument("family")
    pa.add_argument("--t", type=int, required=True)
    pa.set_defaults(func=cmd_partner)

    se = sub.add_parser("search", help="exact best product over up-set pairs")
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--t", type=int, required=True)
    se.add_argument("--p", required=True)
    se.add_argument("--out-dir", default=".")
    se.add_argument("--unsafe-n", action="store_true",
                    help="lift the ground-size cap (doubly exponential, very slow)")
    se.set_defaults(func=cmd_search)

    ce = sub.add_parser("certify", help="evaluate registered bound claims")
    group = ce.add_mutually_exclusive_group()
    group.add_argument("--claim", help="single claim id")
    group.add_argument("--all", action="store_true", help="whole registry (default)")
    ce.add_argument("--t", help="comma separated t grid replacing the defaults")
    ce.add_argument("--p-policy", default="endpoints",
                    help="endpoints or grid:k for k interior biases")
    ce.add_argument("--timings", action="store_true",
                    help="real elapsed time on standard error")
    ce.set_defaults(func=cmd_certify)

    wc = sub.add_parser("walkcount", help="lattice walks staying below a line")
    wc.add_argument("--x0", type=int, required=True)
    wc.add_argument("--y0", type=int, required=True)
    wc.add_argument("--c", type=int, required=True)
    wc.set_defaults(func=cmd_walkcount)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

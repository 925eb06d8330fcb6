"""Command-line entry point: ``nodes``, ``verify``, ``interp``, ``lebesgue``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cubelattice import io as rule_io
from cubelattice.cubature import make_rule
from cubelattice.interpolation import SampleKeyError, algebraic_interpolant, lebesgue_estimate, lebesgue_ratio
from cubelattice.lattice_core import xi_count
from cubelattice.verify import SUITES, VerifyConfig, run


def parse_n_list(text: str) -> list[int]:
    """``"4"``, ``"4,8,16"`` or the inclusive range ``"2..8"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse n list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty n list {text!r}")
    return values


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _single_n(ns: list[int]) -> int:
    if len(ns) != 1:
        raise ValueError(f"this command takes a single n, got {ns}")
    return ns[0]


def cmd_nodes(args) -> int:
    rule = make_rule(args.dim, _single_n(args.n), args.rule)
    text = rule_io.emit_json(rule) if args.format == "json" else rule_io.emit_csv(rule)
    _write(text, args.out)
    return 0


def cmd_verify(args) -> int:
    dims = [args.dim] if args.dim else [2, 3]
    cfg = VerifyConfig(seed=args.seed, tolerance_scale=args.tolerance_scale)
    results = run(args.suite, dims, args.n, cfg)
    _write("".join(r.to_json() + "\n" for r in results), args.out)
    failures = [r for r in results if r.unexpected]
    for r in failures:
        print(f"unexpected result: {r.name} max_error={r.max_error:.3e} tolerance={r.tolerance:.1e}", file=sys.stderr)
    return 1 if failures else 0


def cmd_interp(args) -> int:
    n = _single_n(args.n)
    samples = rule_io.read_samples(Path(args.samples).read_text(), args.dim)
    probes = rule_io.read_probes(Path(args.probes).read_text(), args.dim)
    interp = algebraic_interpolant(args.dim, n, samples)
    values = interp.evaluate(probes).real if len(probes) else probes[:, 0]
    _write(rule_io.write_values(probes, values), args.out)
    return 0


def cmd_lebesgue(args) -> int:
    grid = args.grid if args.grid is not None else 4 * max(args.n)
    if grid < 4 * max(args.n):
        raise ValueError(f"--grid must be >= 4 * max(n) = {4 * max(args.n)}")
    lines = ["n nodes estimate ratio"]
    for n in args.n:
        est = lebesgue_estimate(args.dim, n, grid)
        ratio = lebesgue_ratio(est, n) if n > 1 else float("nan")
        lines.append(f"{n} {xi_count(args.dim, n)} {est:.12g} {ratio:.12g}")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubelattice", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dim_required=True, n_default=None):
        p.add_argument("--dim", type=int, choices=(2, 3), required=dim_required)
        p.add_argument(
            "--n", "--n-range", dest="n", type=parse_n_list, required=n_default is None, default=n_default,
            help="single n, comma list, or inclusive range a..b",
        )
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("nodes", help="emit cubature nodes and weights")
    common(p)
    p.add_argument("--rule", choices=("trig-sym", "trig-equal", "w0", "w1"), required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_nodes)

    p = sub.add_parser("verify", help="run verification batteries, one JSON record per check")
    common(p, dim_required=False, n_default=[2, 3, 4])
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance-scale", type=float, default=1.0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interp", help="evaluate the algebraic interpolant of sampled data")
    common(p)
    p.add_argument("--samples", required=True, help="CSV: integer index columns, then value")
    p.add_argument("--probes", required=True, help="CSV: algebraic coordinates t1..td")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("lebesgue", help="tabulate Lebesgue constant estimates")
    common(p)
    p.add_argument("--grid", type=int, default=None, help="grid points per axis (default 4 * max n)")
    p.set_defaults(func=cmd_lebesgue)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SampleKeyError as exc:
        print(f"error: sample keys do not match the node set: {exc}", file=sys.stderr)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())

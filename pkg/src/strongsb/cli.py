"""``gb`` command-line front end."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bench import BenchmarkSpec, gen_benchmark
from .engine import EngineConfig, buchberger, interreduce, sorted_basis, verify_strong
from .pairs import Strategy
from .parse import IdealFile, ParseError, parse_ideal
from .rpc import rational_precheck


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected 'on' or 'off', got '{text}'")
    return text == "on"


def _cap(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got '{text}'") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got '{text}'")
    return n


def _bench(text: str) -> BenchmarkSpec:
    try:
        return BenchmarkSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gb", description="Strong Groebner/standard bases over the integers."
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="ideal file")
    src.add_argument("--bench", type=_bench, metavar="FAMILY:N",
                     help="built-in benchmark: cyclic, katsura, eco or noon")
    p.add_argument("--pairs", choices=["all", "filtered"], default="all")
    p.add_argument("--lc-red", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--replace-cap", type=_cap, default=5, metavar="N")
    p.add_argument("--tail-red", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--rpc", action="store_true", help="run the rational pre-check first")
    p.add_argument("--check", action="store_true", help="verify the result is a strong basis")
    p.add_argument("--stats", action="store_true", help="print run statistics")
    p.add_argument("-o", "--output", metavar="OUT", help="also write the basis as an ideal file")
    return p


def _load(args) -> tuple[IdealFile, str]:
    if args.bench is not None:
        return gen_benchmark(args.bench), args.bench.header
    with open(args.file, encoding="utf-8") as fh:
        return parse_ideal(fh.read()), ""


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        ideal, header = _load(args)
    except (OSError, ParseError) as e:
        print(f"gb: {e}", file=sys.stderr)
        return 2

    config = EngineConfig(
        strategy=Strategy(args.pairs),
        lc_reductions=args.lc_red,
        replace_cap=args.replace_cap,
        tail_reduce=args.tail_red,
        rpc=args.rpc,
    )
    gens = list(ideal.generators)
    cert = None
    if config.rpc:
        if not ideal.order.is_global:
            print("gb: --rpc needs a global monomial order", file=sys.stderr)
            return 2
        gens, cert = rational_precheck(gens, ideal.order)

    basis, stats = buchberger(gens, ideal.order, config)
    final = interreduce(basis, tail=config.tail_reduce)
    result = sorted_basis(final)
    stats.basis_size = len(result)

    if header:
        print(f"# {header}", file=out)
    for f in result:
        print(f, file=out)
    if args.stats:
        print("[stats]", file=out)
        for line in stats.as_lines():
            print(line, file=out)
        if config.rpc:
            if cert is None:
                print("rpc_constant=none", file=out)
            else:
                print(f"rpc_constant={cert.constant}", file=out)
                print(f"rpc_identity={cert.identity()}", file=out)

    if args.output and basis.ring is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(IdealFile(basis.ring, ideal.order, result).dumps(header))

    status = 0
    if args.check:
        report = verify_strong(final, ideal.generators)
        if report.ok:
            print(f"[check] ok ({report.checked} reductions)", file=out)
        else:
            print(f"[check] FAILED: {len(report.failures)} nonzero remainders", file=out)
            for w in report.failures[:10]:
                print(f"  {w}", file=out)
            status = 1
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

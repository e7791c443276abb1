"""Command-line front-end: check, bound, realize, generate, bench.

Records are one bidegree sequence per line, in either the plain form
``a1,a2,...,an;b1,b2,...,bn`` or a JSON object ``{"in": [...], "out":
[...]}`` — auto-detected from the first non-whitespace byte.  Blank lines
are skipped.  Parsing round-trips: printing a parsed record reproduces
the plain form byte for byte.

Exit codes for ``check`` and ``realize``: 0 when every record is graphic,
1 when any is not graphic, 2 when any is inconclusive (and none is
non-graphic), 3 on input error.  Malformed records report the offending
line number and poison the exit code with 3, but processing continues.
A well-formed record whose in- and out-degrees sum differently is not an
input error: unequal sums already disprove graphicality, so ``check`` and
``realize`` emit ``NOT_GRAPHIC sum-mismatch`` for it and count it like
any other non-graphic record.

The default seed for ``generate``/``bench`` comes from the
``BIDEGREE_SEED`` environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from .core import BidegreeSequence, new_sequence
from .errors import BidegreeError, SumMismatch
from .exact import (
    CheckOutcome,
    Verdict,
    check_no_loops,
    check_with_loops,
    violated_indices,
)
from .generate import GeneratorSpec, generate_sequence
from .realize import realize
from .sufficient import (
    Condition,
    Prepared,
    bound_table,
    certify,
    check_cor2,
    check_cor3,
    check_cor5,
    check_thm2,
    check_thm3,
    check_thm4,
    check_thm5,
    check_thm6,
)

__all__ = ["main", "entry", "parse_record", "format_record"]

_CHECKS = {
    Condition.ZZ: check_thm2,
    Condition.MAX_PRODUCT_LOOPS: check_thm3,
    Condition.MAX_PRODUCT_NO_LOOPS: check_thm4,
    Condition.MEAN_MIN_LOOPS: check_thm5,
    Condition.MEAN_MIN_NO_LOOPS: check_thm6,
    Condition.MULTIPLICITY_LOOPS: check_cor2,
    Condition.MULTIPLICITY_NO_LOOPS: check_cor3,
    Condition.HEAVY_TAIL: check_cor5,
}
_BY_CODE = {cond.value: cond for cond in Condition}

# certificate parameters echoed on GRAPHIC output lines, per condition
_PARAM_ORDER = {
    Condition.ZZ: ("m", "M"),
    Condition.MAX_PRODUCT_LOOPS: ("Ma", "Mb"),
    Condition.MAX_PRODUCT_NO_LOOPS: ("Ma", "Mb"),
    Condition.MEAN_MIN_LOOPS: ("k", "Mmax"),
    Condition.MEAN_MIN_NO_LOOPS: ("k", "Mmax"),
    Condition.MULTIPLICITY_LOOPS: ("k", "M"),
    Condition.MULTIPLICITY_NO_LOOPS: ("k", "M"),
    Condition.HEAVY_TAIL: ("R", "P", "k", "Mmax"),
}


def _int_entries(values):
    entries = []
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int):
            raise BidegreeError(f"degree entries must be integers, got {x!r}")
        entries.append(x)
    return entries


def parse_record(line: str) -> BidegreeSequence:
    """Parse one record line (plain or JSON form)."""
    text = line.strip()
    if not text:
        raise BidegreeError("empty record")
    if text.startswith("{"):
        obj = json.loads(text)
        if not isinstance(obj, dict) or "in" not in obj or "out" not in obj:
            raise BidegreeError('JSON record needs "in" and "out" arrays')
        return new_sequence(_int_entries(obj["in"]), _int_entries(obj["out"]))
    if ";" not in text:
        raise BidegreeError("plain record needs ';' between in- and out-degrees")
    left, right = text.split(";", 1)
    return new_sequence(
        [int(x) for x in left.split(",")], [int(x) for x in right.split(",")]
    )


def format_record(seq: BidegreeSequence) -> str:
    """Plain-form record line for a sequence."""
    return (
        ",".join(map(str, seq.in_degrees))
        + ";"
        + ",".join(map(str, seq.out_degrees))
    )


def _iter_records(stream):
    for lineno, line in enumerate(stream, start=1):
        if line.strip():
            yield lineno, line


def _outcome_line(outcome: CheckOutcome, method_label: str) -> str:
    if outcome.verdict is Verdict.GRAPHIC:
        cert = outcome.certificate
        if cert is None:
            return "GRAPHIC exact"
        params = " ".join(
            f"{key}={cert.parameters[key]}"
            for key in _PARAM_ORDER[cert.condition]
        )
        return f"GRAPHIC {cert.condition.value} {params}"
    if outcome.verdict is Verdict.NOT_GRAPHIC:
        return f"NOT_GRAPHIC exact j={outcome.witness}"
    return f"INCONCLUSIVE {method_label}"


class _Severity:
    """Exit-code aggregation: 3 (input error) > 1 (not graphic) > 2 > 0."""

    def __init__(self):
        self.error = False
        self.not_graphic = False
        self.inconclusive = False

    def record(self, outcome: CheckOutcome):
        if outcome.verdict is Verdict.NOT_GRAPHIC:
            self.not_graphic = True
        elif outcome.verdict is Verdict.INCONCLUSIVE:
            self.inconclusive = True

    @property
    def code(self) -> int:
        if self.error:
            return 3
        if self.not_graphic:
            return 1
        if self.inconclusive:
            return 2
        return 0


def _open_input(path, stdin):
    if path == "-":
        return stdin, False
    return open(path, "r", encoding="utf-8"), True


def _cmd_check(args, stdin, stdout, stderr) -> int:
    stream, close = _open_input(args.input, stdin)
    sev = _Severity()
    try:
        for lineno, line in _iter_records(stream):
            try:
                seq = parse_record(line)
            except SumMismatch:
                sev.not_graphic = True
                print("NOT_GRAPHIC sum-mismatch", file=stdout)
                continue
            except (BidegreeError, ValueError, json.JSONDecodeError) as exc:
                print(f"line {lineno}: {exc}", file=stderr)
                sev.error = True
                continue
            if args.method == "exact":
                outcome = (
                    check_with_loops(seq) if args.loops else check_no_loops(seq)
                )
            elif args.method == "auto":
                outcome = certify(
                    seq, allow_loops=args.loops, fallback_exact=args.fallback_exact
                )
            else:
                cond = _BY_CODE[args.method]
                if not args.loops and not cond.certifies_no_loops:
                    outcome = CheckOutcome(Verdict.INCONCLUSIVE)
                else:
                    outcome = _CHECKS[cond](seq)
            sev.record(outcome)
            print(_outcome_line(outcome, args.method), file=stdout)
    finally:
        if close:
            stream.close()
    return sev.code


def _cmd_bound(args, stdin, stdout, stderr) -> int:
    try:
        table = bound_table(args.n, args.m, args.total)
    except BidegreeError as exc:
        print(f"error: {exc}", file=stderr)
        return 3
    cells = {j: table.h.get(j, "n/a") for j in range(2, 7)}
    if args.format == "csv":
        print("J,H", file=stdout)
        for j in range(2, 7):
            print(f"{j},{cells[j]}", file=stdout)
    else:
        print(" ".join(f"H{j}={cells[j]}" for j in range(2, 7)), file=stdout)
        best = max(table.h.values())
        winners = " ".join(f"H{j}" for j in sorted(table.h) if table.h[j] == best)
        print(f"largest: {winners}", file=stdout)
    return 0


def _cmd_realize(args, stdin, stdout, stderr) -> int:
    stream, close = _open_input(args.input, stdin)
    sev = _Severity()
    first = True
    try:
        for lineno, line in _iter_records(stream):
            try:
                seq = parse_record(line)
            except SumMismatch:
                if not first:
                    print(file=stdout)
                first = False
                sev.not_graphic = True
                print("NOT_GRAPHIC sum-mismatch", file=stdout)
                continue
            except (BidegreeError, ValueError, json.JSONDecodeError) as exc:
                print(f"line {lineno}: {exc}", file=stderr)
                sev.error = True
                continue
            if not first:
                print(file=stdout)  # blank separator between records
            first = False
            result = realize(seq, allow_loops=args.loops)
            if isinstance(result, CheckOutcome):
                sev.record(result)
                print(f"NOT_GRAPHIC j={result.witness}", file=stdout)
                continue
            if args.format == "dense":
                for i in range(result.n):
                    print(result.row_string(i), file=stdout)
            else:
                for src, dst in result.edges():
                    print(f"{src} {dst}", file=stdout)
    finally:
        if close:
            stream.close()
    return sev.code


def _spec_from_args(args, seed: int) -> GeneratorSpec:
    return GeneratorSpec(
        kind=args.kind,
        n=args.n,
        seed=seed,
        total=args.total,
        min_degree=args.min,
        max_degree=args.max,
        exponent=args.exponent,
        max_in=args.Ma,
        max_out=args.Mb,
    )


def _cmd_generate(args, stdin, stdout, stderr) -> int:
    try:
        for i in range(args.count):
            seq = generate_sequence(_spec_from_args(args, args.seed + i))
            print(format_record(seq), file=stdout)
    except BidegreeError as exc:
        print(f"error: {exc}", file=stderr)
        return 3
    return 0


def _percentile99(samples) -> int:
    ordered = sorted(samples)
    idx = max(0, -(-99 * len(ordered) // 100) - 1)  # ceil(0.99*len) - 1
    return ordered[idx]


def _cmd_bench(args, stdin, stdout, stderr) -> int:
    if args.corpus is not None:
        stream, close = _open_input(args.corpus, stdin)
        try:
            try:
                seqs = [parse_record(line) for _, line in _iter_records(stream)]
            except (BidegreeError, ValueError, json.JSONDecodeError) as exc:
                print(f"error: {exc}", file=stderr)
                return 3
        finally:
            if close:
                stream.close()
    elif args.kind is not None:
        try:
            seqs = [
                generate_sequence(_spec_from_args(args, args.seed + i))
                for i in range(args.count)
            ]
        except BidegreeError as exc:
            print(f"error: {exc}", file=stderr)
            return 3
    else:
        print("error: need --corpus or --kind", file=stderr)
        return 3

    if not seqs:
        print("empty corpus", file=stdout)
        return 0

    conditions = [
        cond
        for cond in Condition
        if args.loops or cond.certifies_no_loops
    ]
    exact_check = check_with_loops if args.loops else check_no_loops

    times: dict = {"prepare": [], "exact": []}
    certified: dict = {}
    inconclusive: dict = {}
    for cond in conditions:
        times[cond.value] = []
        certified[cond.value] = 0
        inconclusive[cond.value] = 0
    exact_graphic = 0
    exact_not_graphic = 0
    witness_hist: dict = {}

    clock = time.perf_counter_ns
    for seq in seqs:
        for rep in range(args.repeat):
            t0 = clock()
            prep = Prepared(seq)
            prep.pairs_equal, prep.prefix_in, prep.prefix_out  # noqa: B018
            prep.suffix_pair_max
            times["prepare"].append(clock() - t0)

            for cond in conditions:
                check = _CHECKS[cond]
                t0 = clock()
                outcome = check(seq, prep)
                times[cond.value].append(clock() - t0)
                if rep == 0:
                    if outcome.verdict is Verdict.GRAPHIC:
                        certified[cond.value] += 1
                    else:
                        inconclusive[cond.value] += 1

            t0 = clock()
            exact_outcome = exact_check(seq)
            times["exact"].append(clock() - t0)
            if rep == 0:
                if exact_outcome.is_graphic:
                    exact_graphic += 1
                else:
                    exact_not_graphic += 1
                    for j in violated_indices(seq, args.loops):
                        witness_hist[j] = witness_hist.get(j, 0) + 1

    rows = []
    for cond in conditions:
        code = cond.value
        coverage = (
            f"{certified[code] / exact_graphic:.4f}" if exact_graphic else "n/a"
        )
        rows.append(
            (
                code,
                certified[code],
                inconclusive[code],
                0,
                coverage,
                int(statistics.median(times[code])),
                _percentile99(times[code]),
            )
        )
    rows.append(
        (
            "exact",
            exact_graphic,
            0,
            exact_not_graphic,
            "1.0000" if exact_graphic else "n/a",
            int(statistics.median(times["exact"])),
            _percentile99(times["exact"]),
        )
    )
    rows.append(
        (
            "prepare",
            0,
            0,
            0,
            "n/a",
            int(statistics.median(times["prepare"])),
            _percentile99(times["prepare"]),
        )
    )

    header = (
        "check",
        "certified",
        "inconclusive",
        "not_graphic",
        "coverage",
        "median_ns",
        "p99_ns",
    )
    print(
        f"records={len(seqs)} repeat={args.repeat} "
        f"policy={'loops' if args.loops else 'no-loops'}",
        file=stdout,
    )
    print(
        "sufficient checks are timed after stats/profile precomputation"
        " (cost shown in the prepare row)",
        file=stdout,
    )
    widths = [12, 9, 12, 11, 8, 10, 10]
    print(
        " ".join(str(h).ljust(w) for h, w in zip(header, widths)), file=stdout
    )
    for row in rows:
        print(
            " ".join(str(c).ljust(w) for c, w in zip(row, widths)), file=stdout
        )
    if witness_hist:
        top = sorted(witness_hist.items(), key=lambda kv: (-kv[1], kv[0]))[:10]
        summary = " ".join(f"j={j}:{c}" for j, c in top)
        print(f"violated indices over non-graphic records: {summary}", file=stdout)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(str(c) for c in row) + "\n")
    return 0


def _add_loop_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--loops",
        dest="loops",
        action="store_true",
        default=True,
        help="allow self-loops (default)",
    )
    group.add_argument(
        "--no-loops",
        dest="loops",
        action="store_false",
        help="require a zero diagonal",
    )


def _add_generator_flags(parser, kind_required):
    parser.add_argument(
        "--kind",
        choices=["uniform", "powerlaw", "counterexample1", "extremal"],
        required=kind_required,
        help="generator family",
    )
    parser.add_argument("--n", type=int, help="node count")
    parser.add_argument("--total", type=int, help="degree sum")
    parser.add_argument("--min", type=int, help="minimum degree (uniform)")
    parser.add_argument("--max", type=int, help="maximum degree (uniform/extremal)")
    parser.add_argument("--exponent", type=float, help="power-law exponent (> 2)")
    parser.add_argument("--Ma", type=int, help="maximum in-degree (counterexample1)")
    parser.add_argument("--Mb", type=int, help="maximum out-degree (counterexample1)")
    parser.add_argument("--count", type=int, default=1, help="records to emit")
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("BIDEGREE_SEED", "0")),
        help="base seed (record i uses seed+i); default from BIDEGREE_SEED",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidegree",
        description="Graphicality checks, realization, and generators for "
        "directed bidegree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide graphicality per record")
    p_check.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    _add_loop_flags(p_check)
    p_check.add_argument(
        "--method",
        choices=["exact", "auto"] + sorted(_BY_CODE),
        default="auto",
        help="exact check, one certificate, or the auto ladder",
    )
    p_check.add_argument(
        "--fallback-exact",
        action="store_true",
        help="with --method auto, settle inconclusive records exactly",
    )

    p_bound = sub.add_parser("bound", help="largest certifiable max degree per condition")
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--m", type=int, required=True)
    p_bound.add_argument("--total", type=int, required=True)
    p_bound.add_argument("--format", choices=["text", "csv"], default="text")

    p_realize = sub.add_parser("realize", help="construct adjacency matrices")
    p_realize.add_argument("input", nargs="?", default="-")
    _add_loop_flags(p_realize)
    p_realize.add_argument("--format", choices=["dense", "edges"], default="dense")

    p_generate = sub.add_parser("generate", help="emit generated records")
    _add_generator_flags(p_generate, kind_required=True)

    p_bench = sub.add_parser("bench", help="coverage and timing over a corpus")
    p_bench.add_argument("--corpus", help="record file (or - for stdin)")
    _add_loop_flags(p_bench)
    _add_generator_flags(p_bench, kind_required=False)
    p_bench.add_argument("--repeat", type=int, default=1, help="timing repetitions")
    p_bench.add_argument("--csv", help="also write the report as CSV to this path")

    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    args = build_parser().parse_args(argv)
    handler = {
        "check": _cmd_check,
        "bound": _cmd_bound,
        "realize": _cmd_realize,
        "generate": _cmd_generate,
        "bench": _cmd_bench,
    }[args.command]
    return handler(args, stdin, stdout, stderr)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()

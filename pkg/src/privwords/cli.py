"""Command line interface.

    privwords analyze --word 0120
    privwords profile --source fibonacci --nmax 100 --property privileged
    privwords tm-table --nmax 70
    privwords scan-gaps --source tm --from 80 --to 260
    privwords verify --file words.txt

Exit codes: 0 success, 1 a verify command found a violation, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .generators import parse_source
from .palindromes import palindromic_factors, pri_equals_pal, rich_via_returns
from .privileged import ComplexityProfile, privileged_factors
from .qcomplexity import DEFAULT_CAP, DEFAULT_CUSHION, get_property, profile_source
from .returns import binary_c_poor_via_conjugate, c_poor_via_xy, complete_return_factors
from .words import EPS, parse_word, render

FORMATS = ("table", "csv", "json")

log = logging.getLogger("privwords")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    source: str | None = None
    word: str | None = None
    n_max: int = 0
    cushion: int = DEFAULT_CUSHION
    properties: tuple[str, ...] = ("privileged",)
    fmt: str = "table"
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.cushion < 1:
            raise UsageError("--cushion must be at least 1")
        if self.n_max < 0:
            raise UsageError("--nmax must be non-negative")
        if self.fmt not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}")


# -- analysis -------------------------------------------------------------------


@dataclass
class WordReport:
    word: str
    length: int
    pri_count: int
    pal_count: int
    closed_count: int
    is_rich: bool
    pri_equals_pal: bool
    is_c_poor: bool
    law_ok: bool


def analyze_word(w: str) -> WordReport:
    pri = privileged_factors(w)
    pal = palindromic_factors(w)
    closed = complete_return_factors(w)
    return WordReport(
        word=w,
        length=len(w),
        pri_count=len(pri),
        pal_count=len(pal),
        closed_count=closed.count,
        is_rich=len(pal) == len(w) + 1,
        pri_equals_pal=pri == pal,
        is_c_poor=closed.is_c_poor,
        law_ok=len(pri) == len(w) + 1,
    )


def verify_word(w: str) -> list[str]:
    """Return descriptions of every law the word breaks (normally none)."""
    rep = analyze_word(w)
    problems = []
    if not rep.law_ok:
        problems.append(f"{rep.pri_count} privileged factors, expected {len(w) + 1}")
    if rep.is_rich != rep.pri_equals_pal or rep.is_rich != rich_via_returns(w)[0]:
        problems.append("richness tests disagree")
    if rep.closed_count < len(w) + 1:
        problems.append("fewer than |w|+1 closed factors")
    if rep.is_c_poor != c_poor_via_xy(w)[0]:
        problems.append("C-poor tests disagree")
    if len(set(w)) <= 2 and rep.is_c_poor != binary_c_poor_via_conjugate(w):
        problems.append("binary C-poor test disagrees")
    return problems


def cmd_analyze(words: list[str], workers: int = 1) -> list[WordReport]:
    if workers > 1 and len(words) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(analyze_word, words, chunksize=64))
    return [analyze_word(w) for w in words]


def cmd_profile(source: str, n_max: int, prop: str = "privileged", cushion: int = DEFAULT_CUSHION,
                cap: int = DEFAULT_CAP) -> ComplexityProfile:
    q = None if prop == "factor" else get_property(prop)
    src = parse_source(source)
    return profile_source(src, n_max, q, cushion=cushion, cap=cap)


def cmd_tm_table(n_max: int, cushion: int = DEFAULT_CUSHION) -> dict[int, int]:
    """Privileged complexity of Thue-Morse at even lengths 2..n_max."""
    if n_max < 2 or n_max % 2:
        raise UsageError("tm-table needs an even --nmax of at least 2")
    prof = cmd_profile("tm", n_max, "privileged", cushion)
    if prof.valid_to < n_max:
        log.warning("rows beyond n=%d are not exact", prof.valid_to)
    return {n: prof[n] for n in range(2, n_max + 1, 2)}


def zero_runs(profile: ComplexityProfile, n_from: int, n_to: int) -> list[tuple[int, int]]:
    """Maximal runs ``(a, b)`` inside ``[n_from, n_to]`` with zero counts."""
    runs = []
    start = None
    for n in range(n_from, n_to + 1):
        if profile[n] == 0:
            if start is None:
                start = n
        elif start is not None:
            runs.append((start, n - 1))
            start = None
    if start is not None:
        runs.append((start, n_to))
    return runs


def cmd_scan_gaps(source: str, n_from: int, n_to: int, prop: str = "privileged",
                  cushion: int = DEFAULT_CUSHION) -> list[tuple[int, int]]:
    if not 0 <= n_from <= n_to:
        raise UsageError("need 0 <= --from <= --to")
    prof = cmd_profile(source, n_to, prop, cushion)
    return zero_runs(prof, n_from, n_to)


# -- serialisation ----------------------------------------------------------------


def profile_to_csv(p: ComplexityProfile) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "count", "exact"])
    for n, (c, e) in enumerate(zip(p.counts, p.exact)):
        writer.writerow([n, c, int(e)])
    return buf.getvalue()


def profile_from_csv(text: str, kind: str = "generic-Q", name: str = "") -> ComplexityProfile:
    rows = list(csv.DictReader(io.StringIO(text)))
    if [int(r["n"]) for r in rows] != list(range(len(rows))):
        raise ValueError("rows must list n = 0, 1, 2, ... in order")
    counts = tuple(int(r["count"]) for r in rows)
    exact = tuple(r["exact"].strip().lower() in ("1", "true") for r in rows)
    valid_to = exact.index(False) - 1 if False in exact else len(rows) - 1
    return ComplexityProfile(counts, kind, valid_to=valid_to, exact=exact, name=name)


def profile_to_json(p: ComplexityProfile) -> str:
    return json.dumps({
        "name": p.name,
        "kind": p.kind,
        "valid_to": p.valid_to,
        "counts": list(p.counts),
        "exact": list(p.exact),
    })


def profile_from_json(text: str) -> ComplexityProfile:
    d = json.loads(text)
    return ComplexityProfile(
        tuple(d["counts"]), d["kind"], valid_to=d["valid_to"], exact=tuple(d["exact"]), name=d["name"],
    )


def format_profile(p: ComplexityProfile, fmt: str) -> str:
    if fmt == "csv":
        return profile_to_csv(p)
    if fmt == "json":
        return profile_to_json(p) + "\n"
    lines = [f"# {p.name} {p.kind} complexity, exact up to n={p.valid_to}", f"{'n':>5} {'count':>6}  exact"]
    lines += [f"{n:>5} {c:>6}  {'yes' if e else 'no'}" for n, (c, e) in enumerate(zip(p.counts, p.exact))]
    return "\n".join(lines) + "\n"


def format_reports(reports: list[WordReport], fmt: str, eps: str = EPS) -> str:
    rows = [asdict(r) for r in reports]
    for r in rows:
        r["word"] = render(r["word"], eps)
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    fields = list(rows[0]) if rows else [f for f in WordReport.__dataclass_fields__]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {f: max([len(f)] + [len(str(r[f])) for r in rows]) for f in fields}
    lines = ["  ".join(f.ljust(widths[f]) for f in fields)]
    lines += ["  ".join(str(r[f]).ljust(widths[f]) for f in fields) for r in rows]
    return "\n".join(lines) + "\n"


def format_table(mapping: dict, header: tuple[str, str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({str(k): v for k, v in mapping.items()}) + "\n"
    if fmt == "csv":
        return "\n".join([",".join(header)] + [f"{k},{v}" for k, v in mapping.items()]) + "\n"
    return "\n".join([f"{header[0]:>5} {header[1]:>6}"] + [f"{k:>5} {v:>6}" for k, v in mapping.items()]) + "\n"


def format_runs(runs: list[tuple[int, int]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([list(r) for r in runs]) + "\n"
    if fmt == "csv":
        return "\n".join(["start,end"] + [f"{a},{b}" for a, b in runs]) + "\n"
    return "".join(f"{a}..{b}\n" for a, b in runs) or "no zero runs\n"


# -- argument handling -------------------------------------------------------------


def _read_words(args) -> list[str]:
    words = []
    if args.word is not None:
        words.append(parse_word(args.word))
    if args.file:
        with open(args.file) as fh:
            words.extend(parse_word(line) for line in fh if line.strip())
    if not words:
        raise UsageError("give --word or --file")
    if any(not w for w in words) and not args.allow_empty:
        raise UsageError("empty word in input; pass --allow-empty to accept it")
    for w in words:
        if any(c.isspace() for c in w):
            raise UsageError(f"cannot parse {w!r} as a word")
    return words


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="table", choices=FORMATS)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--cushion", type=int, default=DEFAULT_CUSHION,
                        help="prefix length must be at least cushion * n (default %(default)s)")
    common.add_argument("--workers", type=int, default=1)

    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("--word")
    words.add_argument("--file", help="one word per line; EPS denotes the empty word")
    words.add_argument("--allow-empty", action="store_true")

    parser = argparse.ArgumentParser(prog="privwords", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("analyze", parents=[common, words], help="factor counts and richness of words")
    sub.add_parser("verify", parents=[common, words], help="check the counting laws on words")

    p = sub.add_parser("profile", parents=[common], help="complexity profile of a word or source")
    p.add_argument("--source")
    p.add_argument("--word")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--property", default="privileged",
                   choices=["privileged", "palindrome", "letter-power", "factor"])

    p = sub.add_parser("tm-table", parents=[common], help="privileged complexity of Thue-Morse, even n")
    p.add_argument("--nmax", type=int, default=70)

    p = sub.add_parser("scan-gaps", parents=[common], help="maximal runs of zero counts")
    p.add_argument("--source", default="tm")
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--property", default="privileged",
                   choices=["privileged", "palindrome", "letter-power"])
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and 2
    try:
        status = 0
        if args.command in ("analyze", "verify"):
            words = _read_words(args)
            if args.command == "analyze":
                text = format_reports(cmd_analyze(words, args.workers), args.format)
            else:
                failures = {w: verify_word(w) for w in words}
                failures = {w: p for w, p in failures.items() if p}
                text = "".join(f"{render(w)}: {'; '.join(p)}\n" for w, p in failures.items())
                text += f"{len(words) - len(failures)}/{len(words)} words pass\n"
                status = 1 if failures else 0
        elif args.command == "profile":
            if (args.source is None) == (args.word is None):
                raise UsageError("profile needs exactly one of --source or --word")
            RunConfig(source=args.source, word=args.word, n_max=args.nmax, cushion=args.cushion,
                      fmt=args.format, out=args.out, workers=args.workers)
            if args.source is not None:
                prof = cmd_profile(args.source, args.nmax, args.property, args.cushion)
            else:
                w = parse_word(args.word)
                if args.nmax > len(w):
                    raise UsageError(f"--nmax exceeds word length {len(w)}")
                q = None if args.property == "factor" else get_property(args.property)
                prof = profile_source(w, args.nmax, q)
            text = format_profile(prof, args.format)
        elif args.command == "tm-table":
            RunConfig(n_max=args.nmax, cushion=args.cushion, fmt=args.format)
            text = format_table(cmd_tm_table(args.nmax, args.cushion), ("n", "count"), args.format)
        else:
            runs = cmd_scan_gaps(args.source, args.n_from, args.n_to, args.property, args.cushion)
            text = format_runs(runs, args.format)
    except (UsageError, ValueError, OSError) as e:
        print(f"privwords: error: {e}", file=sys.stderr)
        return 2

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

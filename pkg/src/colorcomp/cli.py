"""Command-line interface.

Exit status: 0 success, 2 usage error, 3 enumeration cap exceeded,
4 malformed or unreadable input file.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .bellpoly import bell_complete, bell_partial
from .compositions import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    blacktie_count,
    blacktie_count_t5,
    blacktie_count_t6,
    count_multinomial,
    counts_upto,
    enumerate_blacktie,
    enumerate_compositions,
    parts_total,
)
from .seqcore import Coloration, IntSequence, convolve, sigma
from .transforms import (
    InsufficientTermsError,
    RepresentationError,
    coloration_of,
    count_from_coloration,
    invert_interpolated,
)

EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INPUT = 4


class UsageError(Exception):
    pass


class InputFileError(Exception):
    pass


def catalan_numbers(n: int) -> List[int]:
    c = [1]
    for m in range(1, n):
        c.append(c[-1] * 2 * (2 * m - 1) // (m + 1))
    return c[:n]


def preset_coloration(name: str, n: int) -> Coloration:
    """Named colorations, materialized for part sizes up to ``n``."""
    if name == "ones":
        return Coloration.constant(1)
    if name == "catalan":
        return Coloration.finite(catalan_numbers(n))
    if name == "natural":
        return Coloration.finite(range(1, n + 1))
    raise UsageError(f"unknown preset {name!r}")


def parse_int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"not an integer: {tok!r}") from None
    return out


def coloration_from_args(args, n: int) -> Coloration:
    if args.preset:
        if args.prefix is not None or args.tail is not None:
            raise UsageError("--preset cannot be combined with --prefix/--tail")
        return preset_coloration(args.preset, max(n, 1))
    prefix = parse_int_list(args.prefix or "")
    tail = parse_int_list(args.tail if args.tail is not None else "0")
    if not tail:
        raise UsageError("--tail must contain at least one value")
    try:
        return Coloration(tuple(prefix), tuple(tail))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_bfile(lines: Sequence[str]) -> Tuple[List[int], int]:
    pairs = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise InputFileError(f"line {lineno}: expected 'index value', got {raw.strip()!r}")
        try:
            pairs.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise InputFileError(f"line {lineno}: non-integer token in {raw.strip()!r}") from None
    if not pairs:
        raise InputFileError("b-file holds no terms")
    start = pairs[0][0]
    for i, (idx, _) in enumerate(pairs):
        if idx != start + i:
            raise InputFileError(f"b-file indices not consecutive at index {idx}")
    return [v for _, v in pairs], start


def parse_sequence_text(text: str) -> Tuple[List[int], Optional[int]]:
    """Parse a JSON document, an OEIS b-file or a plain integer list.

    Returns the terms and the b-file starting index (``None`` otherwise).
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            terms = [int(t) for t in doc["terms"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise InputFileError(f"bad JSON sequence: {exc}") from None
        return terms, None
    lines = [ln for ln in stripped.splitlines() if ln.split("#", 1)[0].strip()]
    if lines and all(len(ln.split("#", 1)[0].split()) == 2 for ln in lines) and "," not in stripped:
        return _parse_bfile(stripped.splitlines())
    try:
        return parse_int_list(stripped), None
    except UsageError as exc:
        raise InputFileError(str(exc)) from None


def read_sequence_source(source: str) -> Tuple[List[int], Optional[int]]:
    """``-`` reads stdin; ``@path`` or an existing path reads a file;
    anything else is an inline comma list."""
    if source == "-":
        return parse_sequence_text(sys.stdin.read())
    if source.startswith("@") or os.path.isfile(source):
        path = source[1:] if source.startswith("@") else source
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputFileError(f"cannot read {path}: {exc.strerror}") from None
        return parse_sequence_text(text)
    return parse_int_list(source), None


def emit_sequence(terms: Sequence[int], as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps({"terms": [str(t) for t in terms]}) + "\n")
    else:
        for t in terms:
            out.write(f"{t}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def cmd_count(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    X = coloration_from_args(args, args.n)
    if args.method == "recurrence":
        terms = counts_upto(X, args.n).terms[1:]
    elif args.method == "multinomial":
        terms = tuple(count_multinomial(X, m) for m in range(1, args.n + 1))
    else:
        terms = count_from_coloration(X, args.n).terms
    emit_sequence(terms, args.json, out)
    return 0


def cmd_enumerate(args, out) -> int:
    X = coloration_from_args(args, args.n)
    if args.blacktie:
        if args.n < 1:
            raise UsageError("black-tie enumeration needs --n >= 1")
        items = enumerate_blacktie(X, args.n, cap=args.cap)
    else:
        items = enumerate_compositions(X, args.n, cap=args.cap)
    for c in items:
        out.write(c.render() + "\n")
    out.write(f"total={len(items)}\n")
    return 0


def cmd_transform(args, out) -> int:
    terms, offset = read_sequence_source(args.source)
    if offset is not None:
        sys.stderr.write(f"b-file offset: {offset}\n")
    seq = IntSequence(terms)
    verdict = None
    if args.op in ("invert", "inverse"):
        if args.op == "inverse" and args.x is not None:
            raise UsageError("--x applies to --op invert only")
        x = Fraction(-1) if args.op == "inverse" else (args.x if args.x is not None else Fraction(1))
        result = invert_interpolated(seq, x, args.n)
        if args.op == "inverse" and len(result):
            verdict = coloration_of(seq[: len(result)])
    elif args.op == "conv":
        result = convolve(seq, seq)
    else:
        result = sigma(seq)
    if args.n is not None and args.op in ("conv", "sigma"):
        if args.n > len(result):
            raise UsageError(f"only {len(result)} output terms available")
        result = result[: args.n]
    if args.json:
        doc = {"terms": [str(t) for t in result]}
        if verdict is not None:
            doc["coloration"] = verdict.is_coloration
            if not verdict.is_coloration:
                doc["witness_index"] = verdict.witness_index
        out.write(json.dumps(doc) + "\n")
        return 0
    emit_sequence(result.terms, False, out)
    if verdict is not None:
        if verdict.is_coloration:
            out.write("coloration: yes\n")
        else:
            out.write(f"coloration: no (first negative at index {verdict.witness_index})\n")
    return 0


def cmd_parts(args, out) -> int:
    X = coloration_from_args(args, args.n)
    emit_sequence([parts_total(X, m) for m in range(args.n + 1)], args.json, out)
    return 0


def cmd_blacktie(args, out) -> int:
    X = coloration_from_args(args, args.n)
    fn = {"conv": blacktie_count, "t5": blacktie_count_t5, "t6": blacktie_count_t6}[args.method]
    terms = [0] + [fn(X, m) for m in range(1, args.n + 1)]
    emit_sequence(terms, args.json, out)
    return 0


def cmd_bell(args, out) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if args.k is not None and not 1 <= args.k <= args.n:
        raise UsageError(f"k must satisfy 1 <= k <= {args.n}, got {args.k}")
    poly = bell_complete(args.n) if args.k is None else bell_partial(args.n, args.k)
    if args.eval is not None:
        point = parse_int_list(args.eval)
        if len(point) != args.n:
            raise UsageError(f"--eval needs {args.n} values, got {len(point)}")
        out.write(f"{poly.evaluate(point)}\n")
    else:
        out.write(poly.render("t") + "\n")
    return 0


def _add_coloration(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prefix", help="comma list x_1,x_2,... (may be empty)")
    p.add_argument("--tail", help="comma list repeated after the prefix (default 0)")
    p.add_argument("--preset", choices=("catalan", "natural", "ones"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorcomp", description="Colored compositions and Invert transforms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of colored compositions A_1..A_n")
    _add_coloration(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=("recurrence", "multinomial", "invert"), default="recurrence")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list colored (or black-tie) compositions of n")
    _add_coloration(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--blacktie", action="store_true")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", help="apply a sequence transform")
    p.add_argument("source", help="inline list '1,2,3', '@file' (JSON or b-file), or '-' for stdin")
    p.add_argument("--op", choices=("invert", "inverse", "conv", "sigma"), required=True)
    p.add_argument("--x", type=Fraction, help="Invert parameter (rational), default 1")
    p.add_argument("--n", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("parts", help="total number of parts P_0..P_n")
    _add_coloration(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parts)

    p = sub.add_parser("blacktie", help="black-tie counts B_0..B_n")
    _add_coloration(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=("conv", "t5", "t6"), default="conv")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_blacktie)

    p = sub.add_parser("bell", help="ordinary Bell polynomial B_n or B_{n,k}")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--eval", help="comma list point t_1..t_n")
    p.set_defaults(func=cmd_bell)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, InsufficientTermsError, RepresentationError) as exc:
        sys.stderr.write(f"colorcomp: error: {exc}\n")
        return EXIT_USAGE
    except EnumerationCapExceeded as exc:
        sys.stderr.write(f"colorcomp: {exc} (raise --cap)\n")
        return EXIT_CAP
    except InputFileError as exc:
        sys.stderr.write(f"colorcomp: input error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

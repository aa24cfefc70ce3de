"""Command line front end.

    cyceq check U V
    cyceq equalize U V [--json PATH] [--tables]
    cyceq verify DOCUMENT
    cyceq oracle U V [--max-insert K] [--alphabet LIST]

Exit status: 0 for a positive answer, 1 for a negative one (or an invalid
certificate), 2 for usage errors, unreadable documents and infeasible
searches.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

import regex

from . import document
from .equalizer import EqualizationError, LengthMismatchError, ParikhMismatchError, equalize
from .insertion import verify_certificate
from .oracle import DEFAULT_NODE_LIMIT, SearchBudget, brute_force_equalize
from .tables import render_tables
from .words import Word, parikh

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2

_SEPARATOR = regex.compile(r"\s*,\s*|\s+")
_FORBIDDEN = regex.compile(r"[\s,]")


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


def parse_word(text: str, mode: str = "auto") -> Word:
    """Parse ``text`` as a word.

    ``chars``: every extended grapheme cluster is a letter.  ``tokens``:
    letters are separated by whitespace or commas.  ``auto`` picks tokens
    when the text contains a separator and chars otherwise.
    """
    if mode == "auto":
        mode = "tokens" if _FORBIDDEN.search(text) else "chars"
    if mode == "chars":
        letters = regex.findall(r"\X", text)
        for i, g in enumerate(letters):
            if _FORBIDDEN.search(g):
                raise WordSyntaxError(f"character {i} ({g!r}) cannot be a letter", i)
        return Word(letters)
    if mode != "tokens":
        raise ValueError(f"unknown word syntax {mode!r}")
    stripped = text.strip()
    if not stripped:
        return Word()
    tokens = _SEPARATOR.split(stripped)
    for i, t in enumerate(tokens):
        if not t:
            raise WordSyntaxError(f"token {i} is empty", i)
    return Word(tokens)


def format_word(w: Word, mode: str = "auto") -> str:
    if mode == "chars" or (mode == "auto" and all(len(a) == 1 for a in w)):
        return "".join(w)
    return " ".join(w)


def _parser() -> argparse.ArgumentParser:
    syntax = argparse.ArgumentParser(add_help=False)
    group = syntax.add_mutually_exclusive_group()
    group.add_argument("--chars", dest="mode", action="store_const", const="chars",
                       help="every character is a letter")
    group.add_argument("--tokens", dest="mode", action="store_const", const="tokens",
                       help="letters are separated by whitespace or commas")
    syntax.set_defaults(mode="auto")

    pair = argparse.ArgumentParser(add_help=False, parents=[syntax])
    pair.add_argument("u")
    pair.add_argument("v")

    parser = argparse.ArgumentParser(
        prog="cyceq", description="Cyclic equalizability of two words."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[pair], help="decide equalizability")

    eq = sub.add_parser("equalize", parents=[pair], help="construct a certificate")
    eq.add_argument("--json", metavar="PATH", help="write the certificate document ('-' for stdout)")
    eq.add_argument("--tables", action="store_true", help="print block and group tables")
    eq.add_argument("--marker", default="*", help="marker for distinguished positions")

    ver = sub.add_parser("verify", help="check a certificate document")
    ver.add_argument("document", type=Path)

    orc = sub.add_parser("oracle", parents=[pair], help="minimal insertion by exhaustive search")
    orc.add_argument("--max-insert", type=int, default=2, metavar="K")
    orc.add_argument("--alphabet", metavar="LIST",
                     help="letters allowed for insertion (default: letters of U and V)")
    orc.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT, metavar="N")
    orc.add_argument("--workers", type=int, default=1)
    return parser


def _words(args, err) -> tuple[Word, Word] | None:
    try:
        return parse_word(args.u, args.mode), parse_word(args.v, args.mode)
    except WordSyntaxError as exc:
        print(f"error: cannot parse word: {exc}", file=err)
        return None


def cmd_check(args, out, err) -> int:
    words = _words(args, err)
    if words is None:
        return EXIT_USAGE
    u, v = words
    print(f"Parikh(u) = {parikh(u)}  (length {len(u)})", file=out)
    print(f"Parikh(v) = {parikh(v)}  (length {len(v)})", file=out)
    if len(u) == len(v) and parikh(u) == parikh(v):
        print("YES", file=out)
        return EXIT_YES
    print("NO", file=out)
    return EXIT_NO


def cmd_equalize(args, out, err) -> int:
    words = _words(args, err)
    if words is None:
        return EXIT_USAGE
    u, v = words
    try:
        cert = equalize(u, v)
    except (LengthMismatchError, ParikhMismatchError) as exc:
        print("NO", file=out)
        print(str(exc), file=err)
        return EXIT_NO
    info = cert.construction
    if args.json == "-":
        out.write(document.dumps(cert))
    else:
        print("YES", file=out)
        print(f"u' = {format_word(cert.u_expanded, args.mode)}", file=out)
        print(f"v' = {format_word(cert.v_expanded, args.mode)}", file=out)
        print(
            f"offset {cert.offset.value}, expanded_length {cert.expanded_length}, "
            f"cycles {info.m}: {info.permutation}",
            file=out,
        )
        if args.json:
            Path(args.json).write_text(document.dumps(cert), encoding="utf-8")
    if args.tables:
        print(render_tables(cert, args.marker), file=out)
    return EXIT_YES


def cmd_verify(args, out, err) -> int:
    try:
        text = args.document.read_text(encoding="utf-8")
        cert = document.loads(text)
    except (OSError, UnicodeDecodeError, document.MalformedDocumentError) as exc:
        print(f"error: malformed document: {exc}", file=err)
        return EXIT_USAGE
    verdict = verify_certificate(cert)
    if verdict:
        print("valid", file=out)
        return EXIT_YES
    print(f"invalid: clause {verdict.clause}: {verdict.reason}", file=out)
    return EXIT_NO


def cmd_oracle(args, out, err) -> int:
    words = _words(args, err)
    if words is None:
        return EXIT_USAGE
    u, v = words
    if len(u) != len(v):
        print(f"error: words must have equal length, got {len(u)} and {len(v)}", file=err)
        return EXIT_USAGE
    try:
        alphabet = None
        if args.alphabet is not None:
            alphabet = tuple(parse_word(args.alphabet, args.mode))
        budget = SearchBudget(args.max_insert, alphabet, args.node_limit)
        result = brute_force_equalize(u, v, budget, workers=args.workers)
    except ValueError as exc:  # includes InfeasibleSearchError
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    alpha = ",".join(result.budget.alphabet or ())
    if not result.found:
        print(f"not found (max-insert {budget.max_inserted}, alphabet {{{alpha}}})", file=out)
        return EXIT_NO
    cert = result.certificate
    print(f"found: {result.inserted_count} inserted letter(s)", file=out)
    print(f"u' = {format_word(cert.u_expanded, args.mode)}", file=out)
    print(f"v' = {format_word(cert.v_expanded, args.mode)}", file=out)
    print(f"distinguished {list(cert.distinguished)}, offset {cert.offset.value}", file=out)
    return EXIT_YES


_COMMANDS = {
    "check": cmd_check,
    "equalize": cmd_equalize,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except EqualizationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

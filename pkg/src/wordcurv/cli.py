"""Command-line interface.

Words are passed as plain text with an ``--alphabet`` string whose first
character is the highest; outputs are exact rationals, never floats.
Exit codes: 0 success, 1 invalid word or bundle data, 2 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bundles import ElementaryBundle, bundle_from_word, glue, word_from_bundle, word_from_s_bundle
from .chern import TriangulatedSBundle, chern_number, validate_cycle
from .curvature import curv, ind
from .errors import WordCurvError
from .explore import find_zero_nonpalindromes, survey
from .words import Word, cyclic_shift, delta

_DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except WordCurvError as exc:
        _fail(args, type(exc).__name__, str(exc))
        return 1
    except ValueError as exc:
        _fail(args, "ValueError", str(exc))
        return 1
    except OSError as exc:
        _fail(args, "IOError", str(exc))
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordcurv",
        description="Exact curvature of cyclic words and Chern numbers of "
        "triangulated circle bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, word_arg=False, file_arg=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--alphabet", help="alphabet string, highest character first "
                       "(default: sorted characters of the word)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--output", help="write the result to this path instead of stdout")
        if word_arg:
            p.add_argument("word", nargs="?", help="the word ('-' or omitted: read stdin)")
        if file_arg:
            p.add_argument("file", nargs="?", help="input JSON file ('-' or omitted: stdin)")
        p.set_defaults(handler=handler)
        return p

    add("ind", _cmd_ind, "index of a 2-character word", word_arg=True)
    add("curv", _cmd_curv, "curvature of a 3-character word", word_arg=True)
    p = add("delta", _cmd_delta, "delete all occurrences of one character", word_arg=True)
    p.add_argument("rank", type=int, help="rank of the character to delete (0 = highest)")
    add("word-to-bundle", _cmd_word_to_bundle,
        "interval bundle of a word as cell data", word_arg=True)
    add("bundle-to-word", _cmd_bundle_to_word,
        "read the word of interval or circle bundle cell data", file_arg=True)
    add("glue", _cmd_glue, "glue an interval bundle into a circle bundle", file_arg=True)
    add("shift", _cmd_shift, "cyclic shift of a word", word_arg=True)
    add("chern", _cmd_chern, "Chern number of a triangulated circle bundle", file_arg=True)
    p = add("survey", _cmd_survey, "tabulate curvature over all cyclic words")
    p.add_argument("--min-length", type=int, default=3)
    p.add_argument("--max-length", type=int, required=True)
    p = add("palindrome-scan", _cmd_palindrome_scan,
            "zero-curvature classes that are not cyclic palindromes")
    p.add_argument("--max-length", type=int, required=True)
    return parser


# ---------------------------------------------------------------------------
# word plumbing

def _read_word(args) -> tuple[Word, str]:
    text = getattr(args, "word", None)
    if text in (None, "-"):
        text = sys.stdin.read().strip()
    if not text:
        raise ValueError("no word given")
    alphabet = args.alphabet
    if alphabet is None:
        alphabet = "".join(sorted(set(text)))
    return Word.from_symbols(text, alphabet), alphabet


def _read_json_file(args) -> dict:
    path = getattr(args, "file", None)
    if path in (None, "-"):
        return json.loads(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)


def _emit(args, plain: str, payload: dict | None = None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) if (args.json and payload is not None) else plain
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fail(args, category: str, message: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": category, "message": message}), file=sys.stderr)
    else:
        print(f"error: {category}: {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_ind(args) -> int:
    word, _ = _read_word(args)
    value = ind(word)
    _emit(args, str(value), {"ind": str(value)})
    return 0


def _cmd_curv(args) -> int:
    word, _ = _read_word(args)
    value = curv(word)
    _emit(args, str(value), {"curv": str(value)})
    return 0


def _cmd_delta(args) -> int:
    word, alphabet = _read_word(args)
    result = delta(word, args.rank)
    reduced = alphabet[: args.rank] + alphabet[args.rank + 1 :]
    _emit(args, result.to_symbols(reduced), result.to_json(reduced))
    return 0


def _cmd_shift(args) -> int:
    word, alphabet = _read_word(args)
    result = cyclic_shift(word)
    _emit(args, result.to_symbols(alphabet), result.to_json(alphabet))
    return 0


def _cmd_word_to_bundle(args) -> int:
    word, _ = _read_word(args)
    bundle = bundle_from_word(word)
    payload = bundle.to_json()
    _emit(args, json.dumps(payload, indent=2, sort_keys=True), payload)
    return 0


def _cmd_bundle_to_word(args) -> int:
    bundle = ElementaryBundle.from_json(_read_json_file(args))
    alphabet = args.alphabet or _DEFAULT_SYMBOLS[: bundle.base_dim + 1]
    if bundle.fiber_kind == "interval":
        word = word_from_bundle(bundle)
        _emit(args, word.to_symbols(alphabet), word.to_json(alphabet))
    else:
        cw = word_from_s_bundle(bundle)
        _emit(args, cw.rep.to_symbols(alphabet), cw.rep.to_json(alphabet))
    return 0


def _cmd_glue(args) -> int:
    bundle = ElementaryBundle.from_json(_read_json_file(args))
    glued = glue(bundle)
    payload = glued.to_json()
    _emit(args, json.dumps(payload, indent=2, sort_keys=True), payload)
    return 0


def _cmd_chern(args) -> int:
    tb = TriangulatedSBundle.from_json(_read_json_file(args))
    number = chern_number(tb)
    _emit(args, str(number), {"chern": str(number)})
    return 0


def _cmd_survey(args) -> int:
    report = survey(args.min_length, args.max_length)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(report.to_json() + "\n")
        print(report.format_table(20))
    elif args.json:
        print(report.to_json())
    else:
        print(report.format_table())
    return 0


def _cmd_palindrome_scan(args) -> int:
    found = find_zero_nonpalindromes(args.max_length)
    words = [str(w) for w in found]
    if args.json:
        payload = {"max_length": args.max_length, "zero_nonpalindromes": words}
        _emit(args, json.dumps(payload, indent=2, sort_keys=True), payload)
    else:
        print(f"zero-curvature non-palindromes up to length {args.max_length}: {len(words)}")
        for w in words:
            print(w)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``python -m gramsteg <command> ...``.

Exit codes: 0 success, 1 some sentence rejected by ``recognize``, 2 usage
or configuration error, 3 unknown word/sentence, 4 malformed frame,
5 other data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import data_path
from .codec import (
    SentenceTable,
    base64_decode,
    base64_encode,
    grammatical_decode,
    grammatical_encode,
    sentence_substitution_decode,
    sentence_substitution_encode,
    word_substitution_decode,
    word_substitution_encode,
)
from .entstat import analyze
from .errors import (
    FormatError,
    GrammarLexiconMismatch,
    InvalidModel,
    MalformedFrame,
    ModelAlphabetMismatch,
    StegError,
    UnknownSentence,
    UnknownWord,
)
from .grammar import GrammarSchedule
from .hmm import HmmModel, forward_probability, viterbi
from .lexicon import Lexicon, redundancy_percentage
from .recognizer import DEFAULT_THRESHOLD, score_text

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_CONFIG = 2
EXIT_UNKNOWN_WORD = 3
EXIT_MALFORMED_FRAME = 4
EXIT_DATA = 5

ENV_LEXICON = "GRAMSTEG_LEXICON"
ENV_GRAMMAR = "GRAMSTEG_GRAMMAR"
ENV_MODEL = "GRAMSTEG_MODEL"


class ConfigError(Exception):
    pass


def _default(env: str, sample: str) -> str:
    return os.environ.get(env) or str(data_path(sample))


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None


def _read_text(path: str) -> str:
    return _read_bytes(path).decode("utf-8")


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _write_text(path: str, text: str) -> None:
    _write_bytes(path, text.encode("utf-8"))


def _load(loader, path: str):
    if not Path(path).is_file():
        raise ConfigError(f"no such file: {path}")
    return loader(path)


def _lexicon(args) -> Lexicon:
    return _load(Lexicon.load, args.lexicon or _default(ENV_LEXICON, "sample_lexicon.txt"))


def _grammar(args) -> GrammarSchedule:
    return _load(GrammarSchedule.load, args.grammar or _default(ENV_GRAMMAR, "sample_grammar.txt"))


def _model(args) -> HmmModel:
    return _load(HmmModel.load, args.model or _default(ENV_MODEL, "sample_model.hmm"))


def cmd_encode(args) -> int:
    lexicon, grammar = _lexicon(args), _grammar(args)
    payload = _read_bytes(args.input)
    _write_text(args.output, grammatical_encode(payload, lexicon, grammar, raw=args.raw) + "\n")
    return EXIT_OK


def cmd_decode(args) -> int:
    lexicon, grammar = _lexicon(args), _grammar(args)
    text = _read_text(args.input)
    _write_bytes(args.output, grammatical_decode(text, lexicon, grammar, raw=args.raw))
    return EXIT_OK


def cmd_baseline(args) -> int:
    if args.kind == "base64":
        if args.table or args.lexicon:
            raise ConfigError("--kind base64 takes neither --table nor --lexicon")
        if args.direction == "encode":
            _write_text(args.output, base64_encode(_read_bytes(args.input)) + "\n")
        else:
            _write_bytes(args.output, base64_decode(_read_text(args.input)))
        return EXIT_OK
    if args.kind == "word":
        if args.table:
            raise ConfigError("--kind word takes --lexicon, not --table")
        lexicon = _lexicon(args)
        type_name = args.type or next(iter(lexicon))
        if type_name not in lexicon:
            raise ConfigError(f"lexicon has no [{type_name}] section")
        dictionary = lexicon[type_name]
        if args.direction == "encode":
            text = word_substitution_encode(_read_bytes(args.input), dictionary, raw=args.raw)
            _write_text(args.output, text + "\n")
        else:
            text = _read_text(args.input)
            _write_bytes(args.output, word_substitution_decode(text, dictionary, raw=args.raw))
        return EXIT_OK
    if not args.table:
        raise ConfigError("--kind sentence needs --table")
    table = _load(SentenceTable.load, args.table)
    if args.direction == "encode":
        text = sentence_substitution_encode(_read_bytes(args.input), table, raw=args.raw)
        _write_text(args.output, text + "\n")
    else:
        text = _read_text(args.input)
        _write_bytes(args.output, sentence_substitution_decode(text, table, raw=args.raw))
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = analyze(_read_bytes(args.input))
    _write_text(args.output, (report.to_json() if args.json else report.to_table()) + "\n")
    return EXIT_OK


def cmd_viterbi(args) -> int:
    model = _model(args)
    result = viterbi(model, args.observations)
    forward = forward_probability(model, args.observations)
    if args.json:
        out = json.dumps(
            {
                "forward_probability": forward,
                "path": list(result.path),
                "path_probability": result.probability,
            }
        )
    else:
        out = "\n".join(
            [
                f"forward probability: {forward:.6g}",
                f"viterbi path: {' '.join(result.path)}",
                f"path probability: {result.probability:.6g}",
            ]
        )
    _write_text(args.output, out + "\n")
    return EXIT_OK


def cmd_recognize(args) -> int:
    lexicon, model = _lexicon(args), _model(args)
    results = score_text(_read_text(args.input), lexicon, model, args.threshold)
    if args.json:
        out = json.dumps(
            [
                {
                    "sentence": " ".join(words),
                    "log10_probability_per_word": v.log10_probability_per_word,
                    "accepted": v.accepted,
                    "best_path": list(v.best_path),
                }
                for words, v in results
            ],
            ensure_ascii=False,
        )
    else:
        lines = [
            f"{'ACCEPT' if v.accepted else 'REJECT'} {v.log10_probability_per_word:8.4f}  {' '.join(words)}"
            for words, v in results
        ]
        accepted = sum(v.accepted for _, v in results)
        lines.append(f"{accepted}/{len(results)} sentences accepted (threshold {args.threshold})")
        out = "\n".join(lines)
    _write_text(args.output, out + "\n")
    return EXIT_OK if all(v.accepted for _, v in results) else EXIT_REJECTED


def capacity_report(
    lexicon: Lexicon,
    grammar: GrammarSchedule | None,
    avg_letters: float | None,
    bytes_per_letter: int,
) -> dict:
    """Bits per word/sentence and redundancy figures for a lexicon (and grammar)."""
    types = {}
    for name, d in lexicon.items():
        letters = avg_letters if avg_letters is not None else sum(map(len, d.words)) / d.m
        types[name] = {
            "m": d.m,
            "n": d.n,
            "avg_letters": letters,
            "redundancy_pct": redundancy_percentage(letters, bytes_per_letter, d.n),
        }
    report = {"bytes_per_letter": bytes_per_letter, "types": types}
    if grammar is not None:
        grammar.check_lexicon(lexicon)
        patterns = []
        for p in grammar.patterns:
            bits = sum(lexicon[t].n for t in p.types)
            patterns.append({"types": list(p.types), "bits_per_sentence": bits})
        cycle = [t for t, _ in grammar.cycle()]
        bits = sum(lexicon[t].n for t in cycle)
        letters = sum(types[t]["avg_letters"] for t in cycle) / len(cycle)
        report["patterns"] = patterns
        report["bits_per_word"] = bits / len(cycle)
        report["redundancy_pct"] = redundancy_percentage(letters, bytes_per_letter, bits / len(cycle))
    return report


def cmd_capacity(args) -> int:
    lexicon = _lexicon(args)
    grammar = None if args.no_grammar else _grammar(args)
    report = capacity_report(lexicon, grammar, args.avg_letters, args.bytes_per_letter)
    if args.json:
        out = json.dumps(report, ensure_ascii=False)
    else:
        lines = []
        for name, t in report["types"].items():
            lines.append(
                f"[{name}] m={t['m']} n={t['n']} avg_letters={t['avg_letters']:.2f} "
                f"r={t['redundancy_pct']:.2f}%"
            )
        for p in report.get("patterns", []):
            lines.append(f"pattern {' '.join(p['types'])}: {p['bits_per_sentence']} bits/sentence")
        if "bits_per_word" in report:
            lines.append(
                f"grammar: {report['bits_per_word']:.3f} bits/word, r={report['redundancy_pct']:.2f}%"
            )
        out = "\n".join(lines)
    _write_text(args.output, out + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gramsteg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, json_flag=False):
        p.add_argument("--in", dest="input", default="-", metavar="PATH", help="input file or - for stdin")
        p.add_argument("--out", dest="output", default="-", metavar="PATH", help="output file or - for stdout")
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")

    for name, func, help_ in (
        ("encode", cmd_encode, "hide a payload in grammatical text"),
        ("decode", cmd_decode, "recover a payload from grammatical text"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--lexicon", metavar="PATH")
        p.add_argument("--grammar", metavar="PATH")
        p.add_argument("--raw", action="store_true", help="no length header")
        io(p)
        p.set_defaults(func=func)

    p = sub.add_parser("baseline", help="word/sentence substitution and Base64")
    p.add_argument("direction", choices=["encode", "decode"])
    p.add_argument("--kind", choices=["base64", "word", "sentence"], required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--lexicon", metavar="PATH")
    src.add_argument("--table", metavar="PATH")
    p.add_argument("--type", help="lexicon section for --kind word (default: first)")
    p.add_argument("--raw", action="store_true")
    io(p)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("analyze", help="ENT-style randomness report")
    io(p, json_flag=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("viterbi", help="forward probability and Viterbi path")
    p.add_argument("--model", metavar="PATH")
    p.add_argument("observations", nargs="+")
    p.add_argument("--out", dest="output", default="-", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_viterbi)

    p = sub.add_parser("recognize", help="score each sentence of a text")
    p.add_argument("--model", metavar="PATH")
    p.add_argument("--lexicon", metavar="PATH")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD, help="log10 per word")
    io(p, json_flag=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("capacity", help="bits per word and redundancy")
    p.add_argument("--lexicon", metavar="PATH")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--grammar", metavar="PATH")
    g.add_argument("--no-grammar", action="store_true", help="report dictionaries only")
    p.add_argument("--avg-letters", type=float, help="average word length (default: measured)")
    p.add_argument("--bytes-per-letter", type=int, default=2)
    p.add_argument("--out", dest="output", default="-", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UnknownWord, UnknownSentence) as exc:
        code, msg = EXIT_UNKNOWN_WORD, str(exc)
    except MalformedFrame as exc:
        code, msg = EXIT_MALFORMED_FRAME, f"malformed frame: {exc}"
    except (ConfigError, FormatError, GrammarLexiconMismatch, InvalidModel, ModelAlphabetMismatch) as exc:
        code, msg = EXIT_CONFIG, str(exc)
    except (StegError, UnicodeDecodeError) as exc:
        code, msg = EXIT_DATA, str(exc)
    print(f"gramsteg {args.command}: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Payload <-> text codecs.

``grammatical_encode``/``grammatical_decode`` are the main pair: each word
type demanded by the grammar schedule takes the next ``n`` payload bits and
becomes the word with that number in the type's dictionary.  Word
substitution (one dictionary), sentence substitution (one line per group)
and Base64 are the baselines they are compared with.

By default payloads are framed with a 4-byte length header so the decoder
knows where the payload ends; ``raw=True`` skips the header and decodes to
whole bytes only.
"""

from __future__ import annotations

import base64
import binascii
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .bitio import frame_payload, join_groups, split_groups, unframe_payload
from .errors import DictionaryTooSmall, FormatError, InvalidArgument, UnknownSentence, UnknownWord
from .grammar import GrammarSchedule
from .lexicon import TERMINATOR, Lexicon, TypeDictionary, bits_for_count, normalize


def _slot_dicts(lexicon: Lexicon, grammar: GrammarSchedule) -> tuple[list[TypeDictionary], list[bool]]:
    grammar.check_lexicon(lexicon)
    cycle = grammar.cycle()
    return [lexicon[t] for t, _ in cycle], [last for _, last in cycle]


def _prepare(payload: bytes, raw: bool) -> bytes:
    return bytes(payload) if raw else frame_payload(payload)


def _finish(data: bytes, nbits: int, raw: bool) -> bytes:
    data = data[: nbits // 8]
    return data if raw else unframe_payload(data)


def _encode_tokens(data: bytes, slots: Sequence[TypeDictionary]) -> list[str]:
    values = split_groups(data, [d.n for d in slots])
    tokens = np.empty(values.size, dtype=object)
    period = len(slots)
    for k, d in enumerate(slots):
        usable = np.array(d.words[: 1 << d.n], dtype=object)
        tokens[k::period] = usable[values[k::period].astype(np.int64)]
    return tokens.tolist()


def _decode_tokens(tokens: Sequence[str], slots: Sequence[TypeDictionary]) -> tuple[bytes, int]:
    period = len(slots)
    values = np.empty(len(tokens), dtype=np.uint64)
    for i, tok in enumerate(tokens):
        d = slots[i % period]
        q = d.position(tok)
        if q is None:
            raise UnknownWord(tok, d.type_name, i)
        values[i] = q & ((1 << d.n) - 1)
    return join_groups(values, [d.n for d in slots])


def tokenize(text: str) -> list[str]:
    """Split stego text into words, discarding sentence terminators."""
    tokens = []
    for chunk in text.split():
        chunk = chunk.strip(TERMINATOR)
        if chunk:
            tokens.append(normalize(chunk))
    return tokens


def grammatical_encode(
    payload: bytes, lexicon: Lexicon, grammar: GrammarSchedule, raw: bool = False
) -> str:
    """Hide ``payload`` in text whose word types follow ``grammar``.

    Encoding always starts at the grammar's first slot.  Words are joined
    by single spaces and every pattern-final word carries a ``.``.
    """
    slots, boundary = _slot_dicts(lexicon, grammar)
    tokens = _encode_tokens(_prepare(payload, raw), slots)
    period = len(slots)
    ends = [i for i in range(period) if boundary[i]]
    for k in ends:
        for i in range(k, len(tokens), period):
            tokens[i] += TERMINATOR
    return " ".join(tokens)


def grammatical_decode(
    text: str, lexicon: Lexicon, grammar: GrammarSchedule, raw: bool = False
) -> bytes:
    """Recover the payload from text produced by :func:`grammatical_encode`.

    Terminators are ignored.  An unknown word raises :class:`UnknownWord`
    carrying the token, the expected type and the token index.
    """
    slots, _ = _slot_dicts(lexicon, grammar)
    data, nbits = _decode_tokens(tokenize(text), slots)
    return _finish(data, nbits, raw)


def word_substitution_encode(payload: bytes, dictionary: TypeDictionary, raw: bool = False) -> str:
    return " ".join(_encode_tokens(_prepare(payload, raw), [dictionary]))


def word_substitution_decode(text: str, dictionary: TypeDictionary, raw: bool = False) -> bytes:
    data, nbits = _decode_tokens(tokenize(text), [dictionary])
    return _finish(data, nbits, raw)


@dataclass(frozen=True)
class SentenceTable:
    """Ordered list of distinct sentences; line ``i`` of a table file is sentence ``i``."""

    sentences: tuple[str, ...]
    _positions: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sentences = tuple(normalize(s) for s in self.sentences)
        positions: dict[str, int] = {}
        for i, s in enumerate(sentences):
            if not s or "\n" in s or "\r" in s:
                raise InvalidArgument(f"sentence {i} is empty or spans lines")
            if s in positions:
                raise InvalidArgument(f"duplicate sentence {i}: {s!r}")
            positions[s] = i
        bits_for_count(len(sentences))
        object.__setattr__(self, "sentences", sentences)
        object.__setattr__(self, "_positions", positions)

    @property
    def m(self) -> int:
        return len(self.sentences)

    @property
    def n(self) -> int:
        return bits_for_count(len(self.sentences))

    @classmethod
    def loads(cls, text: str, path: str | None = None) -> "SentenceTable":
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        lines = [ln[:-1] if ln.endswith("\r") else ln for ln in lines]
        if lines:
            lines[0] = lines[0].lstrip("﻿")
        try:
            return cls(tuple(lines))
        except (InvalidArgument, DictionaryTooSmall) as exc:
            raise FormatError(str(exc), path) from None

    @classmethod
    def load(cls, path: str | PathLike) -> "SentenceTable":
        path = Path(path)
        return cls.loads(path.read_text(encoding="utf-8"), str(path))


def sentence_substitution_encode(payload: bytes, table: SentenceTable, raw: bool = False) -> str:
    """One sentence per ``n``-bit group, newline separated."""
    values = split_groups(_prepare(payload, raw), [table.n])
    return "\n".join(table.sentences[int(v)] for v in values)


def sentence_substitution_decode(text: str, table: SentenceTable, raw: bool = False) -> bytes:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    mask = (1 << table.n) - 1
    values = np.empty(len(lines), dtype=np.uint64)
    for i, line in enumerate(lines):
        q = table._positions.get(normalize(line.rstrip("\r")))
        if q is None:
            raise UnknownSentence(line, i)
        values[i] = q & mask
    data, nbits = join_groups(values, [table.n])
    return _finish(data, nbits, raw)


def base64_encode(payload: bytes) -> str:
    return base64.b64encode(bytes(payload)).decode("ascii")


def base64_decode(text: str) -> bytes:
    try:
        return base64.b64decode(text.strip(), validate=True)
    except (binascii.Error, ValueError) as exc:
        raise InvalidArgument(f"invalid base64: {exc}") from None

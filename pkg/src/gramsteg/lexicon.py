"""Typed word dictionaries and the bits-per-word arithmetic.

A dictionary of ``m`` words carries ``n = floor(log2 m)`` payload bits per
word.  Group value ``p`` selects word number ``p`` (the identity index
map); decoding takes a word's position masked to its low ``n`` bits, so
words past ``2**n`` may be loaded but are never produced by an encoder.

Dictionary file format (UTF-8)::

    # comment
    [verb]
    كتب
    درس

    [noun]
    ...
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    DictionaryTooSmall,
    FormatError,
    IndexOutOfRange,
    InvalidArgument,
    UnknownWord,
)

TERMINATOR = "."


def normalize(word: str) -> str:
    return unicodedata.normalize("NFC", word)


def bits_for_count(m: int) -> int:
    """``floor(log2 m)`` for ``m >= 2``."""
    if m < 2:
        raise DictionaryTooSmall(f"a dictionary needs at least 2 entries, got {m}")
    return m.bit_length() - 1


def _check_word(word: str) -> None:
    if not word:
        raise InvalidArgument("empty word")
    if any(ch.isspace() for ch in word):
        raise InvalidArgument(f"word contains whitespace: {word!r}")
    if TERMINATOR in word:
        raise InvalidArgument(f"word contains the sentence terminator: {word!r}")


@dataclass(frozen=True)
class TypeDictionary:
    """Ordered, duplicate-free word list for one word type."""

    type_name: str
    words: tuple[str, ...]
    _positions: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        words = tuple(normalize(w) for w in self.words)
        for w in words:
            _check_word(w)
        positions: dict[str, int] = {}
        for i, w in enumerate(words):
            if w in positions:
                raise InvalidArgument(f"duplicate word {w!r} in [{self.type_name}]")
            positions[w] = i
        bits_for_count(len(words))
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "_positions", positions)

    @property
    def m(self) -> int:
        return len(self.words)

    @property
    def n(self) -> int:
        return bits_for_count(len(self.words))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return normalize(word) in self._positions

    def position(self, word: str) -> int | None:
        return self._positions.get(normalize(word))

    def index_to_word(self, p: int) -> str:
        if not 0 <= p < (1 << self.n):
            raise IndexOutOfRange(f"group value {p} outside 0..{(1 << self.n) - 1} for [{self.type_name}]")
        return self.words[p]

    def word_to_index(self, word: str) -> int:
        q = self._positions.get(normalize(word))
        if q is None:
            raise UnknownWord(word, self.type_name)
        return q & ((1 << self.n) - 1)


def bits_for(dictionary: TypeDictionary) -> int:
    return bits_for_count(dictionary.m)


def index_to_word(dictionary: TypeDictionary, p: int) -> str:
    return dictionary.index_to_word(p)


def word_to_index(dictionary: TypeDictionary, word: str) -> int:
    return dictionary.word_to_index(word)


class Lexicon(Mapping[str, TypeDictionary]):
    """Type name to :class:`TypeDictionary`, in declaration order."""

    def __init__(self, dictionaries: Iterable[TypeDictionary] | Mapping[str, Iterable[str]]):
        if isinstance(dictionaries, Mapping):
            dictionaries = [TypeDictionary(k, tuple(v)) for k, v in dictionaries.items()]
        self._dicts: dict[str, TypeDictionary] = {}
        for d in dictionaries:
            if d.type_name in self._dicts:
                raise InvalidArgument(f"duplicate type {d.type_name!r}")
            self._dicts[d.type_name] = d
        if not self._dicts:
            raise InvalidArgument("a lexicon needs at least one dictionary")

    def __getitem__(self, type_name: str) -> TypeDictionary:
        return self._dicts[type_name]

    def __iter__(self):
        return iter(self._dicts)

    def __len__(self) -> int:
        return len(self._dicts)

    def __repr__(self) -> str:
        sizes = ", ".join(f"{k}={len(v)}" for k, v in self._dicts.items())
        return f"Lexicon({sizes})"

    @classmethod
    def loads(cls, text: str, path: str | None = None) -> "Lexicon":
        sections: dict[str, list[str]] = {}
        seen: dict[str, dict[str, int]] = {}
        current: str | None = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if lineno == 1:
                line = line.lstrip("﻿")
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1].strip()
                if not current:
                    raise FormatError("empty section name", path, lineno)
                if current in sections:
                    raise FormatError(f"duplicate section [{current}]", path, lineno)
                sections[current] = []
                seen[current] = {}
                continue
            if current is None:
                raise FormatError("word outside of a [type] section", path, lineno)
            word = normalize(line)
            try:
                _check_word(word)
            except InvalidArgument as exc:
                raise FormatError(str(exc), path, lineno) from None
            if word in seen[current]:
                raise FormatError(
                    f"duplicate word {word!r} in [{current}] (first on line {seen[current][word]})",
                    path,
                    lineno,
                )
            seen[current][word] = lineno
            sections[current].append(word)
        if not sections:
            raise FormatError("no [type] sections found", path)
        try:
            return cls(TypeDictionary(name, tuple(words)) for name, words in sections.items())
        except DictionaryTooSmall as exc:
            raise FormatError(str(exc), path) from None

    @classmethod
    def load(cls, path: str | PathLike) -> "Lexicon":
        path = Path(path)
        return cls.loads(path.read_text(encoding="utf-8"), str(path))

    def dumps(self) -> str:
        chunks = []
        for d in self._dicts.values():
            chunks.append(f"[{d.type_name}]\n" + "".join(w + "\n" for w in d.words))
        return "\n".join(chunks)

    def dump(self, path: str | PathLike) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def redundancy_percentage(avg_word_letters: float, bytes_per_letter: int, n: int) -> float:
    """Share of an encoded word's storage that is not payload, in percent.

    A word averaging ``avg_word_letters`` letters of ``bytes_per_letter``
    bytes each occupies ``length = letters * bytes * 8`` bits and carries
    ``n`` of them::

        >>> round(redundancy_percentage(4.2, 2, 16), 2)
        76.19
    """
    if avg_word_letters <= 0 or bytes_per_letter <= 0 or n <= 0:
        raise InvalidArgument("all inputs must be positive")
    length = avg_word_letters * bytes_per_letter * 8
    if length <= n:
        raise InvalidArgument(f"word length {length} bits does not exceed the {n} bits it carries")
    return 100.0 * (length - n) / length

"""Sentence patterns and the round-robin word-type schedule.

Grammar file format (UTF-8)::

    # one pattern per line, cycled in file order
    pattern: verb noun noun adverbial
    pattern: noun noun adverbial
"""

from __future__ import annotations

from dataclasses import dataclass
from os import PathLike
from pathlib import Path
from typing import Iterable, Sequence

from .errors import FormatError, GrammarLexiconMismatch, InvalidArgument


@dataclass(frozen=True)
class Pattern:
    types: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        if not self.types:
            raise InvalidArgument("a pattern needs at least one word type")

    def __len__(self) -> int:
        return len(self.types)


class GrammarSchedule:
    """Cursor over a fixed list of patterns.

    Each :meth:`next_type` call yields one word type and whether it closes
    its sentence; after the last slot of the last pattern the cursor wraps
    to the first.  The pattern list itself is immutable and may be shared
    via :meth:`fresh`.
    """

    def __init__(self, patterns: Iterable[Pattern | Sequence[str]]):
        self.patterns: tuple[Pattern, ...] = tuple(
            p if isinstance(p, Pattern) else Pattern(tuple(p)) for p in patterns
        )
        if not self.patterns:
            raise InvalidArgument("a grammar needs at least one pattern")
        self._pattern = 0
        self._slot = 0

    def __repr__(self) -> str:
        return f"GrammarSchedule({[list(p.types) for p in self.patterns]})"

    @property
    def cursor(self) -> tuple[int, int]:
        return self._pattern, self._slot

    def next_type(self) -> tuple[str, bool]:
        pattern = self.patterns[self._pattern]
        label = pattern.types[self._slot]
        last = self._slot == len(pattern) - 1
        if last:
            self._slot = 0
            self._pattern = (self._pattern + 1) % len(self.patterns)
        else:
            self._slot += 1
        return label, last

    def reset(self) -> None:
        self._pattern = 0
        self._slot = 0

    def fresh(self) -> "GrammarSchedule":
        """A new schedule over the same patterns, at the initial cursor."""
        return GrammarSchedule(self.patterns)

    def cycle(self) -> list[tuple[str, bool]]:
        """One full period of the type stream starting from the initial cursor."""
        return [(t, i == len(p) - 1) for p in self.patterns for i, t in enumerate(p.types)]

    @property
    def period(self) -> int:
        return sum(len(p) for p in self.patterns)

    def types(self) -> list[str]:
        """Distinct word types in first-use order."""
        return list(dict.fromkeys(t for p in self.patterns for t in p.types))

    def check_lexicon(self, lexicon) -> None:
        missing = [t for t in self.types() if t not in lexicon]
        if missing:
            raise GrammarLexiconMismatch(
                f"grammar uses word types missing from the lexicon: {', '.join(missing)}"
            )

    @classmethod
    def loads(cls, text: str, path: str | None = None) -> "GrammarSchedule":
        patterns = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip().lstrip("﻿")
            if not line or line.startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            if not sep or key.strip() != "pattern":
                raise FormatError(f"expected 'pattern: type ...', got {line!r}", path, lineno)
            types = rest.split()
            if not types:
                raise FormatError("empty pattern", path, lineno)
            patterns.append(Pattern(tuple(types)))
        if not patterns:
            raise FormatError("no patterns found", path)
        return cls(patterns)

    @classmethod
    def load(cls, path: str | PathLike) -> "GrammarSchedule":
        path = Path(path)
        return cls.loads(path.read_text(encoding="utf-8"), str(path))

    def dumps(self) -> str:
        return "".join("pattern: " + " ".join(p.types) + "\n" for p in self.patterns)

"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class StegError(Exception):
    """Base class for all errors raised by gramsteg."""


class InvalidArgument(StegError, ValueError):
    pass


class MalformedFrame(StegError):
    """The recovered bit stream does not hold a complete length-prefixed frame."""


class FormatError(StegError):
    """A lexicon, grammar, model or table file could not be parsed."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class DictionaryTooSmall(StegError):
    pass


class IndexOutOfRange(StegError, IndexError):
    pass


class UnknownWord(StegError, KeyError):
    """A token is missing from the dictionary the grammar expects at its position."""

    def __init__(self, word: str, expected_type: str, position: int | None = None):
        self.word = word
        self.expected_type = expected_type
        self.position = position
        super().__init__(word, expected_type, position)

    def __str__(self) -> str:
        where = f" at token {self.position}" if self.position is not None else ""
        return f"unknown word {self.word!r}{where} (expected type {self.expected_type!r})"


class UnknownSentence(StegError, KeyError):
    def __init__(self, sentence: str, position: int | None = None):
        self.sentence = sentence
        self.position = position
        super().__init__(sentence, position)

    def __str__(self) -> str:
        where = f" at line {self.position}" if self.position is not None else ""
        return f"unknown sentence{where}: {self.sentence!r}"


class GrammarLexiconMismatch(StegError):
    pass


class InvalidModel(StegError, ValueError):
    """HMM parameters violate the probability invariants."""


class InvalidObservation(StegError, KeyError):
    pass


class OracleTooLarge(StegError):
    pass


class ModelAlphabetMismatch(StegError):
    pass


class EmptyInput(StegError, ValueError):
    pass


class InsufficientData(StegError, ValueError):
    pass

"""Observer-side sentence check: word types -> Viterbi score -> threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ModelAlphabetMismatch
from .hmm import HmmModel, viterbi
from .lexicon import TERMINATOR, Lexicon, normalize

UNKNOWN = "unknown"
DEFAULT_THRESHOLD = -1.5


@dataclass(frozen=True)
class RecognitionVerdict:
    log10_probability_per_word: float
    accepted: bool
    best_path: tuple[str, ...]


def words_to_observations(words: Sequence[str], lexicon: Lexicon) -> list[str]:
    """Map each word to the first type (in lexicon order) that contains it, else ``unknown``."""
    out = []
    for w in words:
        w = normalize(w)
        out.append(next((name for name, d in lexicon.items() if w in d), UNKNOWN))
    return out


def score_sentence(
    words: Sequence[str],
    lexicon: Lexicon,
    model: HmmModel,
    threshold: float = DEFAULT_THRESHOLD,
) -> RecognitionVerdict:
    missing = [t for t in (*lexicon, UNKNOWN) if t not in model.observations]
    if missing:
        raise ModelAlphabetMismatch(f"model cannot emit: {', '.join(missing)}")
    if not words:
        return RecognitionVerdict(-math.inf, False, ())
    result = viterbi(model, words_to_observations(words, lexicon))
    score = result.log10_probability / len(words)
    return RecognitionVerdict(score, score >= threshold, result.path)


def split_sentences(text: str) -> list[list[str]]:
    """Group whitespace-separated tokens into sentences closed by ``.``.

    A trailing group without a terminator counts as a sentence too.
    """
    sentences: list[list[str]] = []
    current: list[str] = []
    for chunk in text.split():
        closes = chunk.endswith(TERMINATOR)
        word = chunk.strip(TERMINATOR)
        if word:
            current.append(word)
        if closes and current:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def score_text(
    text: str, lexicon: Lexicon, model: HmmModel, threshold: float = DEFAULT_THRESHOLD
) -> list[tuple[list[str], RecognitionVerdict]]:
    return [(s, score_sentence(s, lexicon, model, threshold)) for s in split_sentences(text)]

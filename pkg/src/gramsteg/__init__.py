"""Grammar-driven linguistic steganography.

Turns opaque (typically encrypted) byte streams into word sequences whose
word types follow sentence patterns, and back.  Also ships the baseline
codecs, an HMM sentence recognizer and an ENT-style randomness battery.
"""

from importlib import resources
from pathlib import Path

from .bitio import BitCursor, frame_payload, unframe_payload
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
from .entstat import StatReport, analyze
from .grammar import GrammarSchedule, Pattern
from .hmm import HmmModel, enumerate_paths_oracle, forward_probability, viterbi
from .lexicon import Lexicon, TypeDictionary, bits_for, redundancy_percentage
from .recognizer import RecognitionVerdict, score_sentence, score_text

__version__ = "0.1.0"


def data_path(name: str) -> Path:
    """Filesystem path of a bundled sample file (e.g. ``"sample_lexicon.txt"``)."""
    return Path(str(resources.files(__package__).joinpath("data", name)))


def sample_lexicon() -> Lexicon:
    return Lexicon.load(data_path("sample_lexicon.txt"))


def sample_grammar() -> GrammarSchedule:
    return GrammarSchedule.load(data_path("sample_grammar.txt"))


def sample_model() -> HmmModel:
    return HmmModel.load(data_path("sample_model.hmm"))


__all__ = [
    "BitCursor",
    "GrammarSchedule",
    "HmmModel",
    "Lexicon",
    "Pattern",
    "RecognitionVerdict",
    "SentenceTable",
    "StatReport",
    "TypeDictionary",
    "analyze",
    "base64_decode",
    "base64_encode",
    "bits_for",
    "data_path",
    "enumerate_paths_oracle",
    "forward_probability",
    "frame_payload",
    "grammatical_decode",
    "grammatical_encode",
    "redundancy_percentage",
    "sample_grammar",
    "sample_lexicon",
    "sample_model",
    "score_sentence",
    "score_text",
    "sentence_substitution_decode",
    "sentence_substitution_encode",
    "unframe_payload",
    "viterbi",
    "word_substitution_decode",
    "word_substitution_encode",
]

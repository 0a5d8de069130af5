from pathlib import Path

import pytest

import gramsteg
from gramsteg import GrammarSchedule, HmmModel, Lexicon

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    return gramsteg.sample_lexicon()


@pytest.fixture
def grammar() -> GrammarSchedule:
    return gramsteg.sample_grammar()


@pytest.fixture(scope="session")
def model() -> HmmModel:
    return gramsteg.sample_model()


@pytest.fixture(scope="session")
def weather() -> HmmModel:
    return HmmModel.load(gramsteg.data_path("weather.hmm"))


@pytest.fixture(scope="session")
def colors() -> Lexicon:
    return Lexicon.load(gramsteg.data_path("colors_lexicon.txt"))


@pytest.fixture(scope="session")
def plain_text() -> bytes:
    return (DATA / "plain_en.txt").read_bytes()

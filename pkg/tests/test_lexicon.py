import pytest
from hypothesis import given
from hypothesis import strategies as st

from gramsteg.errors import (
    DictionaryTooSmall,
    FormatError,
    IndexOutOfRange,
    InvalidArgument,
    UnknownWord,
)
from gramsteg.lexicon import (
    Lexicon,
    TypeDictionary,
    bits_for,
    bits_for_count,
    index_to_word,
    redundancy_percentage,
    word_to_index,
)

ABYAD, ASWAD = "أبيض", "أسود"


def tokens(m):
    return TypeDictionary("t", tuple(f"w{i:03d}" for i in range(m)))


@pytest.mark.parametrize("m, n", [(131072, 17), (81011, 16), (2, 1), (3, 1), (4, 2), (1023, 9), (1024, 10)])
def test_bits_for_count(m, n):
    assert bits_for_count(m) == n


@pytest.mark.parametrize("m", [0, 1])
def test_too_small(m):
    with pytest.raises(DictionaryTooSmall):
        bits_for_count(m)


@given(st.integers(2, 10**7))
def test_bits_for_brackets_m(m):
    n = bits_for_count(m)
    assert 2**n <= m < 2 ** (n + 1)
    assert bits_for_count(m + 1) >= n


def test_two_word_dictionary(colors):
    d = colors["color"]
    assert bits_for(d) == 1
    assert index_to_word(d, 0) == ABYAD
    assert index_to_word(d, 1) == ASWAD
    assert word_to_index(d, ASWAD) == 1
    assert word_to_index(d, ABYAD) == 0


def test_identity_index_map():
    d = tokens(1000)
    assert d.n == 9
    assert d.index_to_word(0) == "w000"
    assert d.index_to_word(511) == "w511"
    with pytest.raises(IndexOutOfRange):
        d.index_to_word(512)


def test_positions_past_power_of_two_are_masked():
    d = TypeDictionary("t", ("a", "b", "c"))
    assert d.n == 1
    assert d.word_to_index("c") == 0
    assert tokens(1000).word_to_index("w700") == 700 - 512


def test_unknown_word_carries_context():
    with pytest.raises(UnknownWord) as info:
        tokens(4).word_to_index("nope")
    assert info.value.word == "nope"
    assert info.value.expected_type == "t"


@given(st.integers(2, 3000), st.data())
def test_bijection(m, data):
    d = tokens(m)
    p = data.draw(st.integers(0, 2**d.n - 1))
    assert d.word_to_index(d.index_to_word(p)) == p


def test_nfc_normalisation():
    composed = "\u00e9"
    decomposed = "e\u0301"
    d = TypeDictionary("t", (decomposed, "x"))
    assert d.words[0] == composed
    assert d.word_to_index(composed) == 0
    assert d.word_to_index(decomposed) == 0


@pytest.mark.parametrize("bad", ["two words", "end.", ""])
def test_invalid_words(bad):
    with pytest.raises(InvalidArgument):
        TypeDictionary("t", (bad, "x", "y"))


def test_duplicate_word_rejected():
    with pytest.raises(InvalidArgument):
        TypeDictionary("t", ("x", "x"))


def test_load_format():
    lex = Lexicon.loads("# c\n[verb]\n  go \ncome\n\n[noun]\ncat\ndog\n# more\nbird\n")
    assert list(lex) == ["verb", "noun"]
    assert lex["verb"].words == ("go", "come")
    assert lex["noun"].words == ("cat", "dog", "bird")


@pytest.mark.parametrize(
    "text, line",
    [
        ("[a]\nx\nx\n", 3),
        ("[a]\nx\ny\n[a]\nz\nw\n", 4),
        ("x\n[a]\n", 1),
        ("[a]\nx y\nz\n", 2),
    ],
)
def test_load_errors_report_line(text, line):
    with pytest.raises(FormatError) as info:
        Lexicon.loads(text, "lex.txt")
    assert info.value.line == line


def test_load_rejects_tiny_section():
    with pytest.raises(FormatError):
        Lexicon.loads("[a]\nx\n")


def test_dump_preserves_order(lexicon, tmp_path):
    path = tmp_path / "lex.txt"
    lexicon.dump(path)
    again = Lexicon.load(path)
    assert list(again) == list(lexicon)
    for name in lexicon:
        assert again[name].words == lexicon[name].words


def test_sample_lexicon_shape(lexicon):
    assert list(lexicon) == ["verb", "noun", "adverbial"]
    for d in lexicon.values():
        assert d.m >= 1000
    seen = set()
    for d in lexicon.values():
        assert not seen & set(d.words)
        seen |= set(d.words)


def test_redundancy_reference_figures():
    assert redundancy_percentage(4.2, 2, 16) == pytest.approx(100 * (67.2 - 16) / 67.2)
    assert round(redundancy_percentage(4.2, 2, 16), 2) == 76.19
    assert redundancy_percentage(5, 2, 17) == pytest.approx(78.75)
    assert redundancy_percentage(5, 1, 17) == pytest.approx(57.5)


@pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 8), (1, 1, 9)])
def test_redundancy_invalid(args):
    with pytest.raises(InvalidArgument):
        redundancy_percentage(*args)

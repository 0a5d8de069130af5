"""
Hiding one byte with a two-word dictionary
==========================================

"""

import gramsteg
from gramsteg import Lexicon, word_substitution_decode, word_substitution_encode

# a dictionary of two colour words carries one bit per word
colors = Lexicon.load(gramsteg.data_path("colors_lexicon.txt"))["color"]
print(colors.words, "bits per word:", colors.n)

# 0xB6 is 10110110; raw mode skips the length header
text = word_substitution_encode(b"\xb6", colors, raw=True)
print(text)

for word in text.split():
    print(f"{word}  ->  {colors.word_to_index(word)}")

assert word_substitution_decode(text, colors, raw=True) == b"\xb6"

# framed mode prepends a 32-bit length, so even an empty payload costs 32 words
print(len(word_substitution_encode(b"", colors).split()), "words for an empty framed payload")

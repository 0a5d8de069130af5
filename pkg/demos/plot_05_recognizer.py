"""
Scoring sentences against a grammar model
=========================================

"""

import os

import gramsteg
from gramsteg import grammatical_encode, score_text

lexicon = gramsteg.sample_lexicon()
model = gramsteg.sample_model()

text = grammatical_encode(os.urandom(24), lexicon, gramsteg.sample_grammar())
for words, verdict in score_text(text, lexicon, model):
    print(f"{verdict.log10_probability_per_word:7.3f}  {'ok ' if verdict.accepted else 'REJ'}  {' '.join(words)}")

# the same words in a broken order
nouns = list(lexicon["noun"].words[:2])
adverbial = lexicon["adverbial"].words[0]
for words, verdict in score_text(f"{adverbial} {nouns[0]} {nouns[1]}.", lexicon, model):
    print(f"{verdict.log10_probability_per_word:7.3f}  {'ok ' if verdict.accepted else 'REJ'}  {' '.join(words)}")

# made-up words map to the unknown observation
for words, verdict in score_text("lorem ipsum dolor.", lexicon, model):
    print(f"{verdict.log10_probability_per_word:7.3f}  {'ok ' if verdict.accepted else 'REJ'}  {' '.join(words)}")

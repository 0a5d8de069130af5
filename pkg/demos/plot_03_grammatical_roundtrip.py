"""
Grammatical encoding with the sample lexicon
============================================

"""

import os

import gramsteg
from gramsteg import grammatical_decode, grammatical_encode

lexicon = gramsteg.sample_lexicon()
grammar = gramsteg.sample_grammar()

for name, d in lexicon.items():
    print(f"{name:10s} m={d.m:5d} n={d.n}")
print(grammar.dumps())

# ciphertext stand-in
payload = os.urandom(48)
text = grammatical_encode(payload, lexicon, grammar)
print(text)

# sentences follow the patterns in turn; the receiver replays the same schedule
assert grammatical_decode(text, lexicon, grammar) == payload
print(len(payload), "bytes ->", len(text.split()), "words")

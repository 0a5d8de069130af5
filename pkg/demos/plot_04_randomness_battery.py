"""
How stego text looks to a randomness battery
============================================

"""

import os
from pathlib import Path

import gramsteg
from gramsteg import analyze, grammatical_encode

here = Path(__file__).resolve().parent
plain = (here.parent / "tests" / "data" / "plain_en.txt").read_bytes()

# random bytes play the ciphertext; the stego text is what actually gets sent
cipher = os.urandom(32 * 1024)
stego = grammatical_encode(cipher, gramsteg.sample_lexicon(), gramsteg.sample_grammar()).encode("utf-8")

for label, data in [("plain", plain), ("cipher", cipher), ("stego", stego)]:
    r = analyze(data)
    print(f"--- {label} ---")
    print(r.to_table())

# the cipher looks random; the stego output looks like text

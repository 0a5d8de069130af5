"""
Capacity and redundancy
=======================

"""

import gramsteg
from gramsteg import Lexicon, TypeDictionary
from gramsteg.cli import capacity_report

# a large single dictionary: 81011 words of 4.2 letters at 2 bytes a letter
big = Lexicon([TypeDictionary("word", tuple(f"w{i}" for i in range(81011)))])
print(capacity_report(big, None, 4.2, 2)["types"]["word"])

# the sample lexicon and grammar, using measured word lengths
report = capacity_report(gramsteg.sample_lexicon(), gramsteg.sample_grammar(), None, 2)
for p in report["patterns"]:
    print(" ".join(p["types"]), "->", p["bits_per_sentence"], "bits")
print(f"{report['bits_per_word']:.2f} bits per word, redundancy {report['redundancy_pct']:.1f}%")

"""Analyze surface words and generate them back with the bundled model."""

import unicodedata

from hindimorph import data_path, morph, rules
from hindimorph.fst import SymbolTable

grammar = rules.compile_file(data_path("rules", "hindi.mrl"), SymbolTable())
model = morph.MorphModel(
    grammar=grammar,
    indeclinables=morph.load_indeclinables(data_path("indeclinables.tsv")))

words = [
    "लडका",      # one analysis
    "लडके",      # plural and vocative share a surface form
    "मालन",      # feminine derived from a masculine root
    "जाते",      # three readings
    "जा रहा",    # continuous forms keep their space
    "कमीनापन",   # derived noun
    "अरे",       # indeclinable, straight from the dictionary
    "घरों",      # unknown: soft miss, not an error
]
for word in words:
    analyses = [a.render() for a in morph.analyze(model, word)]
    print(f"{word:10} {analyses if analyses else '?'}")

print()
for lexical in ["लडका<Noun><masculine><pl>",
                "कहानी<Noun><masculine><pl>",
                "जा<Verb><Indicative><Masculine><Progressive><sg>"]:
    print(f"{lexical}  ->  {morph.generate(model, lexical)}")

# spelling variants that normalize to the same NFC string analyze alike
decomposed = "पढ़ी"   # प + ढ + nukta + ी
composed = "पढ़ी"           # प + precomposed ढ़ + ी
print()
print("NFC forms equal:",
      unicodedata.normalize("NFC", decomposed)
      == unicodedata.normalize("NFC", composed))
print("analyses equal:",
      morph.analyze(model, decomposed) == morph.analyze(model, composed))

"""Finite-state morphology toolkit for Hindi.

Root-word lexicons and handwritten inflection/derivation rules compile
into minimized finite-state transducers that analyze and generate word
forms; a maximum-entropy POS tagger sits on top and falls back on the
morphology for words outside its training dictionary.

Subpackage map:

- :mod:`hindimorph.fst` - transducer data structures and algebra
- :mod:`hindimorph.rules` - the rule language and its compiler
- :mod:`hindimorph.lexicon` - root-word lexicon files and tries
- :mod:`hindimorph.morph` - analysis/generation over a compiled grammar
- :mod:`hindimorph.tagger` - log-linear POS tagging
- :mod:`hindimorph.cli` - the ``hindimorph`` command

A small demonstration grammar, lexicon, indeclinable dictionary, and
tagged mini-corpus ship under :func:`data_path`.
"""

from __future__ import annotations

from pathlib import Path

from .fst import StringPairSet, SymbolTable, Transducer
from .lexicon import LexiconEntry, LexiconStats, PosClass
from .morph import Analysis, MorphModel
from .rules import RuleFile
from .tagger import TaggedCorpus, TagModel

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "LexiconEntry",
    "LexiconStats",
    "MorphModel",
    "PosClass",
    "RuleFile",
    "StringPairSet",
    "SymbolTable",
    "TaggedCorpus",
    "TagModel",
    "Transducer",
    "data_path",
    "__version__",
]


def data_path(*parts: str) -> Path:
    """Path of a bundled data file (demo grammar, lexicon, corpus)."""
    return Path(__file__).resolve().parent.joinpath("data", *parts)

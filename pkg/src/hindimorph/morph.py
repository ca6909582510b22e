"""Morphological analysis and generation over a compiled grammar.

A grammar maps lexical forms (root plus ``<Tag>`` symbols) to surface
forms; analysis runs it inverted.  Indeclinable words that no rule
should touch live in a plain dictionary file that shadows the
transducer in both directions.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path

from . import fst
from .fst import Transducer


class MorphError(Exception):
    pass


class MalformedAnalysis(MorphError):
    pass


_ANALYSIS_RE = re.compile(r"^([^<>]+)((?:<[^<>]+>)+)$")
_TAG_RE = re.compile(r"<([^<>]+)>")


@dataclass(frozen=True)
class Analysis:
    """A root with its ordered tag sequence, e.g. लडका + (Noun, masculine, sg)."""

    root: str
    tags: tuple[str, ...]

    def render(self) -> str:
        return self.root + "".join(f"<{t}>" for t in self.tags)

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "Analysis":
        """Parse ``root<Tag1><Tag2>...``; anything else is malformed."""
        m = _ANALYSIS_RE.match(text)
        if not m:
            raise MalformedAnalysis(f"not a root<Tag>... analysis: {text!r}")
        return cls(m.group(1), tuple(_TAG_RE.findall(m.group(2))))


def load_indeclinables(path) -> dict[str, list[Analysis]]:
    """Read a word<TAB>analysis file; repeated words accumulate analyses.

    Blank lines and ``%`` comments are skipped.  Both columns are
    NFC-normalized; a record whose analysis has no root or no tags
    raises :class:`MalformedAnalysis` naming the line.
    """
    result: dict[str, list[Analysis]] = {}
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = unicodedata.normalize("NFC", raw.rstrip("\n"))
            stripped = line.strip()
            if not stripped or stripped.startswith("%"):
                continue
            word, sep, analysis = stripped.partition("\t")
            word = word.strip()
            analysis = analysis.strip()
            if not sep or not word or not analysis:
                raise MalformedAnalysis(
                    f"{path.name}:{lineno}: expected word<TAB>analysis")
            try:
                parsed = Analysis.parse(analysis)
            except MalformedAnalysis as exc:
                raise MalformedAnalysis(f"{path.name}:{lineno}: {exc}") from exc
            result.setdefault(word, []).append(parsed)
    return result


class MorphModel:
    """A generation-direction grammar plus the indeclinable dictionary."""

    def __init__(self, grammar: Transducer,
                 indeclinables: dict[str, list[Analysis]] | None = None):
        self.grammar = grammar
        self.inverse = fst.invert(grammar)
        self.indeclinables = {w: list(a) for w, a in (indeclinables or {}).items()}
        self._words_by_analysis: dict[str, list[str]] = {}
        for word, analyses in self.indeclinables.items():
            for analysis in analyses:
                self._words_by_analysis.setdefault(analysis.render(), []).append(word)
        for words in self._words_by_analysis.values():
            words.sort()

    @classmethod
    def load(cls, grammar_path, indeclinables_path=None) -> "MorphModel":
        grammar = fst.load(grammar_path)
        indecl = (load_indeclinables(indeclinables_path)
                  if indeclinables_path is not None else None)
        return cls(grammar, indecl)


def analyze(model: MorphModel, surface: str) -> list[Analysis]:
    """All analyses of a surface word, ordered by rendered form.

    The indeclinable dictionary shadows the grammar; a word outside
    both yields an empty list (a soft miss, not an error).
    """
    surface = unicodedata.normalize("NFC", surface)
    stored = model.indeclinables.get(surface)
    if stored is not None:
        return sorted(stored, key=Analysis.render)
    try:
        pairs = fst.apply(model.inverse, surface)
    except fst.UnknownSymbol:
        return []
    analyses = [Analysis.parse(out) for _, out in pairs]
    return sorted(analyses, key=Analysis.render)


def generate(model: MorphModel, lexical: str) -> list[str]:
    """Surface forms for a rendered lexical string, sorted.

    The lexical string must look like ``root<Tag>...`` (otherwise
    :class:`MalformedAnalysis`); an indeclinable analysis generates its
    dictionary word, shadowing the grammar.  An unknown-but-well-formed
    lexical form yields an empty list.
    """
    lexical = unicodedata.normalize("NFC", lexical)
    Analysis.parse(lexical)
    stored = model._words_by_analysis.get(lexical)
    if stored is not None:
        return list(stored)
    try:
        pairs = fst.apply(model.grammar, lexical)
    except fst.UnknownSymbol:
        return []
    return sorted(out for _, out in pairs)

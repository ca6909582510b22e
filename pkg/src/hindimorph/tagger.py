"""Maximum-entropy part-of-speech tagging with a morphological fallback.

The model is a conditional log-linear classifier per token,

    p(t | h) = exp(w . f(h, t)) / sum_t' exp(w . f(h, t')),

trained by full-batch gradient ascent on the mean per-token
log-likelihood minus an L2 penalty.  Decoding is a beam search over tag
sequences conditioned on the previous tag.  Words never seen in
training fall back on the morphological analyzer: the analyses' leading
categories map onto tagset candidates.
"""

from __future__ import annotations

import math
import struct
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import morph

BOUNDARY_WORD = "<s>"
BOUNDARY_WORD_END = "</s>"
BOUNDARY_TAG = "<s>"
PUNCT_TAG = "I"
PUNCT_CHARS = frozenset("।?!,")

# String-payload feature templates plus the two always-on boolean flags.
TEMPLATES = ("w", "pw", "nw", "pt", "s1", "s2", "s3", "s4", "p1", "punct", "dig")

# First analysis tag -> plausible tagset candidates for unseen words.
MORPH_TAG_MAP: dict[str, tuple[str, ...]] = {
    "Noun": ("N_NN",),
    "Pronoun": ("PR_PRI",),
    "Adjective": ("JJ",),
    "Verb": ("V_VM", "V_AUX"),
    "Adverb": ("RB",),
    "Particle": ("RP",),
}


class TaggerError(Exception):
    pass


class EmptyCorpus(TaggerError):
    pass


class TagsetMismatch(TaggerError):
    pass


class CorpusFormatError(TaggerError):
    pass


@dataclass(frozen=True)
class Token:
    surface: str
    is_punct: bool


def tokenize_sentence(text: str) -> list[Token]:
    """Whitespace tokenization with punctuation detached as own tokens."""
    tokens: list[Token] = []
    for chunk in unicodedata.normalize("NFC", text).split():
        buf = ""
        for ch in chunk:
            if ch in PUNCT_CHARS:
                if buf:
                    tokens.append(Token(buf, False))
                    buf = ""
                tokens.append(Token(ch, True))
            else:
                buf += ch
        if buf:
            tokens.append(Token(buf, False))
    return tokens


@dataclass
class TaggedCorpus:
    """Sentences of (surface, tag) pairs."""

    sentences: list[list[tuple[str, str]]]

    @classmethod
    def parse(cls, text: str, source: str = "<corpus>") -> "TaggedCorpus":
        """One sentence per line, tokens as surface/TAG (last slash splits)."""
        sentences = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = unicodedata.normalize("NFC", raw).strip()
            if not line:
                continue
            sentence = []
            for item in line.split():
                surface, sep, tag = item.rpartition("/")
                if not sep or not surface or not tag:
                    raise CorpusFormatError(
                        f"{source}:{lineno}: token {item!r} is not surface/TAG")
                sentence.append((surface, tag))
            sentences.append(sentence)
        return cls(sentences)

    @classmethod
    def read(cls, path) -> "TaggedCorpus":
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), source=path.name)

    def tagset(self) -> tuple[str, ...]:
        return tuple(sorted({tag for sent in self.sentences for _, tag in sent}))


def extract_features(tokens: Sequence[Token], i: int, prev_tag: str) -> list[str]:
    """Feature payloads (template:value) for position i.

    Every template fires at every position (boolean templates carry a
    0/1 payload), so the feature count per token is constant.
    """
    word = tokens[i].surface
    prev_word = tokens[i - 1].surface if i > 0 else BOUNDARY_WORD
    next_word = tokens[i + 1].surface if i + 1 < len(tokens) else BOUNDARY_WORD_END
    return [
        f"w:{word}",
        f"pw:{prev_word}",
        f"nw:{next_word}",
        f"pt:{prev_tag}",
        f"s1:{word[-1:]}",
        f"s2:{word[-2:]}",
        f"s3:{word[-3:]}",
        f"s4:{word[-4:]}",
        f"p1:{word[:1]}",
        f"punct:{1 if tokens[i].is_punct else 0}",
        f"dig:{1 if any(ch.isdigit() for ch in word) else 0}",
    ]


@dataclass
class TagModel:
    tagset: tuple[str, ...]
    weights: dict[str, float]
    templates: tuple[str, ...]
    dictionary: dict[str, frozenset[str]]
    l2_lambda: float
    loss_history: list[float] = field(default_factory=list, repr=False, compare=False)


@dataclass(frozen=True)
class TrainConfig:
    l2_lambda: float = 0.1
    epochs: int = 100
    step: float = 0.1


def _log_probs(weights: dict[str, float], feats: Sequence[str],
               tagset: Sequence[str]) -> dict[str, float]:
    scores = {t: sum(weights.get(f"{f}:{t}", 0.0) for f in feats) for t in tagset}
    peak = max(scores.values())
    log_z = peak + math.log(sum(math.exp(s - peak) for s in scores.values()))
    return {t: s - log_z for t, s in scores.items()}


def tag_probs(model: TagModel, feats: Sequence[str]) -> dict[str, float]:
    """p(tag | features) over the full tagset (sums to 1)."""
    return {t: math.exp(lp)
            for t, lp in _log_probs(model.weights, feats, model.tagset).items()}


def _positions(corpus: TaggedCorpus) -> list[tuple[list[str], str]]:
    """(features, gold tag) per token, with gold previous tags."""
    positions = []
    for sentence in corpus.sentences:
        tokens = [Token(s, s in PUNCT_CHARS) for s, _ in sentence]
        for i, (_, gold) in enumerate(sentence):
            prev_tag = sentence[i - 1][1] if i > 0 else BOUNDARY_TAG
            positions.append((extract_features(tokens, i, prev_tag), gold))
    return positions


def objective(weights: dict[str, float], positions: Sequence[tuple[list[str], str]],
              tagset: Sequence[str], l2_lambda: float) -> float:
    """Mean per-token log-likelihood minus l2_lambda * ||w||^2."""
    total = 0.0
    for feats, gold in positions:
        total += _log_probs(weights, feats, tagset)[gold]
    penalty = l2_lambda * sum(v * v for v in weights.values())
    return total / len(positions) - penalty


def gradient(weights: dict[str, float], positions: Sequence[tuple[list[str], str]],
             tagset: Sequence[str], l2_lambda: float) -> dict[str, float]:
    """Exact gradient of :func:`objective` at `weights`.

    Observed minus expected feature counts (averaged per token) minus
    the L2 term.  Keys cover every feature/tag combination seen in the
    data plus every existing weight.
    """
    grad: dict[str, float] = {}
    for feats, gold in positions:
        log_p = _log_probs(weights, feats, tagset)
        for f in feats:
            gold_key = f"{f}:{gold}"
            grad[gold_key] = grad.get(gold_key, 0.0) + 1.0
            for t in tagset:
                key = f"{f}:{t}"
                grad[key] = grad.get(key, 0.0) - math.exp(log_p[t])
    n = float(len(positions))
    for key in grad:
        grad[key] /= n
    for key, w in weights.items():
        grad[key] = grad.get(key, 0.0) - 2.0 * l2_lambda * w
    return grad


def train(corpus: TaggedCorpus, config: TrainConfig | None = None) -> TagModel:
    """Train a tagger by full-batch gradient ascent from zero weights.

    Iteration order is fixed by the corpus, so the result is
    deterministic.  The returned model records the loss (negated
    objective) before each epoch and after the last one in
    ``loss_history``.
    """
    if not corpus.sentences or all(not s for s in corpus.sentences):
        raise EmptyCorpus("training corpus has no tokens")
    config = config or TrainConfig()
    tagset = corpus.tagset()
    dictionary: dict[str, frozenset[str]] = {}
    observed: dict[str, set[str]] = {}
    for sentence in corpus.sentences:
        for surface, tag in sentence:
            observed.setdefault(surface, set()).add(tag)
    for surface in observed:
        dictionary[surface] = frozenset(observed[surface])
    positions = _positions(corpus)

    weights: dict[str, float] = {}
    losses: list[float] = []
    for _ in range(config.epochs):
        losses.append(-objective(weights, positions, tagset, config.l2_lambda))
        grad = gradient(weights, positions, tagset, config.l2_lambda)
        for key, g in grad.items():
            weights[key] = weights.get(key, 0.0) + config.step * g
    losses.append(-objective(weights, positions, tagset, config.l2_lambda))
    return TagModel(tagset, weights, TEMPLATES, dictionary, config.l2_lambda, losses)


def candidate_tags(model: TagModel, morph_model: morph.MorphModel | None,
                   word: str) -> tuple[str, ...]:
    """Plausible tags for a word, in tagset order.

    Dictionary words get their observed tags; punctuation gets the
    punctuation tag; anything else falls back on morphological analyses
    (first tag through :data:`MORPH_TAG_MAP`).  A word with no analyses,
    or an analysis outside the map, opens the full tagset.
    """
    word = unicodedata.normalize("NFC", word)
    full = set(model.tagset)
    if word and all(ch in PUNCT_CHARS for ch in word):
        cands = {PUNCT_TAG}
    elif word in model.dictionary:
        cands = set(model.dictionary[word])
    else:
        analyses = morph.analyze(morph_model, word) if morph_model else []
        if not analyses:
            cands = full
        else:
            cands = set()
            for analysis in analyses:
                mapped = MORPH_TAG_MAP.get(analysis.tags[0] if analysis.tags else "")
                cands.update(mapped if mapped else full)
    cands &= full
    if not cands:
        cands = full
    return tuple(t for t in model.tagset if t in cands)


def _tag_tokens(model: TagModel, morph_model: morph.MorphModel | None,
                tokens: Sequence[Token], beam: int = 3) -> list[str]:
    """Beam-search decode; ties break toward earlier tagset order."""
    tag_index = {t: i for i, t in enumerate(model.tagset)}
    beams: list[tuple[float, tuple[str, ...], tuple[int, ...]]] = [(0.0, (), ())]
    for i, token in enumerate(tokens):
        cands = candidate_tags(model, morph_model, token.surface)
        expanded = []
        for score, tags, path in beams:
            prev_tag = tags[-1] if tags else BOUNDARY_TAG
            feats = extract_features(tokens, i, prev_tag)
            log_p = _log_probs(model.weights, feats, model.tagset)
            for t in cands:
                expanded.append((score + log_p[t], tags + (t,), path + (tag_index[t],)))
        expanded.sort(key=lambda item: (-item[0], item[2]))
        beams = expanded[:beam]
    return list(beams[0][1])


def tag(model: TagModel, morph_model: morph.MorphModel | None,
        sentence: str, beam: int = 3) -> list[tuple[str, str]]:
    """Tokenize and tag a raw sentence."""
    tokens = tokenize_sentence(sentence)
    if not tokens:
        return []
    tags = _tag_tokens(model, morph_model, tokens, beam)
    return [(tok.surface, t) for tok, t in zip(tokens, tags)]


@dataclass(frozen=True)
class EvalResult:
    known_acc: float
    unknown_acc: float
    overall_acc: float
    known_total: int
    unknown_total: int
    known_defined: bool
    unknown_defined: bool


def evaluate(model: TagModel, morph_model: morph.MorphModel | None,
             gold: TaggedCorpus, beam: int = 3) -> EvalResult:
    """Token accuracy on a gold corpus, split by dictionary membership.

    An empty partition reports accuracy 1.0 with its `*_defined` flag
    cleared.  Gold tags outside the model's tagset raise
    :class:`TagsetMismatch`.
    """
    extra = sorted({t for s in gold.sentences for _, t in s} - set(model.tagset))
    if extra:
        raise TagsetMismatch(f"gold tags outside the model tagset: {extra}")
    known_hits = known_total = unknown_hits = unknown_total = 0
    for sentence in gold.sentences:
        if not sentence:
            continue
        surfaces = [unicodedata.normalize("NFC", s) for s, _ in sentence]
        tokens = [Token(s, bool(s) and all(c in PUNCT_CHARS for c in s))
                  for s in surfaces]
        predicted = _tag_tokens(model, morph_model, tokens, beam)
        for surface, (_, gold_tag), pred in zip(surfaces, sentence, predicted):
            if surface in model.dictionary:
                known_total += 1
                known_hits += pred == gold_tag
            else:
                unknown_total += 1
                unknown_hits += pred == gold_tag
    total = known_total + unknown_total
    if total == 0:
        raise EmptyCorpus("evaluation corpus has no tokens")
    return EvalResult(
        known_acc=known_hits / known_total if known_total else 1.0,
        unknown_acc=unknown_hits / unknown_total if unknown_total else 1.0,
        overall_acc=(known_hits + unknown_hits) / total,
        known_total=known_total,
        unknown_total=unknown_total,
        known_defined=known_total > 0,
        unknown_defined=unknown_total > 0,
    )


# ---------------------------------------------------------------------------
# Serialization

MAGIC = b"MTAG"
FORMAT_VERSION = 1


def _pack_str(s: str) -> bytes:
    raw = s.encode("utf-8")
    return struct.pack("<I", len(raw)) + raw


def model_to_bytes(model: TagModel) -> bytes:
    """Serialize (little-endian; weight map sorted by key for stability)."""
    out = bytearray()
    out += MAGIC
    out += struct.pack("<H", FORMAT_VERSION)
    out += struct.pack("<d", model.l2_lambda)
    out += struct.pack("<I", len(model.tagset))
    for t in model.tagset:
        out += _pack_str(t)
    out += struct.pack("<I", len(model.templates))
    for t in model.templates:
        out += _pack_str(t)
    tag_index = {t: i for i, t in enumerate(model.tagset)}
    out += struct.pack("<I", len(model.dictionary))
    for word in sorted(model.dictionary):
        out += _pack_str(word)
        indices = sorted(tag_index[t] for t in model.dictionary[word])
        out += struct.pack("<I", len(indices))
        for idx in indices:
            out += struct.pack("<I", idx)
    out += struct.pack("<I", len(model.weights))
    for key in sorted(model.weights):
        out += _pack_str(key)
        out += struct.pack("<d", model.weights[key])
    return bytes(out)


def model_from_bytes(data: bytes) -> TagModel:
    view = memoryview(data)
    pos = 0

    def take(n: int) -> memoryview:
        nonlocal pos
        if pos + n > len(view):
            raise TaggerError("truncated tagger model file")
        chunk = view[pos : pos + n]
        pos += n
        return chunk

    def u16() -> int:
        return struct.unpack("<H", take(2))[0]

    def u32() -> int:
        return struct.unpack("<I", take(4))[0]

    def f64() -> float:
        return struct.unpack("<d", take(8))[0]

    def text() -> str:
        raw = bytes(take(u32()))
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TaggerError("model string is not valid UTF-8") from exc

    if bytes(take(4)) != MAGIC:
        raise TaggerError("not a tagger model file (bad magic)")
    version = u16()
    if version != FORMAT_VERSION:
        raise TaggerError(f"unsupported tagger model version {version}")
    l2_lambda = f64()
    tagset = tuple(text() for _ in range(u32()))
    templates = tuple(text() for _ in range(u32()))
    dictionary: dict[str, frozenset[str]] = {}
    for _ in range(u32()):
        word = text()
        indices = [u32() for _ in range(u32())]
        try:
            dictionary[word] = frozenset(tagset[i] for i in indices)
        except IndexError as exc:
            raise TaggerError(f"dictionary tag index out of range for {word!r}") from exc
    weights: dict[str, float] = {}
    for _ in range(u32()):
        key = text()
        weights[key] = f64()
    if pos != len(view):
        raise TaggerError("trailing bytes after tagger model data")
    return TagModel(tagset, weights, templates, dictionary, l2_lambda)


def save_model(model: TagModel, path) -> None:
    with open(path, "wb") as fh:
        fh.write(model_to_bytes(model))


def load_model(path) -> TagModel:
    with open(path, "rb") as fh:
        return model_from_bytes(fh.read())

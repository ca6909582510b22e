"""Command-line interface.

Subcommands::

    lexicon-extract <corpus> -o <out>        unique sorted word types
    lexicon-stats --lexdir <dir>             per-class root counts
    compile -r <rules.mrl> [--lexdir <dir>] -o <model.fst>
    analyze -m <model.fst> [--indecl <tsv>] [words...|-]
    generate -m <model.fst> [lexical...|-]
    train -c <tagged.txt> -o <model.tag> [--lambda F --epochs N --step F]
    tag -m <model.tag> -f <model.fst> [--beam N] [sentence|-]
    eval -m <model.tag> -f <model.fst> -c <gold.txt>

Exit status: 0 on success (an unanalyzable word is not an error), 1 on
domain errors (bad files, malformed input), 2 on usage errors.  Output
files are written to a temporary sibling and renamed into place, so a
failure never leaves a partial file.  Output is plain text with no
color, so NO_COLOR needs no special handling.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import fst, lexicon, morph, rules, tagger


def _write_atomic(path: Path, data: bytes) -> None:
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent or Path("."),
                                    prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def _read_text(path) -> str:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(f"{path}: invalid UTF-8 at byte {exc.start}") from exc


def _words_from(args_words: list[str]) -> list[str]:
    if not args_words or args_words == ["-"]:
        return [line.rstrip("\n") for line in sys.stdin if line.strip()]
    return args_words


class CliError(Exception):
    pass


def cmd_lexicon_extract(args) -> int:
    words = lexicon.extract_unique_sorted(_read_text(args.corpus))
    payload = "".join(w + "\n" for w in words).encode("utf-8")
    _write_atomic(Path(args.output), payload)
    print(f"{len(words)} unique words -> {args.output}")
    return 0


def cmd_lexicon_stats(args) -> int:
    lexdir = Path(args.lexdir)
    if not lexdir.is_dir():
        raise CliError(f"not a directory: {lexdir}")
    paths = {cls: lexdir / name
             for cls, name in lexicon.STANDARD_FILES.items()
             if (lexdir / name).is_file()}
    if not paths:
        raise CliError(f"no lexicon files found in {lexdir}")
    _, stats = lexicon.load_classified(paths)
    for cls in lexicon.PosClass:
        label = lexicon.STANDARD_FILES[cls].removesuffix(".txt")
        print(f"{label}: {stats.counts.get(cls, 0)}")
    print(f"total: {stats.total}")
    return 0


def cmd_compile(args) -> int:
    symbols = fst.SymbolTable()
    machine = rules.compile_file(args.rules, symbols, lexdir=args.lexdir)
    _write_atomic(Path(args.output), fst.to_bytes(machine))
    print(f"{machine.state_count} states, {len(machine.arcs)} arcs -> {args.output}")
    return 0


def _load_morph(model_path, indecl_path=None) -> morph.MorphModel:
    return morph.MorphModel.load(model_path, indecl_path)


def cmd_analyze(args) -> int:
    model = _load_morph(args.model, args.indecl)
    for word in _words_from(args.words):
        analyses = morph.analyze(model, word)
        if analyses:
            print(word + "\t" + "\t".join(a.render() for a in analyses))
        else:
            print(word + "\t?")
    return 0


def cmd_generate(args) -> int:
    model = _load_morph(args.model)
    for lexical in _words_from(args.lexical):
        surfaces = morph.generate(model, lexical)
        if surfaces:
            print(lexical + "\t" + "\t".join(surfaces))
        else:
            print(lexical + "\t?")
    return 0


def cmd_train(args) -> int:
    corpus = tagger.TaggedCorpus.read(args.corpus)
    config = tagger.TrainConfig(l2_lambda=args.l2_lambda, epochs=args.epochs,
                                step=args.step)
    model = tagger.train(corpus, config)
    _write_atomic(Path(args.output), tagger.model_to_bytes(model))
    tokens = sum(len(s) for s in corpus.sentences)
    print(f"trained on {len(corpus.sentences)} sentences, {tokens} tokens; "
          f"{len(model.tagset)} tags, {len(model.weights)} weights -> {args.output}")
    return 0


def cmd_tag(args) -> int:
    model = tagger.load_model(args.model)
    morph_model = _load_morph(args.fst)
    sentences = _words_from(args.sentence)
    for sentence in sentences:
        tagged = tagger.tag(model, morph_model, sentence, beam=args.beam)
        print(" ".join(f"{surface}/{t}" for surface, t in tagged))
    return 0


def cmd_eval(args) -> int:
    model = tagger.load_model(args.model)
    morph_model = _load_morph(args.fst)
    gold = tagger.TaggedCorpus.read(args.corpus)
    result = tagger.evaluate(model, morph_model, gold)
    known_note = "" if result.known_defined else ", undefined"
    unknown_note = "" if result.unknown_defined else ", undefined"
    print(f"known: {result.known_acc:.4f} ({result.known_total} tokens{known_note})")
    print(f"unknown: {result.unknown_acc:.4f} ({result.unknown_total} tokens{unknown_note})")
    print(f"overall: {result.overall_acc:.4f} "
          f"({result.known_total + result.unknown_total} tokens)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hindimorph",
        description="Finite-state Hindi morphology and maximum-entropy POS tagging.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lexicon-extract",
                       help="extract unique sorted word types from a raw corpus")
    p.add_argument("corpus")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_lexicon_extract)

    p = sub.add_parser("lexicon-stats", help="per-class root counts for a lexicon directory")
    p.add_argument("--lexdir", required=True)
    p.set_defaults(func=cmd_lexicon_stats)

    p = sub.add_parser("compile", help="compile a rule file into a transducer model")
    p.add_argument("-r", "--rules", required=True)
    p.add_argument("--lexdir", default=None,
                   help="extra directory for resolving #include paths")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("analyze", help="analyze surface words")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("--indecl", default=None,
                   help="indeclinable dictionary (word<TAB>analysis)")
    p.add_argument("words", nargs="*",
                   help="words to analyze; '-' or none reads stdin lines")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="generate surface forms from lexical strings")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("lexical", nargs="*",
                   help="lexical strings; '-' or none reads stdin lines")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("train", help="train the POS tagger on a tagged corpus")
    p.add_argument("-c", "--corpus", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--lambda", dest="l2_lambda", type=float, default=0.1)
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--step", type=float, default=0.1)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("tag", help="tag sentences")
    p.add_argument("-m", "--model", required=True, help="tagger model file")
    p.add_argument("-f", "--fst", required=True, help="morphology transducer file")
    p.add_argument("--beam", type=int, default=3)
    p.add_argument("sentence", nargs="*",
                   help="sentences; '-' or none reads stdin lines")
    p.set_defaults(func=cmd_tag)

    p = sub.add_parser("eval", help="evaluate the tagger against a gold corpus")
    p.add_argument("-m", "--model", required=True, help="tagger model file")
    p.add_argument("-f", "--fst", required=True, help="morphology transducer file")
    p.add_argument("-c", "--corpus", required=True, help="gold tagged corpus")
    p.set_defaults(func=cmd_eval)
    return parser


_DOMAIN_ERRORS = (CliError, OSError, fst.FstError, rules.RuleError,
                  lexicon.LexiconError, morph.MorphError, tagger.TaggerError)


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"hindimorph {args.command}: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())

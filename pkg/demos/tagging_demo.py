"""Train the tagger on the bundled mini-corpus and try it out."""

from hindimorph import data_path, morph, rules, tagger
from hindimorph.fst import SymbolTable

corpus = tagger.TaggedCorpus.read(data_path("tagged_mini.txt"))
tokens = sum(len(s) for s in corpus.sentences)
print(f"corpus: {len(corpus.sentences)} sentences, {tokens} tokens,"
      f" tagset {corpus.tagset()}")

model = tagger.train(corpus)  # ~100 epochs of full-batch ascent
print(f"loss: {model.loss_history[0]:.4f} (epoch 0)"
      f" -> {model.loss_history[-1]:.4f} (epoch {len(model.loss_history) - 1})")

grammar = rules.compile_file(data_path("rules", "hindi.mrl"), SymbolTable())
morph_model = morph.MorphModel(grammar=grammar)

# the same surface gets different tags depending on context
for sentence in [
    "मैं घर जा रहा हूँ ।",
    "आम आदमी आम खाता है ।",      # आम: adjective then noun; खाता: verb
    "उसका खाता संख्या एक है ।",   # खाता: noun this time
    "आम आदमी आम बेचता है ।",
]:
    tagged = tagger.tag(model, morph_model, sentence)
    print(" ".join(f"{w}/{t}" for w, t in tagged))

# unseen words fall back on the morphological analyzer
print("candidates for मालन:", tagger.candidate_tags(model, morph_model, "मालन"))
print(" ".join(f"{w}/{t}" for w, t in
               tagger.tag(model, morph_model, "मालन घर जा रही है ।")))

result = tagger.evaluate(model, morph_model, corpus)
print(f"retagging the training data: known {result.known_acc:.4f}"
      f" ({result.known_total} tokens), overall {result.overall_acc:.4f}")

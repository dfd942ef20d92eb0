"""Walk through the synthetic corpus and the two corruption styles.

    python3 demos/01_data_pipeline.py
"""

import numpy as np

from encdec_distill.data import (
    CorpusConfig,
    corrupt_corpus,
    generate_corpus,
    make_batches,
    realized_mask_ratio,
    select_fraction,
)

cfg = CorpusConfig(num_sequences=2000, seq_len=32)
vocab = cfg.vocab
corpus = generate_corpus(cfg)
print(f"{len(corpus)} sequences of {cfg.seq_len} tokens, vocab {cfg.vocab_size} "
      f"(content ids {vocab.first_content}..{vocab.sentinel(0) - 1}, sentinels from {vocab.sentinel(0)})")

# token frequencies should fall off roughly like a power law
counts = np.bincount(np.concatenate(corpus), minlength=cfg.vocab_size)
top = np.sort(counts)[::-1][:5]
print("five most frequent token counts:", top.tolist())

seq = corpus[0]
print("\noriginal      ", seq.tolist())

for style in ("mlm", "denoise"):
    examples = corrupt_corpus(corpus, CorpusConfig(num_sequences=2000, seq_len=32, style=style))
    ex = examples[0]
    print(f"\n[{style}]")
    print("  encoder input ", ex.enc_ids.tolist())
    print("  decoder target", ex.dec_target_ids.tolist())
    print(f"  realized mask ratio over the corpus: "
          f"{realized_mask_ratio(corpus, examples, vocab, style):.4f} (target {cfg.mask_ratio})")

# fractions are prefixes, so a 25% subset sits inside the 50% subset
quarter, half = select_fraction(corpus, 0.25), select_fraction(corpus, 0.5)
print(f"\nsubset sizes: {len(quarter)} and {len(half)}; nested: "
      f"{all(a is b for a, b in zip(quarter, half))}")

batch = make_batches(corrupt_corpus(corpus[:8], cfg), batch_size=8, seed=0)[0]
print("one batch:", batch.enc_ids.shape, "encoder ids,", batch.dec_input_ids.shape, "decoder inputs")

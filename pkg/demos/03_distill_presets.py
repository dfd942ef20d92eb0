"""Pretrain a small teacher, then distill a narrower student under each preset.

Runs in a few minutes on one core. The desk-scale version of this
comparison lives in ``python3 -m encdec_distill.experiments``.

    python3 demos/03_distill_presets.py [--steps 300]
"""

import argparse
import tempfile
from pathlib import Path

from encdec_distill.data import CorpusConfig, corrupt_corpus, generate_corpus
from encdec_distill.diagnostics import spike_score
from encdec_distill.model import ModelConfig
from encdec_distill.objectives import ObjectiveConfig
from encdec_distill.trainer import TrainConfig, distill, pretrain

ap = argparse.ArgumentParser()
ap.add_argument("--steps", type=int, default=300)
args = ap.parse_args()

corpus_cfg = CorpusConfig(num_sequences=4000, seq_len=32)
examples = corrupt_corpus(generate_corpus(corpus_cfg), corpus_cfg)
held = generate_corpus(CorpusConfig(num_sequences=128, seq_len=32), heldout=True)
eval_examples = corrupt_corpus(held, corpus_cfg, seed=1000)

teacher_cfg = ModelConfig(enc_layers=2, dec_layers=2, d_model=64, num_heads=4, ffn_dim=256)
student_cfg = ModelConfig(enc_layers=1, dec_layers=1, d_model=32, num_heads=2, ffn_dim=128)
train = TrainConfig(steps=args.steps, batch_size=8, peak_lr=1e-3, eval_every=args.steps)

out = Path(tempfile.mkdtemp(prefix="presets-"))
teacher = pretrain(teacher_cfg, train, examples, eval_examples, out_dir=out / "teacher")
print(f"teacher ({args.steps} steps): held-out ppl {teacher.final_ppl:.2f}")

print(f"\n{'student arm':12s} {'ppl':>8s} {'spikes':>7s}")
scratch = pretrain(student_cfg, train, examples, eval_examples)
print(f"{'scratch':12s} {scratch.final_ppl:8.2f} {spike_score(scratch.trace):7d}")
# minilm matches decoder relations only. Nothing trains the untied output
# projection, so its perplexity stays near uniform.
for preset in ("mlmkd", "minilm", "implicit", "miniend-d", "miniend-e"):
    objective = ObjectiveConfig.preset(preset, num_relation_heads=4)
    res = distill(teacher.params, teacher_cfg, student_cfg, objective, train, examples, eval_examples,
                  out_dir=out / preset)
    print(f"{preset:12s} {res.final_ppl:8.2f} {spike_score(res.trace):7d}")

print(f"\nrun directories (metrics.jsonl, grad_norms.csv, model.edkd) under {out}")

"""Drive the command-line tool end to end: corpus file, teacher, a
teacher-assistant chain, then a side-by-side comparison.

Equivalent shell session::

    encdec-distill gen-data --config demo.ini --out out/corpus.txt
    encdec-distill pretrain --config demo.ini --out out/teacher
    encdec-distill chain    --config chain.ini --out out/chain
    encdec-distill compare  --runs out/teacher out/chain

    python3 demos/04_chain_cli.py
"""

import tempfile
from pathlib import Path

from encdec_distill.cli import main

out = Path(tempfile.mkdtemp(prefix="chain-"))
base = f"""
[run]
corpus_file = {out}/corpus.txt
eval_sequences = 64

[corpus]
num_sequences = 2000
seq_len = 32

[model]
enc_layers = 2
dec_layers = 2
d_model = 64
num_heads = 4
ffn_dim = 256

[train]
steps = 150
batch_size = 8
peak_lr = 1e-3
eval_every = 50
record_wallclock = false
"""
(out / "demo.ini").write_text(base)
(out / "chain.ini").write_text(base + f"""
[objective]
num_relation_heads = 4

[model.assistant]
d_model = 48
ffn_dim = 192

[model.student]
enc_layers = 1
dec_layers = 1
d_model = 32
num_heads = 2
ffn_dim = 128

[chain]
kind = teacher-assistant

[chain.step0]
teacher = {out}/teacher/model.edkd
student = model:assistant
objective = miniend-d

[chain.step1]
teacher = prev
student = model:student
objective = miniend-d
""")

for argv in (["gen-data", "--config", f"{out}/demo.ini", "--out", f"{out}/corpus.txt"],
             ["pretrain", "--config", f"{out}/demo.ini", "--out", f"{out}/teacher"],
             ["chain", "--config", f"{out}/chain.ini", "--out", f"{out}/chain"],
             ["eval", "--ckpt", f"{out}/chain/step1/model.edkd", "--data", f"{out}/corpus.txt"],
             ["compare", "--runs", f"{out}/teacher", f"{out}/chain", "--window", "20"]):
    print(f"\n$ encdec-distill {' '.join(argv[:1])} ...")
    code = main(argv)
    assert code == 0, f"exit code {code}"

print(f"\nchain provenance (teacher hashes per step) is in {out}/chain/chain.json")

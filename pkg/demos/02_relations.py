"""Relation maps of two differently sized models and the KL between them.

The teacher is 128 wide and the student 64 wide, yet both produce
[B, R, L, L] relation tensors once their heads are redistributed into R
relation heads, so they can be compared directly.

    python3 demos/02_relations.py
"""

from encdec_distill import tensor as T
from encdec_distill.data import CorpusConfig, corrupt_corpus, generate_corpus, make_batches
from encdec_distill.model import ModelConfig, forward, init_random
from encdec_distill.objectives import ObjectiveConfig, compose
from encdec_distill.relations import RelationConfig, cross_relations, decoder_self_relations, encoder_self_relations

teacher_cfg = ModelConfig(enc_layers=4, dec_layers=4, d_model=128, num_heads=4, ffn_dim=512)
student_cfg = ModelConfig(enc_layers=2, dec_layers=2, d_model=64, num_heads=4, ffn_dim=256)
teacher, student = init_random(teacher_cfg, 0, std=0.1), init_random(student_cfg, 1, std=0.1)

corpus = generate_corpus(CorpusConfig(num_sequences=4, seq_len=24))
batch = make_batches(corrupt_corpus(corpus, CorpusConfig(seq_len=24)), batch_size=4, seed=0)[0]

rel_cfg = RelationConfig(num_relation_heads=8)

with T.no_grad():
    t_cap, _ = forward(teacher, teacher_cfg, batch)
    s_cap, _ = forward(student, student_cfg, batch)

    for name, fn in (("decoder self", decoder_self_relations), ("cross", cross_relations),
                     ("encoder self", encoder_self_relations)):
        t_rel = fn(t_cap, teacher, teacher_cfg, rel_cfg)
        s_rel = fn(s_cap, student, student_cfg, rel_cfg)
        shapes = {k: tuple(v.shape) for k, v, _ in t_rel.components()}
        print(f"{name:13s} teacher components {shapes}")
        print(f"{'':13s} student components {({k: tuple(v.shape) for k, v, _ in s_rel.components()})}")

    # the decoder's first relation head at query position 3 only sees keys 0..3
    rel = decoder_self_relations(t_cap, teacher, teacher_cfg, rel_cfg)
    q_map = next(v for k, v, _ in rel.components() if k == "q").data
    print("\ncausal row, example 0, head 0, query 3:", [round(float(x), 3) for x in q_map[0, 0, 3, :6]])

    parts = compose(ObjectiveConfig.preset("miniend-d"), s_cap, t_cap, student, student_cfg,
                    teacher, teacher_cfg)
    print(f"\nminiend-d terms at init: logit {parts.logit.item():.4f}, "
          f"decoder self {parts.dec_self.item():.4f}, cross {parts.cross.item():.4f}")

"""Desk-scale run: train on a synthetic tone-sequence keyword, then draw the DET curve.

Run: python3 demos/05_train_and_evaluate.py [steps]   (600 steps take about 3 minutes)
"""

import sys
import time
from pathlib import Path

from wakeupnet.config import load_run_config
from wakeupnet.evaluation import det_curve, frr_at_faph, score_corpus
from wakeupnet.model import build
from wakeupnet.synthetic import SyntheticKeywordTask
from wakeupnet.trainer import train

cfg = load_run_config(Path(__file__).resolve().parent.parent / "configs" / "desk.ini")
steps = int(sys.argv[1]) if len(sys.argv) > 1 else cfg.train.steps
overrides = {"train": {"steps": str(steps)}}
cfg = load_run_config(Path(__file__).resolve().parent.parent / "configs" / "desk.ini", overrides)

task = SyntheticKeywordTask()
examples = task.training_examples(200, 200, seed=0)
params = build(cfg.model, seed=cfg.train.seed)
start = time.perf_counter()
result = train(params, examples, cfg.train, cfg.loss)
print(f"{steps} steps in {time.perf_counter() - start:.0f} s; "
      f"loss {result.losses[:20].mean():.4f} -> {result.losses[-20:].mean():.4f}")

corpus = task.eval_corpus(100, 0.5, seed=1)
curve = det_curve(score_corpus(corpus, params), cfg.detector)
print("monotone DET:", curve.is_monotone())
for target in (10.0, 0.5, 0.0):
    hit = frr_at_faph(curve, target)
    print(f"FRR at {target:g} FApH: {hit.frr:.3f} (threshold {hit.threshold:g})")
for point in curve.points[::14]:
    print(f"  s={point.threshold:.2f}  FApH={point.faph:7.2f}  FRR={point.frr:.3f}")

"""The command-line workflow end to end on a freshly rendered synthetic dataset.

Run: python3 demos/06_cli_workflow.py
Writes WAVs and manifests to run/data, then trains, evaluates and detects.
"""

import subprocess
import sys
from pathlib import Path

from wakeupnet.synthetic import SyntheticKeywordTask, write_dataset

root = Path(__file__).resolve().parent.parent
data = root / "run" / "data"
task = SyntheticKeywordTask()
write_dataset(data, task, 200, 200, seed=0, name="train.csv")
write_dataset(data, task, 50, 60, seed=1, negative_seconds=16.0, name="eval.csv")
print("dataset written to", data, flush=True)


def cli(*args):
    print("$ wakeupnet", " ".join(args), flush=True)
    subprocess.run([sys.executable, "-m", "wakeupnet", *args], check=True)


config = str(root / "configs" / "desk.ini")
cli("params", "--compare-vanilla")
cli("train", "--config", config, "--progress", "100")
cli("eval", "--config", config, "--checkpoint", str(root / "run" / "model.ckpt"))
cli("detect", "--checkpoint", str(root / "run" / "model.ckpt"), str(data / "eval_pos_0000.wav"))

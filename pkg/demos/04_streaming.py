"""Chunked streaming inference reproduces whole-clip inference with bounded state.

Run: python3 demos/04_streaming.py
"""

import numpy as np

from wakeupnet.model import MobileTransformerConfig, build, predict
from wakeupnet.streaming import init_state, stream_step

params = build(MobileTransformerConfig(), seed=0)
rng = np.random.default_rng(1)
frames = rng.standard_normal((1000, 40)).astype(np.float32)  # 10 s of features

batch = predict(params, frames)
state = init_state(params)
pieces, pos = [], 0
while pos < len(frames):
    chunk = frames[pos : pos + int(rng.integers(1, 25))]
    pieces.append(stream_step(state, chunk, params, start_frame=pos)[1])
    pos += len(chunk)
streamed = np.concatenate(pieces)
print(f"{len(batch)} posteriors; max |streamed - batch| = {np.max(np.abs(streamed - batch)):.2e}")
print("state sizes after 10 s:", state.buffer_sizes())

# Perturbing the future never changes the past.
moved = frames.copy()
moved[500:] += rng.standard_normal(moved[500:].shape)
print("first 125 posteriors unchanged:", np.array_equal(predict(params, moved)[:125], batch[:125]))

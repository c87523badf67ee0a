"""Reverse-mode autodiff on a tape, checked against central differences.

Run: python3 demos/01_autodiff.py
"""

import numpy as np

from wakeupnet import tensor as tf
from wakeupnet.tensor import Tape, Tensor

rng = np.random.default_rng(0)

# A small two-layer network: sigmoid(relu(x W1) W2), squared error.
x = Tensor(rng.standard_normal((5, 3)))
w1 = Tensor(rng.standard_normal((3, 4)), requires_grad=True)
w2 = Tensor(rng.standard_normal((4, 1)), requires_grad=True)
target = rng.uniform(size=(5, 1))


def loss_of(a, b):
    pred = tf.sigmoid(tf.relu(x @ a) @ b)
    return ((pred - target) ** 2).mean()


with Tape() as tape:
    loss = loss_of(w1, w2)
tape.backward(loss)
print(f"loss {float(loss.data):.6f}; tape recorded {len(tape.nodes)} ops")
print("backward visited:", [tape.nodes[i].name for i in tape.visited])

# Central differences on every entry of w1.
numeric = np.zeros_like(w1.data)
h = 1e-6
for idx in np.ndindex(w1.shape):
    orig = w1.data[idx]
    w1.data[idx] = orig + h
    hi = float(loss_of(w1, w2).data)
    w1.data[idx] = orig - h
    lo = float(loss_of(w1, w2).data)
    w1.data[idx] = orig
    numeric[idx] = (hi - lo) / (2 * h)
print(f"max |tape - numeric| for W1: {np.max(np.abs(w1.grad - numeric)):.2e}")

# Causal convolution: padding only on the past side keeps outputs causal.
signal = Tensor(rng.standard_normal((1, 2, 10)))
kernel = Tensor(rng.standard_normal((2, 1, 3)))
out = tf.conv1d(signal, kernel, padding=(2, 0), groups=2)
print("depthwise causal conv output shape:", out.shape)

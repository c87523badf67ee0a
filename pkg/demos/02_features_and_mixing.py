"""Log-mel features, SNR-controlled noise mixing and frame-exact streaming extraction.

Run: python3 demos/02_features_and_mixing.py
"""

import numpy as np

from wakeupnet.audio import AudioClip, StreamingFeatureExtractor, extract_features, mix_at_snr, rms
from wakeupnet.synthetic import SyntheticKeywordTask, coloured_noise

rng = np.random.default_rng(0)
task = SyntheticKeywordTask()
clip, end_s = task.positive_clip(rng)
feats = extract_features(clip)
print(f"{clip.duration_s:.2f} s clip -> {feats.num_frames} frames x {feats.frames.shape[1]} log-mel bands")
print(f"keyword ends at {end_s:.3f} s (frame {round(end_s * 100)})")

speech = AudioClip(0.5 * np.sin(2 * np.pi * 700 * np.arange(16000) / 16000))
noise = AudioClip(coloured_noise(rng, 32000))
for snr in (0, 5, 10, 15, 20):
    mixed, scaled = mix_at_snr(speech, noise, snr, rng=rng, return_noise=True)
    measured = 20 * np.log10(rms(mixed.samples - scaled) / rms(scaled))
    print(f"requested {snr:>2} dB, measured {measured:.6f} dB")

stream = StreamingFeatureExtractor()
pieces = [stream.push(clip.samples[i : i + 1000]) for i in range(0, clip.num_samples, 1000)]
same = np.array_equal(np.concatenate(pieces), feats.frames)
print("streaming extraction identical to batch:", same)

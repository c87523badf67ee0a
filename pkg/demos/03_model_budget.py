"""Where the parameters go, and what each compression technique saves.

Run: python3 demos/03_model_budget.py
"""

import dataclasses

from wakeupnet.model import MobileTransformerConfig, SeparableConv1d, count_parameters

base = MobileTransformerConfig()
variants = {
    "compact (default)": base,
    "no attention sharing": dataclasses.replace(base, share_attention=False),
    "no low-rank Q/K/V": dataclasses.replace(base, use_lrd=False),
    "dense FFN": dataclasses.replace(base, use_group_separable=False),
    "all disabled": base.vanilla(),
}
print(f"{'variant':<22}{'attention':>10}{'ffn':>9}{'total':>10}")
for name, cfg in variants.items():
    c = count_parameters(cfg)
    print(f"{name:<22}{c.attention:>10,}{sum(c.ffn):>9,}{c.total:>10,}")

print("\nattention with sharing, by depth:")
for n in (1, 3, 6):
    print(f"  N={n}: {count_parameters(dataclasses.replace(base, num_blocks=n)).attention:,}")

print("\ndepthwise-separable 1D conv vs dense, kernel 3, 64 input channels:")
for c_out in (64, 128, 256):
    print(f"  C_o={c_out}: ratio {SeparableConv1d(64, c_out, 3).ratio_to_dense()}")

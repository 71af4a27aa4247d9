"""
Weights and the relative Hasse diagram
======================================

Weights of so(2k+4) are kept as doubled integers so that half-integral
coordinates stay exact.
"""

# %%
from kdirac.weights import ParabolicMarking, Weight, delta, is_dominant, dominance_violations
from kdirac.hasse import build_hasse, inversion_set

k = 3
lam = Weight.from_half(k, ["-3/2", "-3/2", "-3/2", "-3/2", "3/2"])
print(lam, "  half:", lam.format(half=True))
print("delta =", delta(k).format(half=True))

# %%
# the seed is Q-dominant but not P-dominant
for m in ParabolicMarking:
    print(m.name, is_dominant(lam, m), dominance_violations(lam, m))

# %%
# vertices (s, t) with t <= s <= k sit at row s+t and column s-t
h = build_hasse(k)
for i, row in enumerate(h.rows()):
    print(f"row {i}:", "  ".join(v.label for v in row))

# %%
# every path to a vertex uses the same set of roots
v = h.sink
paths = list(h.paths_to(v))
print(len(paths), "paths to", v.label)
print(sorted(r.name for r in inversion_set(v, k)))
print(all({e.root for e in p} == inversion_set(v, k) for p in paths))

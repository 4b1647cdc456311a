"""Locating zeros on the critical line.

Z(t) = exp(i theta(t)) zeta(1/2 + it) is real for real t, so zeros of zeta
on the critical line are sign changes of an ordinary real function.  Gram
points slice the line into intervals that usually hold one zero each; the
smooth counting formula audits that none slipped through.
"""

import tempfile
from pathlib import Path

import numpy as np

from rgas import zerofinder as zf

print("=== the rotation that makes zeta real ===")
for t in (20.0, 50.0, 120.0):
    z = zf.hardy_z(t)
    theta = zf.riemann_siegel_theta(t)
    print(f"t = {t:6}: theta = {theta:12.6f}, Z(t) = {z:+.8f}")

print("\n=== Gram points ===")
for n in (-1, 0, 1, 2, 3):
    print(f"g_{n:-2d} = {zf.gram_point(n):.6f}")
print("(theta(g_n) = n pi; the first zero lives between g_-1 and g_0)")

print("\n=== finding the first 30 zeros ===")
table = zf.find_zeros(30)
print("k   gamma_k        Z just below/above")
for k in (0, 1, 2, 28, 29):
    g = table.gammas[k]
    below, above = zf.hardy_z(g - 1e-6), zf.hardy_z(g + 1e-6)
    print(f"{k + 1:2d}  {g:.9f}   {below:+.2e} / {above:+.2e}")

print("\n=== counting audit ===")
print("T      found   smooth estimate")
for t in (50.0, 100.0):
    print(f"{t:5}  {table.count_below(t):5d}   {zf.zero_count_estimate(t):8.3f}")

print("\n=== persistence round trip ===")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "zeros.txt"
    zf.save_table(table, path)
    loaded = zf.load_table(path)
    print(f"first lines of {path.name}:")
    for line in path.read_text().splitlines()[:4]:
        print(f"  {line}")
    print(f"round trip exact: {np.array_equal(loaded.gammas, table.gammas)}")

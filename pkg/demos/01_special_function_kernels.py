"""Tour of the special-function kernels.

Everything downstream (zero hunting, superzeta sums, ensemble averages)
rests on these self-contained double-precision kernels, so we start by
poking them against classical values.
"""

import cmath
import math

from rgas import numkernel as nk

print("=== Riemann zeta by Euler-Maclaurin summation ===")
print(f"zeta(2)   = {nk.zeta(2.0).real:.15f}   (pi^2/6 = {math.pi**2 / 6:.15f})")
print(f"zeta(3)   = {nk.zeta(3.0).real:.15f}")
print(f"zeta(0)   = {nk.zeta(0.0).real:+.15f}  (continuation forces -1/2)")
print(f"zeta(-1)  = {nk.zeta(-1.0).real:+.15f}  (reflection branch: -1/12)")
print(f"zeta(1/2) = {nk.zeta(0.5).real:+.15f}  (negative on the whole strip)")

gamma_1 = 14.134725141734693
print(f"\n|zeta(1/2 + i*14.1347...)| = {abs(nk.zeta(complex(0.5, gamma_1))):.2e}")
print("the first nontrivial zero sits on the critical line, as advertised")

print("\n=== the functional equation ties s to 1-s ===")
for s in (complex(0.3, 2.0), complex(0.8, -11.0)):
    left = cmath.exp(-s / 2 * math.log(math.pi) + nk.log_gamma(s / 2)) * nk.zeta(s)
    right = cmath.exp(
        -(1 - s) / 2 * math.log(math.pi) + nk.log_gamma((1 - s) / 2)
    ) * nk.zeta(1 - s)
    print(f"s = {s}:  residual = {abs(left - right):.2e}")

print("\n=== principal-branch log of zeta ===")
print("zeta < 0 on (0, 1), so the log picks up a branch phase of +pi there:")
for s in (0.25, 0.5, 0.75, 2.0):
    v = nk.log_zeta_principal(s)
    print(f"  log zeta({s:4}) = {v.real:+.6f} {v.imag:+.6f}i")

print("\n=== digamma, log-gamma, exponential integral ===")
print(f"psi(1)  = {nk.digamma(1.0):+.12f}   (minus the Euler constant)")
print(f"psi(2)  = {nk.digamma(2.0):+.12f}   (recurrence adds 1/x)")
print(f"ln G(5) = {nk.log_gamma(5.0).real:.12f}   (ln 24 = {math.log(24):.12f})")
print(f"Ei(1)   = {nk.exp_integral_ei(1.0):.12f}")
print(f"Ei(1/4) = {nk.exp_integral_ei(0.25):+.12f}")

print("\n=== Hurwitz zeta and the finite part at its pole ===")
print(f"zeta(2, 1/2) = {nk.hurwitz_zeta(2.0, 0.5).real:.12f}   (pi^2/2)")
print("lim_{z->1} (zeta(z,q) - 1/(z-1)) = -psi(q):")
for q in (1.0, 0.5, 2.0):
    print(f"  q = {q}: finite part = {nk.hurwitz_finite_part(q):+.12f}, -psi(q) = {-nk.digamma(q):+.12f}")

"""The arithmetic gas: primes as single-particle modes.

A boson gas whose mode energies are omega * ln(p) over the primes p has
canonical partition function zeta(beta omega); unique factorization is the
combinatorial identity behind it, and we can watch it happen by brute-force
enumeration of the occupation states.
"""

import math

from rgas import arith
from rgas import numkernel as nk

print("=== enumerating occupation states ===")
cutoff = math.log(12.0)
states = arith.enumerate_occupation_states(cutoff)
primes = arith.sieve(12).primes
print(f"states with energy <= ln 12 ({len(states)} of them):")
for st in states:
    occ = " * ".join(f"{primes[i]}^{c}" for i, c in st.occupations) or "vacuum"
    print(f"  value {st.value:3d} = {occ}")
print("one state per integer: unique factorization at work")

beta_omega = 2.0
total, remainder = arith.state_enumeration_partition(beta_omega, math.log(1e4))
print(f"\nbrute-force Z at beta*omega = 2 with 10^4 states: {total:.9f}")
print(f"zeta(2)                                          : {nk.zeta(2.0).real:.9f}")
print(f"(remainder bound {remainder:.1e})")

print("\n=== Euler product vs Dirichlet series vs the kernel ===")
table = arith.sieve(1000)
for s in (1.5, 2.0, 3.0):
    prod, bound = arith.euler_product_bosonic(s, table)
    z = nk.zeta(complex(s)).real
    print(f"s = {s}: product over p <= 1000 = {prod:.10f}, zeta = {z:.10f}, tail bound {bound:.1e}")

print("\n=== bosons, fermions, parafermions ===")
x = 2.0
print(f"Z_boson(2)      = zeta(2)          = {arith.partition_bosonic(x):.10f}")
print(f"Z_fermion(2)    = zeta(2)/zeta(4)  = {arith.partition_fermionic(x):.10f}")
print(f"Z_para(2, r=3)  = zeta(2)/zeta(6)  = {arith.partition_parafermion(x, 3):.10f}")
print("(r = 2 parafermions are ordinary fermions)")

print("\n=== the boson/fermion mixture identity ===")
print("Z_F(x) Z_B(2x) = Z_B(x), with Z_F built independently from the")
print("Moebius series so the check cannot be circular:")
for x, n in ((2.0, 100_000), (5.0, 10_000)):
    r = arith.mixture_identity_residual(x, n)
    print(f"  x = {x}, {n} Moebius terms: residual = {r:.2e}")

print("\n=== the Hagedorn wall ===")
print("zeta(beta omega) has a pole at beta omega = 1: the gas cannot be")
print("heated past it.  Partition values while approaching from above:")
for bo in (2.0, 1.5, 1.1, 1.01):
    print(f"  beta*omega = {bo:5}: Z_B = {arith.partition_bosonic(bo):12.4f}")
try:
    arith.partition_bosonic(1.0)
except Exception as exc:
    print(f"  beta*omega = 1.0  : {type(exc).__name__}: {exc}")

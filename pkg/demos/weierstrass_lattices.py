"""
Two Weierstrass lattices per modulus
====================================

Each modulus ``kappa`` gives a small lattice (invariants g2, g3) and a big one
(G2, G3). Both are rectangular; their half-periods come from the invariants
alone and agree with the hypergeometric formulas.
"""
import math

from sig3 import (Modulus, Sig3System, big_invariants, discriminant, periods_big, periods_small,
                  small_invariants, wp_and_prime)

m = Modulus.from_kappa(0.6)
sys_ = Sig3System.from_modulus(m)

for label, inv in (("small", small_invariants(m)), ("big", big_invariants(m))):
    print(f"{label:5s} g2 = {inv.g2:+.12f}  g3 = {inv.g3:+.12f}  discriminant = {discriminant(inv):.6e}")

omega, omega_p = periods_small(m)
Omega, Omega_p = periods_big(m)
print("\nhalf-period      from invariants         hypergeometric")
print(f"omega            {sys_.omega:.15f}   {omega:.15f}")
print(f"omega' / i       {sys_.omega_prime.imag:.15f}   {omega_p.imag:.15f}")
print(f"Omega            {sys_.Omega:.15f}   {Omega:.15f}")
print(f"Omega' / i       {sys_.Omega_prime.imag:.15f}   {Omega_p.imag:.15f}")
print(f"omega / Omega = {sys_.omega / sys_.Omega:.15f}  (sqrt 6 = {math.sqrt(6):.15f})")

# p satisfies p'^2 = 4p^3 - g2 p - g3 anywhere off the lattice
z = 0.37 * sys_.omega + 0.61 * sys_.omega_prime
p, dp = wp_and_prime(sys_.small, z)
g2, g3 = sys_.small.inv.g2, sys_.small.inv.g3
print(f"\np(z) = {p:.12f}")
print(f"|p'^2 - (4p^3 - g2 p - g3)| = {abs(dp * dp - (4 * p ** 3 - g2 * p - g3)):.2e}")

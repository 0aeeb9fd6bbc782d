"""From a lattice basis to the toric ideal.

The kernel of the configuration gives a lattice basis ideal. Saturating it
at every variable yields the toric ideal; a greedy pass then trims the
generators down to a minimal set.
"""

from toricirc import Configuration, buchberger, enumerate_circuits, ideal_membership, minimal_binomial_generators
from toricirc.groebner import lattice_basis_ideal, toric_ideal_generators

C = Configuration(((3, 0), (2, 1), (1, 2), (0, 3)))

start = lattice_basis_ideal(C)
print("lattice basis ideal:", [g.format() for g in start])

gens = toric_ideal_generators(C)
print("after saturation:   ", [g.format() for g in gens])

mins = minimal_binomial_generators(C)
print("minimal generators: ", [g.format() for g in mins])

# The lattice basis ideal is strictly smaller: T1*T4 - T2*T3 is missing.
G0 = buchberger(start)
for g in mins:
    print(f"  {g.format():<16} in lattice basis ideal: {ideal_membership(g, G0)}")

# A cubic in the toric ideal reduces to zero modulo the quadrics.
G = buchberger(mins)
cubic = next(c.binomial for c in enumerate_circuits(C) if c.binomial.degree == 3)
print(f"\n{cubic.format()} lies in I_A: {ideal_membership(cubic, G)}")
print("  both terms map to", C.image(cubic.plus), "and", C.image(cubic.minus))

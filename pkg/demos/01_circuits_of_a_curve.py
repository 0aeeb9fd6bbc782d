"""Circuits of the twisted cubic and the harmony search.

The twisted cubic is parametrized by the monomials s^3, s^2 t, s t^2, t^3,
so its configuration has columns (3,0), (2,1), (1,2), (0,3).
"""

from toricirc import Configuration, enumerate_circuits, harmonious_circuit, is_circuit
from toricirc.circuits import Binomial
from toricirc.classify import has_square_free_term, is_balanced

C = Configuration(((3, 0), (2, 1), (1, 2), (0, 3)))

print("Circuits, in canonical order:")
for c in enumerate_circuits(C):
    b = c.binomial
    print(f"  {str(c.vector):<16} {b.format():<18} balanced={is_balanced(b)}  square-free term={has_square_free_term(b)}")

# (1,-1,-1,1) is in the kernel but its support {1,2,3,4} contains the support
# of a smaller kernel vector, so it is not a circuit.
alpha = (1, -1, -1, 1)
print()
print(f"T1*T4 - T2*T3 is a circuit: {is_circuit(C, Binomial.from_vector(alpha))}")

# Every kernel vector sits over some circuit with matching signs.
g = harmonious_circuit(C, alpha)
print(f"circuit in harmony with {alpha}: {g.vector}")
print("  signs agree entrywise:", all(x * y >= 0 for x, y in zip(g.vector, alpha)))

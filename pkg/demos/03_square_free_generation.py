"""When is a toric ideal generated by circuits with a square-free term?

For homogeneous normal configurations three things coincide: generation by
circuits, generation by square-free-term circuits, and every unbalanced
circuit having a connector inside the square-free circuit ideal. The twisted
cubic is normal and all three fail; the 4-cycle is normal and all three hold.
"""

from toricirc import check_generation_by_circuits, enumerate_circuits, find_connector, is_balanced
from toricirc.corpus import CONFIGURATIONS

for name in ("twisted_cubic", "c4", "rational_normal_quartic"):
    C = CONFIGURATIONS[name]
    r = check_generation_by_circuits(C)
    D, normal = r.normal_up_to
    print(f"{name}: normal up to degree {D}: {normal}")
    print(f"  by circuits: {r.cond_a}   by square-free circuits: {r.cond_b}   connectors: {r.cond_c}")
    for w in r.witnesses:
        print(f"  not reachable from square-free circuits: {w.format()}")

# The unbalanced cubic T1^2*T4 - T2^3 has the connector T1*T4 - T2*T3, but
# that quadric is itself outside the square-free circuit ideal.
TC = CONFIGURATIONS["twisted_cubic"]
print()
for c in enumerate_circuits(TC):
    if is_balanced(c.binomial):
        continue
    cert = find_connector(TC, c)
    print(f"{c.binomial.format():<16} connector {cert.connector.format():<14} member: {cert.membership_witness}")

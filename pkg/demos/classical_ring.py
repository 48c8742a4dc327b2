#!/usr/bin/env python3
"""Walk through the classical cohomology ring of OG(5,10)."""

from ogcalc import BASIS, POINT, mult, poincare_dual, triple

print("Schubert basis (16 classes, strict partitions with parts <= 4):")
print("  " + "  ".join("".join(map(str, lam)) or "0" for lam in BASIS))

# Poincare duality pairs each class with the complement of its part set
print("\nduals:")
for lam in [(1,), (2,), (4, 2), (4, 3, 2, 1)]:
    print(f"  {lam} <-> {poincare_dual(lam)}")

print("\nsome products:")
for lam, mu in [((1,), (1,)), ((2,), (2, 1)), ((3, 1), (3, 2))]:
    terms = mult(lam, mu)
    shown = " + ".join(
        (f"{c}*" if c != 1 else "") + "tau" + "".join(map(str, nu))
        for nu, c in sorted(terms.items())
    )
    print(f"  tau{''.join(map(str, lam))} * tau{''.join(map(str, mu))} = {shown}")

# the triple intersection number is the point-class coefficient of a
# triple product; pairing a class against its dual gives exactly 1
print("\nduality pairing (tau_lam . tau_dual . 1):")
for lam in [(2,), (3, 1), (4, 3, 2, 1)]:
    print(f"  {lam}: {triple(lam, poincare_dual(lam), ())}")

print(f"\npoint class {POINT}: self-pairing", triple(POINT, (), ()))

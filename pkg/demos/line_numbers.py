#!/usr/bin/env python3
"""Count lines on OG(5,10) through the divided-difference formula."""

from ogcalc import enumerate_line_numbers, line_invariant

# the flagship count: lines meeting 15 general translates of X_2
v = line_invariant([(2,)] * 15)
print("I_1(tau_2 x15) =", v)

print("I_1(tau_431, tau_432) =", line_invariant([(4, 3, 1), (4, 3, 2)]))
print(
    "I_1(tau_2, tau_3, tau_421, tau_421) =",
    line_invariant([(2,), (3,), (4, 2, 1), (4, 2, 1)]),
)

# full enumeration over unordered class multisets; weights must sum to 17
census = enumerate_line_numbers()
nonzero = sum(1 for v in census.values() if v)
print(f"\ncensus: {len(census)} multisets, {nonzero} nonzero")
top = sorted(census.items(), key=lambda kv: -kv[1])[:5]
for key, val in top:
    print("  " + " ".join("".join(map(str, lam)) for lam in key), "=", val)

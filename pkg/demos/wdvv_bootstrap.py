#!/usr/bin/env python3
"""Bootstrap higher-degree Gromov-Witten invariants from line numbers."""

from ogcalc import POINT, Solver

solver = Solver()  # seeds every line invariant up front

# a conic number, derived through two different relation instances
classes = [(2,), (4, 2, 1), (4, 3, 1), POINT]
for desc, value in solver.derivations(2, classes, limit=4):
    print(f"I_2(2,421,431,4321) = {value}   via {desc}")

print("I_3(421,431,4321,4321) =", solver.value(3, [(4, 2, 1), (4, 3, 1), POINT, POINT]))
print("I_4(43,432,432,432,4321) =", solver.value(4, [(4, 3), (4, 3, 2), (4, 3, 2), (4, 3, 2), POINT]))

# the divisor axiom peels off tau_1 factors as powers of d
v = solver.value(2, [(2,), (4, 2, 1), (4, 3, 1), POINT])
w = solver.value(2, [(1,), (1,), (2,), (4, 2, 1), (4, 3, 1), POINT])
print("divisor axiom:", w, "==", 4 * v)

print("rational point curves through 7 general points:", solver.value(7, [POINT] * 7))
print("cache records:", len(solver.table))

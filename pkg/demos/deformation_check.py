#!/usr/bin/env python3
"""First-order deformation check for the bundled genus-7 curve fixture."""

from ogcalc.deformation import DeformationFixture, check_unramified, first_order_system
from ogcalc.fixtures import data_path

fix = DeformationFixture.load(str(data_path("deformation_fixture.json")))
print("marked points:", ", ".join(str(r) for r in fix.points))

system = first_order_system(fix)
print(f"linear system: {len(system.matrix)} equations, {len(system.unknowns)} unknowns")

verdict = check_unramified(fix)
print("unramified:", verdict.unramified)
print("kernel dimension:", verdict.kernel_dim)
for vec in verdict.kernel:
    print("  " + "  ".join(f"{u}={c}" for u, c in zip(verdict.unknowns, vec)))

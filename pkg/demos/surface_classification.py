"""Kodaira dimension from numerical invariants, and a look at bielliptic groups.

Run with ``python3 demos/surface_classification.py``.
"""
from birat_surf.classifier import SurfaceInvariants, classify
from birat_surf.errors import InconsistentRecord
from birat_surf.fibration import BDF_CASES, bdf_minimal_power

records = {
    "plane": dict(q=0, p_g=0, plurigenera={12: 0}),
    "ruled over a genus 2 curve": dict(q=2, p_g=0, plurigenera={12: 0}),
    "K3": dict(q=0, p_g=1, chi=2, K2=0, e=24, plurigenera={12: 1}, minimal=True),
    "Enriques": dict(q=0, p_g=0, chi=1, K2=0, e=12, plurigenera={12: 1}, minimal=True),
    "abelian": dict(q=2, p_g=1, plurigenera={12: 1}),
    "bielliptic": dict(q=1, p_g=0, plurigenera={12: 1}),
    "elliptic, kappa 1": dict(q=0, p_g=1, K2=0, plurigenera={12: 3}, minimal=True),
    "quintic surface": dict(q=0, p_g=4, chi=5, K2=5, e=55, plurigenera={12: 335}, minimal=True),
    "p_g = q = 1 with P_12 = 1": dict(q=1, p_g=1, plurigenera={12: 1}),
}
for name, data in records.items():
    try:
        print(f"{name:>28}: {classify(SurfaceInvariants(**data)).to_json()}")
    except InconsistentRecord as exc:
        print(f"{name:>28}: rejected ({exc})")

print("\nbielliptic surfaces: order of K")
for case in BDF_CASES:
    print(f"    ({case.case}) G = {case.describe():<8} nK trivial for n = {bdf_minimal_power(case)}")

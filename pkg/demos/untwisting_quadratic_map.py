"""Untwist the standard quadratic map and factor a few Cremona maps.

Run with ``python3 demos/untwisting_quadratic_map.py``.
"""
from birat_surf.cremona import HomaloidalNet, de_jonquieres
from birat_surf.factorization import decompose_quadratic, factor, round_trip_ok
from birat_surf.cremona import QuadraticMap
from birat_surf.lattice import DivisorClass
from birat_surf.points import PointConfig
from birat_surf.sarkisov import run_sarkisov

# the net of conics through three general points
quad = DivisorClass(2, (1, 1, 1))
trace = run_sarkisov(quad)
print("Sarkisov links for", quad)
for link in trace.links:
    print("   ", link.describe())

# a cubic De Jonquieres map: one double point and four simple points
dj = de_jonquieres(3)
print("\nSarkisov links for", dj.cls)
for link in run_sarkisov(dj).links:
    print("   ", link.describe())

# Noether-Castelnuovo descent on a quintic with six double points
net = HomaloidalNet(DivisorClass(5, (2,) * 6), PointConfig.general(6))
ft = factor(net)
print("\nfactoring", net.cls, "starting simplicity", ft.initial_simplicity)
for i, step in enumerate(ft.steps, 1):
    print(f"    {i}: case {step.case} at {step.qmap.describe()} -> {step.net.cls}"
          f"  simplicity {step.simplicity}")
print("    closing map", ft.closing.describe() if ft.closing else None)
print("    composed action returns the lines:", round_trip_ok(ft))

# quadratic maps with infinitely near base points as products of type I maps
for config in (PointConfig.from_json({"points": [{"id": 0}, {"id": 1, "parent": 0}, {"id": 2}]}),
               PointConfig.chain(3)):
    q = QuadraticMap.on(config, config.ids)
    dec = decompose_quadratic(q, config)
    print(f"\ntype {q.kind.value} map: {len(dec.steps)} type I factors at slots {list(dec.steps)}")

"""(-1)-classes on blow-ups of the plane and a few cones of curves.

Run with ``python3 demos/minus_one_curves.py``.
"""
from collections import Counter

from birat_surf.cone import (collinear_blowup_cone, enumerate_minus_one_classes,
                             hirzebruch_cone, reduces_to_exceptional)
from birat_surf.cremona import orbit_unbounded
from birat_surf.lattice import DivisorClass

for n in range(1, 9):
    classes = enumerate_minus_one_classes(n)
    by_degree = Counter(c.degree for c in classes)
    assert all(reduces_to_exceptional(c) for c in classes)
    print(f"n = {n}: {len(classes):>3} classes, by degree {dict(sorted(by_degree.items()))}")

# nine points: no finite list any more
print("\nE_1 on nine points has an unbounded orbit:",
      orbit_unbounded(DivisorClass.exceptional(0, 9))[0])
print("the pencil of cubics (3; 1^9) does not:", orbit_unbounded(DivisorClass(3, (1,) * 9))[0])

for n in (0, 1, 2):
    c = hirzebruch_cone(n)
    print(f"\nF_{n}: rays {c.labels} with squares {c.self_intersections()}")

rep = collinear_blowup_cone()
print("\nthree collinear points blown up:")
print("    (-K)^2 =", rep.anticanonical_square, " -K on the rays:", rep.minus_k_degrees)
print("    classes with C.D in {0, 1} and square zero:",
      ", ".join(map(str, rep.square_zero_solutions)))
print("    all four rays extremal:", all(rep.extremal))

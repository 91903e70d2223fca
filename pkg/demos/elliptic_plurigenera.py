"""Plurigenera of elliptic fibrations over the line with three multiple fibres.

Run with ``python3 demos/elliptic_plurigenera.py``.
"""
from birat_surf.fibration import (BranchData, EllipticFibration, FibreMatrix,
                                  canonical_formula_summary, plurigenus_table,
                                  riemann_hurwitz_genus, zariski_check)

for mults, order in (((2, 6, 6), 12), ((2, 5, 10), 10)):
    f = EllipticFibration(0, 0, mults, exact_for_isotrivial=True)
    table = plurigenus_table(f, 13)
    summary = canonical_formula_summary(f)
    cover = riemann_hurwitz_genus(BranchData(order, 0, mults))
    print(f"multiple fibres {mults}")
    print("    P_n for n = 1..13:", [table[n] for n in range(1, 14)])
    print(f"    {summary.pullback_power}K pulls back a bundle of degree "
          f"{summary.pullback_degree} from the base")
    print(f"    Galois cover of the line of order {order}: genus {cover}")

# a fibre of type I_3: a triangle of (-2)-curves
tri = FibreMatrix([[-2, 1, 1], [1, -2, 1], [1, 1, -2]], [1, 1, 1])
print("\ntriangle fibre:", zariski_check(tri))
# a fibre of type I_0^*: four (-2)-curves on a central (-2)-curve of weight 2
d4 = FibreMatrix([[-2, 0, 0, 0, 1], [0, -2, 0, 0, 1], [0, 0, -2, 0, 1], [0, 0, 0, -2, 1],
                  [1, 1, 1, 1, -2]], [1, 1, 1, 1, 2])
print("D4 fibre:", zariski_check(d4))

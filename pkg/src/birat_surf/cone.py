"""Cones of curves for small worked examples.

Rays are integer coordinate vectors together with the Gram matrix of the
basis they are written in.  For blow-ups of the plane the basis is
(L, E_1, .., E_n) written as DivisorClass coordinates (d; m).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from typing import Sequence


from .cremona import apply_moves, reduce_to_exceptional
from .errors import BiratError
from .lattice import DivisorClass, canonical_class, intersect, numerical_record


@dataclass(frozen=True)
class ConeDescription:
    rays: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    polyhedral: bool = True

    def pair(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(a[i] * self.gram[i][j] * b[j]
                   for i in range(len(a)) for j in range(len(b)))

    def self_intersections(self) -> tuple[int, ...]:
        return tuple(self.pair(r, r) for r in self.rays)

    def extremal(self) -> bool:
        """No ray is a non-negative combination of the others."""
        return all(not in_cone(r, [s for s in self.rays if s != r]) for r in self.rays)


def _blowup_gram(n: int) -> tuple[tuple[int, ...], ...]:
    # on (d, m) coordinates the form is d d' - sum m m'
    return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n + 1))
                 for i in range(n + 1))


def feasible_point(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """A point x >= 0 with a x = b, or None; exact phase-one simplex (Bland's rule)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    # tableau rows: [coefficients | artificials | rhs], every rhs made non-negative
    tab = []
    for i in range(rows):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * x) for x in a[i]]
        row += [Fraction(int(j == i)) for j in range(rows)]
        row.append(Fraction(sign * b[i]))
        tab.append(row)
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    while True:
        # reduced costs of the phase-one objective (sum of artificials)
        cost = [Fraction(int(j >= cols))
                - sum(tab[i][j] for i in range(rows) if basis[i] >= cols)
                for j in range(width)]
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i)
                  for i in range(rows) if tab[i][enter] > 0]
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        basis[leave] = enter
    x = [Fraction(0)] * width
    for i, bj in enumerate(basis):
        x[bj] = tab[i][-1]
    if any(x[j] != 0 for j in range(cols, width)):
        return None
    point = x[:cols]
    assert all(sum(a[i][j] * point[j] for j in range(cols)) == b[i] for i in range(rows))
    return point


def in_cone(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Exact test: v = sum c_i g_i with c_i >= 0."""
    if not any(v):
        return True
    if not gens:
        return False
    a = [[g[k] for g in gens] for k in range(len(v))]
    return feasible_point(a, list(v)) is not None


def _is_positive_multiple(a: Sequence[int], b: Sequence[int]) -> bool:
    """a = t b with t > 0."""
    ratio = None
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
        if y:
            r = Fraction(x, y)
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    return ratio is not None


def neg_curve_is_extremal(c, sample, gram=None) -> bool:
    """A curve with C^2 < 0 is not in the cone spanned by the other sample classes."""
    if isinstance(c, DivisorClass):
        vec = c.vector()
        square = intersect(c, c)
        others = [s.vector() for s in sample]
    else:
        if gram is None:
            raise BiratError("coordinate vectors need a Gram matrix")
        vec = tuple(c)
        square = sum(vec[i] * gram[i][j] * vec[j]
                     for i in range(len(vec)) for j in range(len(vec)))
        others = [tuple(s) for s in sample]
    if square >= 0:
        raise BiratError(f"C^2 = {square} is not negative")
    others = [s for s in others if not _is_positive_multiple(s, vec)]
    return not in_cone(vec, others)


def hirzebruch_cone(n: int) -> ConeDescription:
    """NE(F_n) in the basis (f, e): f^2 = 0, f.e = 1, e^2 = -n."""
    if n < 0:
        raise BiratError("n must be non-negative")
    labels = ("ruling f", "ruling g") if n == 0 else ("fibre f", "section e")
    return ConeDescription(((1, 0), (0, 1)), ((0, 1), (1, -n)), labels)


@dataclass(frozen=True)
class CollinearReport:
    cone: ConeDescription
    anticanonical_square: int
    minus_k_degrees: tuple[int, ...]
    k_trivial_rays: tuple[str, ...]
    degree_bound: int
    k_trivial_solutions: tuple[DivisorClass, ...]      # K.D = 0 and C.D in {0, 1}
    minus_one_solutions: tuple[DivisorClass, ...]      # K.D = -1 and C.D in {0, 1}
    square_zero_solutions: tuple[DivisorClass, ...]    # K.D = -2 and C.D in {0, 1}
    extremal: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return (self.anticanonical_square == 6
                and all(x >= 0 for x in self.minus_k_degrees)
                and self.k_trivial_rays == ("C",)
                and not self.k_trivial_solutions
                and not self.minus_one_solutions
                and all(s.degree == 1 and sorted(s.mults) == [0, 0, 1]
                        for s in self.square_zero_solutions)
                and all(self.extremal))


def collinear_blowup_cone(degree_bound: int = 12) -> CollinearReport:
    """Plane blown up at three points on a line.

    Rays: the strict transform C = (1; 1, 1, 1) of the line and E_1, E_2, E_3.
    The numerical part of the uniqueness argument is checked for plane
    curves of degree up to ``degree_bound``: with C.D = d - sum m in {0, 1},
    no class has K.D = 0 or K.D = -1, and K.D = -2 forces (1; 1, 0, 0) up to
    order.  Irreducibility of the curves involved is not something the
    lattice can see.
    """
    n = 3
    c = DivisorClass(1, (1, 1, 1))
    es = [DivisorClass.exceptional(i, n) for i in range(n)]
    rays = [c] + es
    labels = ("C", "E1", "E2", "E3")
    k = canonical_class(n)
    cone = ConeDescription(tuple(r.vector() for r in rays), _blowup_gram(n), labels)

    def search(k_degree):
        found = []
        for d in range(1, degree_bound + 1):
            for m in itertools.product(range(3 * d + 1), repeat=n):
                s = sum(m)
                if 3 * d - s == k_degree and 0 <= d - s <= 1:
                    found.append(DivisorClass(d, m))
        return tuple(found)

    # sample for the extremality test: the rays and effective classes with
    # non-negative square (lines through at most one point, conics, cubics)
    sample = rays + [DivisorClass(1, (0, 0, 0)), DivisorClass(2, (1, 1, 1)),
                     DivisorClass(3, (1, 1, 1))]
    sample += [DivisorClass(1, tuple(int(i == j) for j in range(n))) for i in range(n)]
    return CollinearReport(
        cone=cone,
        anticanonical_square=intersect(k, k),
        minus_k_degrees=tuple(-intersect(k, r) for r in rays),
        k_trivial_rays=tuple(lab for lab, r in zip(labels, rays) if intersect(k, r) == 0),
        degree_bound=degree_bound,
        k_trivial_solutions=search(0),
        minus_one_solutions=search(1),
        square_zero_solutions=search(2),
        extremal=tuple(neg_curve_is_extremal(r, sample) for r in rays),
    )


def _partitions(total: int, squares: int, parts: int, cap: int):
    """Non-increasing tuples of ``parts`` non-negative ints with given sum and sum of squares."""
    if parts == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    hi = min(cap, total)
    for first in range(hi, -1, -1):
        if first * first > squares:
            continue
        # the remaining parts cannot exceed ``first``
        if total - first > first * (parts - 1):
            break
        for rest in _partitions(total - first, squares - first * first, parts - 1, first):
            yield (first,) + rest


def _minus_one_classes_of_degree(n: int, d: int) -> list[DivisorClass]:
    out = set()
    for part in _partitions(3 * d - 1, d * d + 1, n, 3 * d):
        for perm in set(itertools.permutations(part)):
            out.add(DivisorClass(d, perm))
    return list(out)


def enumerate_minus_one_classes(n: int) -> list[DivisorClass]:
    """All classes with E^2 = E.K = -1 on the plane blown up at n general points.

    Images in the plane of (-1)-curves have degree at most 3 for n <= 7.  For
    n = 8, every (-1)-curve E satisfies E.(-2K) = 2 with |-2K| = L(6; 2^8)
    containing it in a member, which bounds the degree by 6.
    """
    if not 1 <= n <= 8:
        raise BiratError("n must lie in 1..8")
    bound = 3 if n <= 7 else 6
    found = [DivisorClass.exceptional(i, n) for i in range(n)]
    for d in range(1, bound + 1):
        found.extend(_minus_one_classes_of_degree(n, d))
    for d in range(bound + 1, bound + 4):
        assert not _minus_one_classes_of_degree(n, d), f"unexpected class of degree {d}"
    return sorted(found, key=lambda c: (c.degree, c.mults))


def is_minus_one_class(c: DivisorClass) -> bool:
    rec = numerical_record(c)
    return rec.nu == -1 and intersect(c, canonical_class(c.n)) == -1


def reduces_to_exceptional(c: DivisorClass) -> bool:
    end = apply_moves(c, reduce_to_exceptional(c))
    return end.degree == 0 and sorted(end.mults) == [-1] + [0] * (end.n - 1)


def exe_pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Intersection on (f1, f2, delta): f_i^2 = delta^2 = 0, other products 1."""
    return (x[0] * y[1] + x[1] * y[0] + x[0] * y[2] + x[2] * y[0]
            + x[1] * y[2] + x[2] * y[1])


def exe_cone_membership(a: int, b: int, c: int) -> bool:
    """Whether a f1 + b f2 + c delta lies in the closed cone of curves of E x E."""
    if a == b == c == 0:
        return True
    square = 2 * (a * b + a * c + b * c)
    h_degree = a + b + 2 * c   # against H = f1 + f2
    return square >= 0 and h_degree > 0

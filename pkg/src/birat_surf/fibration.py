"""Fibres, elliptic fibrations and branch-data arithmetic.

Zariski's lemma: the intersection form restricted to the components of a
fibre is negative semidefinite, and its kernel is spanned by the fibre
itself when the fibre is connected.  Signatures here are computed by exact
symmetric elimination over the rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BiratError


def _as_matrix(gram) -> list[list[int]]:
    rows = [list(r) for r in gram]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise BiratError("matrix must be square")
    for i in range(n):
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                raise BiratError("matrix must be symmetric")
    return rows


def lattice_signature(gram) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric rational matrix."""
    a = [[Fraction(x) for x in row] for row in _as_matrix(gram)]
    pos = neg = zero = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if hit is None:
                zero += n
                break
            i, j = hit
            # congruence by x_i -> x_i + x_j gives a nonzero diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != piv]
        a = [[a[r][c] - a[r][piv] * a[piv][c] / p for c in rest] for r in rest]
    return pos, neg, zero


def connected_components(gram) -> int:
    """Components of the graph with an edge wherever an off-diagonal entry is nonzero."""
    rows = _as_matrix(gram)
    n = len(rows)
    seen, count = set(), 0
    for start in range(n):
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and rows[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
    return count


@dataclass(frozen=True)
class FibreMatrix:
    gram: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in _as_matrix(self.gram))
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "weights", weights)
        n = len(gram)
        if len(weights) != n:
            raise BiratError(f"{len(weights)} weights for {n} components")
        if any(w <= 0 for w in weights):
            raise BiratError("weights must be positive")
        for i in range(n):
            for j in range(n):
                if i != j and gram[i][j] < 0:
                    raise BiratError("distinct components meet non-negatively")
        for i in range(n):
            if sum(gram[i][j] * weights[j] for j in range(n)) != 0:
                raise BiratError(f"F . F_{i} != 0: weights do not annihilate the form")

    @classmethod
    def from_json(cls, data: dict) -> "FibreMatrix":
        try:
            return cls(data["gram"], data["weights"])
        except (KeyError, TypeError) as exc:
            raise BiratError("fibre matrix needs 'gram' and 'weights'") from exc


@dataclass(frozen=True)
class ZariskiVerdict:
    semidefinite: bool
    kernel_dim: int
    kernel_is_span_of_weights: bool
    components: int


def zariski_check(m: FibreMatrix) -> ZariskiVerdict:
    p, _, z = lattice_signature(m.gram)
    # the weights lie in the kernel by construction, so they span it iff z = 1
    return ZariskiVerdict(p == 0, z, p == 0 and z == 1, connected_components(m.gram))


@dataclass(frozen=True)
class EllipticFibration:
    base_genus: int
    chi: int
    mults: tuple[int, ...] = ()
    exact_for_isotrivial: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if self.base_genus < 0:
            raise BiratError("base genus is non-negative")
        if self.chi < 0:
            raise BiratError("chi is non-negative")
        if any(m < 2 for m in self.mults):
            raise BiratError("multiple fibres have multiplicity >= 2")


def plurigenus_bound(f: EllipticFibration, n: int) -> int:
    """max{0, n(2g-2+chi) + 1 - g + sum floor(n(m-1)/m)}."""
    if n < 1:
        raise BiratError("n must be positive")
    g = f.base_genus
    val = n * (2 * g - 2 + f.chi) + 1 - g + sum(n * (m - 1) // m for m in f.mults)
    return max(0, val)


def plurigenus_table(f: EllipticFibration, n_max: int) -> dict[int, int]:
    return {n: plurigenus_bound(f, n) for n in range(1, n_max + 1)}


@dataclass(frozen=True)
class CanonicalFormula:
    base_bundle_degree: int
    fractional_parts: tuple[Fraction, ...]
    pullback_power: int
    pullback_degree: int   # degree of the bundle on the base at that power


def canonical_formula_summary(f: EllipticFibration) -> CanonicalFormula:
    base = 2 * f.base_genus - 2 + f.chi
    parts = tuple(Fraction(m - 1, m) for m in f.mults)
    n = math.lcm(*f.mults) if f.mults else 1
    deg = n * base + sum((n * p for p in parts), Fraction(0))
    assert deg.denominator == 1
    return CanonicalFormula(base, parts, n, int(deg))


@dataclass(frozen=True)
class BranchData:
    group_order: int
    base_genus: int
    branch: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(int(r) for r in self.branch))
        if self.group_order < 1 or self.base_genus < 0:
            raise BiratError("group order positive, base genus non-negative")
        if any(r < 2 for r in self.branch):
            raise BiratError("branch indices are >= 2")


def riemann_hurwitz_genus(b: BranchData) -> int:
    """Genus of the Galois cover with the given branching."""
    nu = b.group_order
    for r in b.branch:
        if nu % r:
            raise BiratError(f"branch index {r} does not divide the group order {nu}")
    twice = nu * (2 * b.base_genus - 2) + sum(nu - nu // r for r in b.branch)
    if twice % 2:
        raise BiratError("2g - 2 would be odd")
    g = twice // 2 + 1
    if g < 0:
        raise BiratError(f"negative genus {g}")
    return g


def invariant_degree(b: BranchData, n: int) -> int:
    """l_n = -2n + sum floor(n(1 - 1/r)) for a cover of the line."""
    if b.base_genus != 0:
        raise BiratError("defined for covers of P^1 only")
    return -2 * n + sum(n * (r - 1) // r for r in b.branch)


def elliptic_branch_consistency(b: BranchData | Sequence[int]) -> bool:
    branch = b.branch if isinstance(b, BranchData) else tuple(b)
    return sum((1 - Fraction(1, r) for r in branch), Fraction(0)) == 2


ELLIPTIC_BRANCH_FAMILIES = ((3, 3, 3), (2, 4, 4), (2, 3, 6), (2, 2, 2, 2))


# rotation part of the group action on the elliptic curve F, as a fraction of
# a full turn, and the admissible translation subgroups (as cyclic factors)
_ROTATIONS = {
    Fraction(1, 2): ((), (2,)),
    Fraction(1, 4): ((), (2,)),
    Fraction(1, 3): ((), (3,)),
    Fraction(5, 6): ((),),
}

_CASES = {
    "i": (Fraction(1, 2), ()),
    "ii": (Fraction(1, 2), (2,)),
    "iii": (Fraction(1, 4), ()),
    "iv": (Fraction(1, 4), (2,)),
    "v": (Fraction(1, 3), ()),
    "vi": (Fraction(1, 3), (3,)),
    "vii": (Fraction(5, 6), ()),
}


@dataclass(frozen=True)
class BdFCase:
    """A bielliptic surface (E x F)/G, G = rotation on F times translations T.

    ``rotation`` is the turn a generator of the rotation part makes on the
    tangent line of F; ``translations`` lists the cyclic factors of T.
    """
    case: str
    rotation: Fraction = field(init=False)
    translations: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.case not in _CASES:
            raise BiratError(f"unknown bielliptic case {self.case!r}")
        rot, trans = _CASES[self.case]
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "translations", trans)

    @classmethod
    def from_group(cls, rotation: Fraction, translations: Sequence[int]) -> "BdFCase":
        """Validate a group descriptor and name its case."""
        rotation = Fraction(rotation) % 1
        # a rotation and its inverse give the same group
        rotation = {2: Fraction(1, 2), 3: Fraction(1, 3), 4: Fraction(1, 4),
                    6: Fraction(5, 6)}.get(rotation.denominator, rotation)
        translations = tuple(sorted(t for t in translations if t != 1))
        if rotation not in _ROTATIONS:
            raise BiratError(f"rotation by {rotation} of a turn has no fixed point lattice")
        if translations not in _ROTATIONS[rotation]:
            if rotation == Fraction(1, 2) and translations == (2, 2):
                raise BiratError("G = F[2] x Z2 is excluded: the quotient is not bielliptic")
            raise BiratError(
                f"translations {translations} do not commute with rotation {rotation}")
        for name, (rot, trans) in _CASES.items():
            if rot == rotation and trans == translations:
                return cls(name)
        raise AssertionError("unreachable")

    @property
    def group_order(self) -> int:
        return self.rotation.denominator * math.prod(self.translations)

    def describe(self) -> str:
        rot = f"Z{self.rotation.denominator}"
        return rot + "".join(f" x Z{t}" for t in self.translations)


BDF_CASES = tuple(BdFCase(c) for c in _CASES)


def bdf_minimal_power(c: BdFCase) -> int:
    """Order of the character by which G acts on the 1-form of F."""
    return c.rotation.denominator

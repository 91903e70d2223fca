"""Kodaira dimension and class of a surface from its numerical invariants.

The decision follows the twelfth plurigenus:

    P12 = 0            kappa = -inf   (rational iff q = P2 = 0)
    P12 = 1            kappa = 0      (class read off from p_g and q)
    P12 >= 2, K^2 = 0  kappa = 1
    P12 >= 2, K^2 > 0  kappa = 2

with K^2 taken on a minimal model.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import BiratError, InconsistentRecord, InsufficientData
from .fibration import BdFCase, bdf_minimal_power


class Kappa(enum.Enum):
    MINUS_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"
    TWO = "2"


class Subclass(enum.Enum):
    RATIONAL = "Rational"
    IRRATIONAL_RULED = "IrrationalRuled"
    K3 = "K3"
    ENRIQUES = "Enriques"
    ABELIAN = "Abelian"
    BIELLIPTIC = "Bielliptic"
    PROPERLY_ELLIPTIC = "ProperlyElliptic"
    GENERAL_TYPE = "GeneralType"


BIELLIPTIC_ORDERS = (2, 3, 4, 6)


@dataclass(frozen=True)
class SurfaceInvariants:
    q: int | None = None
    p_g: int | None = None
    K2: int | None = None
    e: int | None = None
    chi: int | None = None
    plurigenera: dict[int, int] = field(default_factory=dict)
    minimal: bool = False
    bdf_case: BdFCase | None = None

    def P(self, n: int) -> int | None:
        if n == 1 and self.p_g is not None:
            return self.plurigenera.get(1, self.p_g)
        return self.plurigenera.get(n)

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceInvariants":
        if not isinstance(data, dict):
            raise BiratError("invariants must be a JSON object")
        known = {"q", "p_g", "K2", "e", "chi", "plurigenera", "minimal", "bdf_case"}
        extra = set(data) - known
        if extra:
            raise BiratError(f"unknown fields {sorted(extra)}")
        for k in ("q", "p_g", "K2", "e", "chi"):
            v = data.get(k)
            if v is not None and (isinstance(v, bool) or not isinstance(v, int)):
                raise BiratError(f"{k} must be an integer")
        try:
            pl = {int(k): int(v) for k, v in data.get("plurigenera", {}).items()}
        except (AttributeError, TypeError, ValueError) as exc:
            raise BiratError("plurigenera must map integers to integers") from exc
        case = data.get("bdf_case")
        return cls(data.get("q"), data.get("p_g"), data.get("K2"), data.get("e"),
                   data.get("chi"), pl, bool(data.get("minimal", False)),
                   BdFCase(case) if case is not None else None)


def consistency_check(s: SurfaceInvariants) -> list[str]:
    out = []
    for name in ("q", "p_g"):
        v = getattr(s, name)
        if v is not None and v < 0:
            out.append(f"{name} = {v} is negative")
    if None not in (s.chi, s.q, s.p_g) and s.chi != 1 - s.q + s.p_g:
        out.append(f"chi = {s.chi} but 1 - q + p_g = {1 - s.q + s.p_g}")
    if None not in (s.chi, s.K2, s.e) and 12 * s.chi != s.K2 + s.e:
        out.append(f"12 chi = {12 * s.chi} but K^2 + e = {s.K2 + s.e}")
    for n, p in sorted(s.plurigenera.items()):
        if n < 1:
            out.append(f"plurigenus index {n} is not positive")
        if p < 0:
            out.append(f"P_{n} = {p} is negative")
    if s.p_g is not None and 1 in s.plurigenera and s.plurigenera[1] != s.p_g:
        out.append(f"P_1 = {s.plurigenera[1]} but p_g = {s.p_g}")
    known = {n: p for n, p in s.plurigenera.items() if n >= 1}
    if s.p_g is not None:
        known.setdefault(1, s.p_g)
    # a nonzero section of nK has nonzero powers
    for a, pa in known.items():
        for b, pb in known.items():
            if b % a == 0 and pa >= 1 and pb == 0:
                out.append(f"P_{a} = {pa} forces P_{b} >= 1")
    p12 = known.get(12)
    if s.minimal and s.K2 is not None and p12 is not None and p12 >= 1 and s.K2 < 0:
        out.append(f"K^2 = {s.K2} < 0 on a minimal model with P_12 >= 1")
    # P_12 = 1 means 12K is trivial
    if s.minimal and s.K2 is not None and p12 == 1 and s.K2 != 0:
        out.append(f"K^2 = {s.K2} but P_12 = 1 forces K^2 = 0 on a minimal model")
    return out


def castelnuovo_rational(q: int, P2: int) -> bool:
    return q == 0 and P2 == 0


@dataclass(frozen=True)
class Classification:
    kappa: Kappa
    subclass: Subclass | None = None
    canonical_order: int | None = None
    admissible_orders: tuple[int, ...] | None = None
    undischarged: tuple[str, ...] = ()

    def plurigenus(self, n: int) -> int | None:
        """P_n for kappa = 0 classes (None when the order is not pinned down)."""
        if self.kappa is not Kappa.ZERO:
            raise BiratError("plurigenera are predicted for kappa = 0 only")
        if self.canonical_order is None:
            return None
        return 1 if n % self.canonical_order == 0 else 0

    def to_json(self) -> dict:
        out = {"kappa": self.kappa.value,
               "subclass": self.subclass.value if self.subclass else None}
        if self.admissible_orders is not None:
            out["admissible_orders"] = list(self.admissible_orders)
        else:
            out["canonical_order"] = self.canonical_order
        if self.undischarged:
            out["undischarged"] = list(self.undischarged)
        return out


_KAPPA_ZERO = {
    # (p_g, q) -> subclass, order of K in Pic
    (1, 0): (Subclass.K3, 1),
    (0, 0): (Subclass.ENRIQUES, 2),
    (1, 2): (Subclass.ABELIAN, 1),
    (0, 1): (Subclass.BIELLIPTIC, None),
}


def classify(s: SurfaceInvariants) -> Classification:
    bad = consistency_check(s)
    if bad:
        raise InconsistentRecord(bad)
    p12 = s.P(12)
    if p12 is None:
        raise InsufficientData(["kappa needs P_12"])
    if p12 == 0:
        if s.q is None:
            return Classification(Kappa.MINUS_INFINITY,
                                  undischarged=("rational or irrational ruled needs q",))
        # P_12 = 0 forces P_2 = 0
        p2 = s.P(2) if s.P(2) is not None else 0
        sub = Subclass.RATIONAL if castelnuovo_rational(s.q, p2) else Subclass.IRRATIONAL_RULED
        return Classification(Kappa.MINUS_INFINITY, sub)
    if p12 == 1:
        if s.p_g is None or s.q is None:
            return Classification(Kappa.ZERO, undischarged=("kappa = 0 class needs p_g and q",))
        key = (s.p_g, s.q)
        if key == (1, 1):
            raise InconsistentRecord(
                ["impossible case: p_g = q = 1 does not occur with kappa = 0"])
        if key not in _KAPPA_ZERO:
            raise InconsistentRecord([f"(p_g, q) = {key} does not occur with kappa = 0"])
        sub, order = _KAPPA_ZERO[key]
        if sub is Subclass.BIELLIPTIC:
            if s.bdf_case is None:
                return Classification(Kappa.ZERO, sub, admissible_orders=BIELLIPTIC_ORDERS)
            order = bdf_minimal_power(s.bdf_case)
        _check_kappa_zero_plurigenera(s, order)
        return Classification(Kappa.ZERO, sub, order)
    if s.K2 is None or not s.minimal:
        raise InsufficientData(["kappa 1 or 2 needs K^2 on a minimal model"])
    if s.K2 == 0:
        return Classification(Kappa.ONE, Subclass.PROPERLY_ELLIPTIC)
    return Classification(Kappa.TWO, Subclass.GENERAL_TYPE)


def _check_kappa_zero_plurigenera(s: SurfaceInvariants, order: int):
    bad = [f"P_{n} = {p} but the class predicts {int(n % order == 0)}"
           for n, p in sorted(s.plurigenera.items()) if p != int(n % order == 0)]
    if bad:
        raise InconsistentRecord(bad)


def kappa_zero_plurigenus(sub: Subclass, n: int, order: int | None = None) -> int:
    orders = {Subclass.K3: 1, Subclass.ABELIAN: 1, Subclass.ENRIQUES: 2}
    if sub is Subclass.BIELLIPTIC:
        if order not in BIELLIPTIC_ORDERS:
            raise BiratError("bielliptic plurigenera need the order of K")
    elif sub in orders:
        order = orders[sub]
    else:
        raise BiratError(f"{sub} is not a kappa = 0 class")
    return 1 if n % order == 0 else 0


def general_type_plurigenus(chi: int, K2: int, n: int) -> int:
    """P_n = chi + n(n-1)/2 K^2 on a minimal surface of general type, n >= 2."""
    if K2 < 1 or chi < 1:
        raise BiratError("minimal general type needs K^2 >= 1 and chi >= 1")
    if n < 2:
        raise BiratError("formula holds for n >= 2")
    return chi + n * (n - 1) // 2 * K2


class Pluricanonical(enum.Flag):
    BASE_POINT_FREE = enum.auto()
    BIRATIONAL_MORPHISM = enum.auto()
    EXCEPTION = enum.auto()


def pluricanonical_behavior(n: int, p_g: int, K2: int) -> Pluricanonical:
    """What is known about |nK| on a minimal surface of general type."""
    if n <= 2:
        raise BiratError("n <= 2 is not covered")
    out = Pluricanonical(0)
    if n >= 5:
        out |= Pluricanonical.BASE_POINT_FREE
    exception = (n in (3, 4) and (p_g, K2) == (2, 1)) or (n == 3 and (p_g, K2) == (3, 2))
    if n >= 6 or not exception:
        out |= Pluricanonical.BIRATIONAL_MORPHISM
    else:
        out |= Pluricanonical.EXCEPTION
    return out

"""Intersection lattice of a plane blown up at finitely many points.

A class is written ``(d; m_1, ..., m_n)`` and stands for ``d L - sum m_i E_i``
where ``L`` is the pull-back of a line and ``E_i`` the total transform of the
i-th exceptional curve.  The form has signature ``(1, n)``:
``L^2 = 1``, ``E_i^2 = -1`` and all other products vanish.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import ConfigurationMismatch


def binom2(k: int) -> int:
    """k(k-1)/2, valid for negative k as well (it is then positive)."""
    return k * (k - 1) // 2


@dataclass(frozen=True)
class DivisorClass:
    degree: int
    mults: tuple[int, ...] = ()
    key: Hashable = None

    def __post_init__(self):
        object.__setattr__(self, "degree", int(self.degree))
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    @property
    def n(self) -> int:
        return len(self.mults)

    @classmethod
    def line(cls, n: int, key: Hashable = None) -> "DivisorClass":
        return cls(1, (0,) * n, key)

    @classmethod
    def exceptional(cls, i: int, n: int, key: Hashable = None) -> "DivisorClass":
        """The class E_i, i.e. (0; 0, .., -1, .., 0)."""
        mults = [0] * n
        mults[i] = -1
        return cls(0, tuple(mults), key)

    @classmethod
    def from_vector(cls, v: Sequence[int], key: Hashable = None) -> "DivisorClass":
        return cls(int(v[0]), tuple(int(x) for x in v[1:]), key)

    def vector(self) -> tuple[int, ...]:
        return (self.degree,) + self.mults

    def padded(self, n: int) -> "DivisorClass":
        """Same class seen on a blow-up with extra points of multiplicity 0."""
        if n < self.n:
            raise ValueError(f"cannot shrink a class on {self.n} points to {n}")
        return DivisorClass(self.degree, self.mults + (0,) * (n - self.n), self.key)

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if self.n != other.n:
            raise ConfigurationMismatch(
                f"classes on {self.n} and {other.n} points cannot be compared")
        if self.key is not None and other.key is not None and self.key != other.key:
            raise ConfigurationMismatch(
                f"classes on configurations {self.key!r} and {other.key!r}")

    def _merged_key(self, other):
        return self.key if self.key is not None else other.key

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.degree + other.degree,
                            tuple(a + b for a, b in zip(self.mults, other.mults)),
                            self._merged_key(other))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.degree, tuple(-m for m in self.mults), self.key)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.degree, tuple(k * m for m in self.mults), self.key)

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def to_json(self) -> dict:
        return {"degree": self.degree, "mults": list(self.mults)}

    @classmethod
    def from_json(cls, data: dict, key: Hashable = None) -> "DivisorClass":
        if not isinstance(data, dict) or "degree" not in data or "mults" not in data:
            raise ValueError("a class needs 'degree' and 'mults'")
        for x in [data["degree"], *data["mults"]]:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"non-integer entry {x!r} in class")
        return cls(data["degree"], tuple(data["mults"]), key)

    def __str__(self) -> str:
        return f"({self.degree}; {', '.join(map(str, self.mults))})" if self.mults \
            else f"({self.degree})"


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    a._check(b)
    return a.degree * b.degree - sum(x * y for x, y in zip(a.mults, b.mults))


def canonical_class(config, key: Hashable = None) -> DivisorClass:
    """K = -3L + sum E_i on the blow-up of ``config`` (a point count or a configuration)."""
    if isinstance(config, int):
        n = config
    else:
        n = len(config)
        if key is None:
            key = getattr(config, "key", None)
    return DivisorClass(-3, (-1,) * n, key)


@dataclass(frozen=True)
class NumericalRecord:
    """Virtual self-intersection and virtual genus of a class."""
    nu: int
    genus: int


def numerical_record(cls: DivisorClass) -> NumericalRecord:
    nu = cls.degree ** 2 - sum(m * m for m in cls.mults)
    genus = binom2(cls.degree - 1) - sum(binom2(m) for m in cls.mults)
    return NumericalRecord(nu, genus)


def riemann_roch_chi(cls: DivisorClass, chi_o: int = 1) -> int:
    """chi(O(L)) = chi(O) + L.(L - K)/2 on the blow-up."""
    k = canonical_class(cls.n, cls.key)
    twice = intersect(cls, cls - k)
    assert twice % 2 == 0, "L.(L-K) is always even"
    return chi_o + twice // 2


def gram_matrix(n: int) -> np.ndarray:
    """diag(1, -1, ..., -1) as an integer matrix."""
    return np.diag([1] + [-1] * n).astype(object)


def classes_gram(classes: Iterable[DivisorClass]) -> list[list[int]]:
    cs = list(classes)
    return [[intersect(a, b) for b in cs] for a in cs]

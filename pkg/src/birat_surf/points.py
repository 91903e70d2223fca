"""Configurations of proper and infinitely near points.

Each point records its parent (the point it lies infinitely near to in the
first neighbourhood, ``None`` for a proper point) and the set of points it
is proximate to.  A point is always proximate to its parent and to at most
one further ancestor; in the latter case it is a satellite point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import InvalidConfiguration
from .lattice import DivisorClass


@dataclass(frozen=True)
class PointNode:
    id: int
    parent: int | None = None
    proximate_to: frozenset[int] = frozenset()
    generic: bool = False

    def __post_init__(self):
        prox = frozenset(int(p) for p in self.proximate_to)
        if self.parent is not None:
            prox = prox | {self.parent}
        object.__setattr__(self, "proximate_to", prox)

    @property
    def is_proper(self) -> bool:
        return self.parent is None


@dataclass(frozen=True)
class PointConfig:
    points: tuple[PointNode, ...]
    collinear: frozenset[frozenset[int]] = frozenset()
    key: Hashable = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "collinear",
                           frozenset(frozenset(t) for t in self.collinear))
        self._validate()

    def _validate(self):
        seen: dict[int, PointNode] = {}
        for p in self.points:
            if p.id in seen:
                raise InvalidConfiguration(f"duplicate point id {p.id}")
            if p.parent is not None and p.parent not in seen:
                raise InvalidConfiguration(
                    f"point {p.id}: parent {p.parent} must appear earlier")
            if len(p.proximate_to) > 2:
                raise InvalidConfiguration(
                    f"point {p.id} is proximate to more than two points")
            if p.parent is None and p.proximate_to:
                raise InvalidConfiguration(
                    f"proper point {p.id} cannot be proximate to anything")
            if p.parent is not None:
                ancestors = self._ancestors(seen, p.parent) | {p.parent}
                extra = p.proximate_to - {p.parent}
                if not extra <= ancestors:
                    raise InvalidConfiguration(
                        f"point {p.id} is proximate to a non-ancestor {sorted(extra)}")
                for q in extra:
                    # the parent must itself lie on the strict transform of E_q
                    if q not in seen[p.parent].proximate_to:
                        raise InvalidConfiguration(
                            f"satellite {p.id}: parent {p.parent} is not proximate to {q}")
            seen[p.id] = p
        for triple in self.collinear:
            if len(triple) != 3:
                raise InvalidConfiguration("collinear declarations are triples")
            for i in triple:
                if i not in seen:
                    raise InvalidConfiguration(f"collinear triple names unknown point {i}")
                if not seen[i].is_proper:
                    raise InvalidConfiguration(
                        f"collinear triple contains infinitely near point {i}")

    @staticmethod
    def _ancestors(seen, pid) -> set[int]:
        out = set()
        while seen[pid].parent is not None:
            pid = seen[pid].parent
            out.add(pid)
        return out

    @classmethod
    def general(cls, n: int, key: Hashable = None) -> "PointConfig":
        """n proper points in general position, ids 0..n-1."""
        return cls(tuple(PointNode(i) for i in range(n)), key=key)

    @classmethod
    def chain(cls, n: int, satellite_of_root: bool = False) -> "PointConfig":
        """p_0 < p_1 < ... each infinitely near the previous one.

        With ``satellite_of_root`` every p_k for k >= 2 is also proximate to p_0.
        """
        pts = [PointNode(0)]
        for i in range(1, n):
            prox = {0} if satellite_of_root and i >= 2 else set()
            pts.append(PointNode(i, parent=i - 1, proximate_to=frozenset(prox)))
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(p.id for p in self.points)

    def index(self, pid: int) -> int:
        for i, p in enumerate(self.points):
            if p.id == pid:
                return i
        raise KeyError(pid)

    def node(self, pid: int) -> PointNode:
        return self.points[self.index(pid)]

    def children(self, pid: int) -> tuple[int, ...]:
        return tuple(p.id for p in self.points if p.parent == pid)

    def proximate_points(self, pid: int) -> tuple[int, ...]:
        """Points q with q -> pid."""
        return tuple(p.id for p in self.points if pid in p.proximate_to)

    def ancestors(self, pid: int) -> tuple[int, ...]:
        out = []
        node = self.node(pid)
        while node.parent is not None:
            out.append(node.parent)
            node = self.node(node.parent)
        return tuple(out)

    def next_id(self) -> int:
        return max(self.ids, default=-1) + 1

    def with_generic_point(self) -> tuple["PointConfig", int]:
        new = self.next_id()
        return (PointConfig(self.points + (PointNode(new, generic=True),),
                            self.collinear, self.key), new)

    def is_collinear(self, ids: Iterable[int]) -> bool:
        return frozenset(ids) in self.collinear

    def proximity_matrix(self) -> list[list[int]]:
        """P[i][j] = 1 when point i is proximate to point j (slot order)."""
        idx = {p.id: i for i, p in enumerate(self.points)}
        n = len(self.points)
        mat = [[0] * n for _ in range(n)]
        for i, p in enumerate(self.points):
            for q in p.proximate_to:
                mat[i][idx[q]] = 1
        return mat

    def to_json(self) -> dict:
        return {
            "points": [
                {"id": p.id, "parent": p.parent,
                 "proximate_to": sorted(p.proximate_to), "generic": p.generic}
                for p in self.points
            ],
            "collinear": sorted(sorted(t) for t in self.collinear),
        }

    @classmethod
    def from_json(cls, data) -> "PointConfig":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "points" not in data:
            raise InvalidConfiguration("configuration needs a 'points' list")
        pts = []
        for entry in data["points"]:
            try:
                pts.append(PointNode(int(entry["id"]), entry.get("parent"),
                                     frozenset(entry.get("proximate_to", ())),
                                     bool(entry.get("generic", False))))
            except (KeyError, TypeError, ValueError) as exc:
                raise InvalidConfiguration(f"bad point entry {entry!r}") from exc
        return cls(tuple(pts), frozenset(frozenset(t) for t in data.get("collinear", ())))


def is_satellite(config: PointConfig, pid: int) -> bool:
    return len(config.node(pid).proximate_to) == 2


def proximity_check(cls: DivisorClass, config: PointConfig) -> bool:
    """m_p >= sum of m_q over the points q proximate to p."""
    return not proximity_violations(cls, config)


def proximity_violations(cls: DivisorClass, config: PointConfig) -> list[int]:
    if cls.n != len(config):
        raise ValueError(f"class has {cls.n} multiplicities, configuration {len(config)} points")
    m = dict(zip(config.ids, cls.mults))
    bad = []
    for p in config.points:
        if m[p.id] < sum(m[q] for q in config.proximate_points(p.id)):
            bad.append(p.id)
    return bad


def slots(config: PointConfig, ids: Sequence[int]) -> tuple[int, ...]:
    return tuple(config.index(i) for i in ids)

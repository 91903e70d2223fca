"""Quadratic transformations and homaloidal nets.

A quadratic map with base points in slots (i, j, k) acts on classes by

    d'   = 2d - m_i - m_j - m_k
    m_i' = d - m_j - m_k      (and cyclically)

and fixes the other multiplicities.  The action is an involution of the
lattice preserving the form and the canonical class.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidQuadraticMap, NotHomaloidal
from .lattice import DivisorClass, numerical_record
from .points import PointConfig, PointNode, proximity_violations


class QuadraticKind(enum.Enum):
    TYPE_I = "I"      # three proper points
    TYPE_II = "II"    # p1 >1 p0, p2 proper
    TYPE_III = "III"  # p2 >1 p1 >1 p0, p2 not proximate to p0


def quadratic_transform(cls: DivisorClass, base: Sequence[int]) -> DivisorClass:
    """Apply the quadratic map based at slots ``base`` to ``cls``."""
    i, j, k = _check_base(base, cls.n)
    m = list(cls.mults)
    d = cls.degree
    mi, mj, mk = m[i], m[j], m[k]
    m[i], m[j], m[k] = d - mj - mk, d - mi - mk, d - mi - mj
    return DivisorClass(2 * d - mi - mj - mk, tuple(m), cls.key)


def _check_base(base, n):
    base = tuple(int(b) for b in base)
    if len(base) != 3 or len(set(base)) != 3:
        raise InvalidQuadraticMap(f"base must be three distinct slots, got {base}")
    if not all(0 <= b < n for b in base):
        raise InvalidQuadraticMap(f"base slots {base} out of range for {n} points")
    return base


def quadratic_matrix(n: int, base: Sequence[int]) -> np.ndarray:
    """Integer matrix of the action on (d, m_1, .., m_n) column vectors."""
    i, j, k = _check_base(base, n)
    mat = np.identity(n + 1, dtype=object)
    b = [i + 1, j + 1, k + 1]
    mat[0, 0] = 2
    for s in b:
        mat[0, s] = -1
        mat[s, s] = 0
        mat[s, 0] = 1
        for t in b:
            if t != s:
                mat[s, t] = -1
    return mat


def embed_matrix(mat: np.ndarray, n: int) -> np.ndarray:
    """Extend an action on fewer points by the identity on extra slots."""
    size = mat.shape[0]
    out = np.identity(n + 1, dtype=object)
    out[:size, :size] = mat
    return out


@dataclass(frozen=True)
class QuadraticMap:
    """A quadratic map with base points ``base`` (ids) sitting at ``slots``.

    For type II the order is (p0, p1, p2) with p1 >1 p0 and p2 proper; for
    type III it is the chain (p0, p1, p2).
    """
    base: tuple[int, int, int]
    kind: QuadraticKind
    slots: tuple[int, int, int]

    @classmethod
    def on(cls, config: PointConfig, ids: Sequence[int]) -> "QuadraticMap":
        """Validate ``ids`` as a base in ``config`` and classify its type."""
        ids = tuple(ids)
        if len(ids) != 3 or len(set(ids)) != 3:
            raise InvalidQuadraticMap(f"need three distinct base points, got {ids}")
        try:
            nodes = [config.node(i) for i in ids]
        except KeyError as exc:
            raise InvalidQuadraticMap(f"unknown point {exc.args[0]}") from None
        members = set(ids)
        for nd in nodes:
            if nd.parent is not None and nd.parent not in members:
                raise InvalidQuadraticMap(
                    f"point {nd.id} is infinitely near {nd.parent}, which is not a base point")
        roots = [nd for nd in nodes if nd.is_proper]
        if len(roots) == 3:
            if config.is_collinear(ids):
                raise InvalidQuadraticMap(f"base points {sorted(ids)} are collinear")
            order = sorted(ids, key=config.index)
            kind = QuadraticKind.TYPE_I
        elif len(roots) == 2:
            child = next(nd for nd in nodes if not nd.is_proper)
            other = next(nd for nd in roots if nd.id != child.parent)
            order = [child.parent, child.id, other.id]
            kind = QuadraticKind.TYPE_II
        else:
            root = roots[0]
            mid = [nd for nd in nodes if nd.parent == root.id]
            if len(mid) != 1:
                raise InvalidQuadraticMap(
                    f"two base points infinitely near {root.id} in the first neighbourhood")
            top = next(nd for nd in nodes if nd.parent == mid[0].id)
            if root.id in top.proximate_to:
                raise InvalidQuadraticMap(
                    f"point {top.id} is proximate to {root.id}; the net would have a fixed line")
            order = [root.id, mid[0].id, top.id]
            kind = QuadraticKind.TYPE_III
        return cls(tuple(order), kind, tuple(config.index(i) for i in order))

    def apply(self, cls: DivisorClass) -> DivisorClass:
        return quadratic_transform(cls, self.slots)

    def matrix(self, n: int) -> np.ndarray:
        return quadratic_matrix(n, self.slots)

    def net_class(self, n: int) -> DivisorClass:
        """The homaloidal net (2; 1, 1, 1) defining this map."""
        m = [0] * n
        for s in self.slots:
            m[s] = 1
        return DivisorClass(2, tuple(m))

    def describe(self) -> str:
        return f"{self.kind.value}{list(self.base)}"


def transform_config(config: PointConfig, qmap: QuadraticMap) -> PointConfig:
    """Configuration of the image plane, with the same slot order.

    The base points are replaced by the points of the inverse map (fresh
    ids, same internal structure).  Exceptional curves of base points that
    are not blown down keep carrying the points that lay on them.
    """
    a, b, c = qmap.base
    fresh = config.next_id()
    new_a, new_b, new_c = fresh, fresh + 1, fresh + 2
    if qmap.kind is QuadraticKind.TYPE_I:
        carry = {}
        base_nodes = {a: PointNode(new_a), b: PointNode(new_b), c: PointNode(new_c)}
    elif qmap.kind is QuadraticKind.TYPE_II:
        carry = {a: new_a}
        base_nodes = {a: PointNode(new_a), b: PointNode(new_b, parent=new_a),
                      c: PointNode(new_c)}
    else:
        carry = {a: new_a, b: new_b}
        base_nodes = {a: PointNode(new_a), b: PointNode(new_b, parent=new_a),
                      c: PointNode(new_c, parent=new_b)}
    members = {a, b, c}
    out = []
    for p in config.points:
        if p.id in members:
            out.append(base_nodes[p.id])
            continue
        prox = frozenset(carry[q] for q in p.proximate_to & members if q in carry)
        prox |= p.proximate_to - members
        if p.parent is None or p.parent not in members:
            parent = p.parent
        elif new_b in prox and new_b in carry.values():
            parent = new_b
        elif new_a in prox:
            parent = new_a
        else:
            parent, prox = None, frozenset()
        out.append(PointNode(p.id, parent, prox, p.generic))
    # every new parent is the image of a point that preceded p, so the slot
    # order stays valid
    return PointConfig(tuple(out), frozenset(), config.key)


def is_homaloidal(cls: DivisorClass, config: PointConfig | None = None):
    """Return (ok, reason).  ``reason`` names the first failed condition."""
    d = cls.degree
    if d < 1:
        return False, f"degree {d} < 1"
    if any(m < 0 for m in cls.mults):
        return False, "negative multiplicity"
    rec = numerical_record(cls)
    if rec.nu != 1:
        return False, f"self-intersection {rec.nu} != 1"
    if 3 * (d - 1) != sum(cls.mults):
        return False, f"3(d-1) = {3 * (d - 1)} != sum of multiplicities {sum(cls.mults)}"
    if config is not None:
        if len(config) != cls.n:
            return False, f"{cls.n} multiplicities for {len(config)} points"
        bad = proximity_violations(cls, config)
        if bad:
            return False, f"proximity inequality fails at point {bad[0]}"
    if d >= 2:
        if 3 * max(cls.mults, default=0) <= d:
            return False, "no base point of multiplicity > d/3"
    return True, None


@dataclass(frozen=True)
class HomaloidalNet:
    cls: DivisorClass
    config: PointConfig

    def __post_init__(self):
        ok, reason = is_homaloidal(self.cls, self.config)
        if not ok:
            raise NotHomaloidal(reason)

    @classmethod
    def lines(cls, config: PointConfig) -> "HomaloidalNet":
        return cls(DivisorClass.line(len(config)), config)

    @property
    def degree(self) -> int:
        return self.cls.degree

    def mult(self, pid: int) -> int:
        return self.cls.mults[self.config.index(pid)]

    def extended(self) -> tuple["HomaloidalNet", int]:
        """Add a generic point of multiplicity 0."""
        config, q = self.config.with_generic_point()
        return HomaloidalNet(self.cls.padded(len(config)), config), q

    def transformed(self, qmap: QuadraticMap) -> "HomaloidalNet":
        return HomaloidalNet(qmap.apply(self.cls), transform_config(self.config, qmap))

    def to_json(self) -> dict:
        return {**self.cls.to_json(), "config": self.config.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "HomaloidalNet":
        dc = DivisorClass.from_json(data)
        config = (PointConfig.from_json(data["config"]) if "config" in data
                  else PointConfig.general(dc.n))
        return cls(dc, config)


def de_jonquieres(d: int, config: PointConfig | None = None) -> HomaloidalNet:
    """The net (d; d-1, 1^(2d-2)) on 2d-1 points."""
    if d < 1:
        raise ValueError("degree must be positive")
    n = 2 * d - 1
    if config is None:
        config = PointConfig.general(n)
    if len(config) != n:
        raise ValueError(f"a de Jonquieres net of degree {d} needs {n} points")
    mults = (d - 1,) + (1,) * (2 * d - 2) if d > 1 else (0,)
    return HomaloidalNet(DivisorClass(d, mults), config)


def _sorted_slots(cls: DivisorClass) -> list[int]:
    return sorted(range(cls.n), key=lambda s: (-cls.mults[s], s))


def degree_reduction_step(cls: DivisorClass):
    """One quadratic map at the three largest multiplicities lowering the degree.

    Returns ``(base_slots, new_class)`` or ``None`` when the sufficient
    condition fails or the degree would not drop.
    """
    if cls.n < 3:
        return None
    order = _sorted_slots(cls)[:3]
    m1, m2, m3 = (cls.mults[s] for s in order)
    d = cls.degree
    if m3 < 1:
        return None
    rec = numerical_record(cls)
    lhs, rhs = (m3 - 1) * rec.nu, 2 * m3 * (rec.genus - 1)
    if lhs < rhs or (lhs == rhs and m3 == m1):
        return None
    if m1 == m2 == m3 and d == 3 * m1:
        return None
    if m1 + m2 + m3 <= d:
        return None
    return tuple(order), quadratic_transform(cls, order)


def reduce_to_exceptional(cls: DivisorClass) -> list[tuple[int, int, int]]:
    """Quadratic moves taking an exceptional class to some E_i.

    Classes on fewer than three points are padded with slots of
    multiplicity 0; the returned slots refer to the padded class.
    """
    rec = numerical_record(cls)
    if rec.nu != -1 or rec.genus != 0:
        raise ValueError(f"not an exceptional class: E^2 = {rec.nu}, genus {rec.genus}")
    cur = cls.padded(max(cls.n, 3))
    moves = []
    while cur.degree > 0:
        if cur.degree == 1:
            # (1; 1, 1, 0, ..): the line through two points goes to the third point
            i, j = _sorted_slots(cur)[:2]
            k = min(s for s in range(cur.n) if s not in (i, j))
            base = (i, j, k)
            cur = quadratic_transform(cur, base)
            moves.append(base)
            continue
        step = degree_reduction_step(cur)
        if step is None:
            raise ValueError(f"no degree-lowering quadratic move for {cur}")
        base, cur = step
        moves.append(base)
    if sorted(cur.mults) != [-1] + [0] * (cur.n - 1):
        raise ValueError(f"reduction ended at {cur}, not an exceptional curve class")
    return moves


def apply_moves(cls: DivisorClass, moves) -> DivisorClass:
    cur = cls.padded(max(cls.n, 3)) if moves else cls
    for base in moves:
        cur = quadratic_transform(cur, base)
    return cur


def orbit_unbounded(cls: DivisorClass):
    """Whether the degree is unbounded on the Cremona orbit of ``cls``.

    Returns ``(unbounded, witness)``; the witness is a triple of slots whose
    multiplicities sum to less than the degree (so the map raises it).
    """
    if cls.n < 9:
        raise ValueError("needs at least nine points")
    rec = numerical_record(cls)
    if rec.nu < 2 * rec.genus - 2:
        raise ValueError("needs nu >= 2g - 2")
    d, m = cls.degree, cls.mults
    if cls.n == 9 and len(set(m)) == 1 and d == 3 * m[0]:
        return False, None
    triple = tuple(sorted(range(cls.n), key=lambda s: (m[s], s))[:3])
    return True, (triple if sum(m[s] for s in triple) < d else None)

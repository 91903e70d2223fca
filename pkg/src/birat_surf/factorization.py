"""Noether-Castelnuovo descent: factor a Cremona map into quadratic maps.

The simplicity of a net is the triple (k, h, s) where, with base points
sorted by decreasing multiplicity m_0 >= m_1 >= ...,

    k = d - m_0
    h = largest index with m_h > k/2   (-1 for the net of lines)
    s = number of satellite points among p_0, .., p_h

Each step applies a quadratic map that lowers (k, h, s) lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .cremona import (HomaloidalNet, QuadraticKind, QuadraticMap, embed_matrix,
                      quadratic_matrix, transform_config)
from .errors import FactorizationError, InvalidQuadraticMap
from .lattice import DivisorClass, numerical_record
from .points import PointConfig, is_satellite


class Simplicity(NamedTuple):
    k: int
    h: int
    s: int

    def __str__(self):
        return f"({self.k}, {self.h}, {self.s})"


def sorted_points(net: HomaloidalNet) -> list[int]:
    """Point ids sorted by (-multiplicity, slot)."""
    m = net.cls.mults
    order = sorted(range(net.cls.n), key=lambda s: (-m[s], s))
    return [net.config.points[s].id for s in order]


def simplicity(net: HomaloidalNet) -> Simplicity:
    mults = sorted(net.cls.mults, reverse=True)
    m0 = mults[0] if mults else 0
    k = net.degree - m0
    h = sum(1 for m in mults if 2 * m > k) - 1
    top = sorted_points(net)[:h + 1]
    s = sum(1 for pid in top if is_satellite(net.config, pid))
    return Simplicity(k, h, s)


class NCStep(NamedTuple):
    qmap: QuadraticMap
    net: HomaloidalNet
    case: int
    config: PointConfig  # configuration the map acts on


def nc_step(net: HomaloidalNet) -> NCStep:
    """One descent step: choose the quadratic map and apply it."""
    if net.degree <= 2:
        raise FactorizationError(
            "already linear" if net.degree == 1 else "already quadratic")
    simp = simplicity(net)
    order = sorted_points(net)
    top = order[1:simp.h + 1]
    p0 = order[0]
    config = net.config
    # Case 1: p0, p_i, p_j are the base of a quadratic map
    for a in range(len(top)):
        for b in range(a + 1, len(top)):
            if is_satellite(config, top[a]) or is_satellite(config, top[b]):
                continue
            try:
                qmap = QuadraticMap.on(config, (p0, top[a], top[b]))
            except InvalidQuadraticMap:
                continue
            return NCStep(qmap, net.transformed(qmap), 1, config)
    # Case 2: p_j >1 p_i >1 p0 with p_j proximate to p0; use p0, p_i and a generic point
    for a in range(len(top)):
        pi = config.node(top[a])
        if pi.parent != p0:
            continue
        for b in range(len(top)):
            pj = config.node(top[b])
            if pj.parent == pi.id and p0 in pj.proximate_to:
                ext, q = net.extended()
                qmap = QuadraticMap.on(ext.config, (p0, pi.id, q))
                return NCStep(qmap, ext.transformed(qmap), 2, ext.config)
    raise FactorizationError(
        f"no valid quadratic map among the top {simp.h + 1} points of {net.cls}")


@dataclass(frozen=True)
class FactorStep:
    qmap: QuadraticMap
    case: int
    net: HomaloidalNet          # net after the step
    simplicity: Simplicity      # simplicity after the step
    n: int                      # number of slots the map acts on


@dataclass(frozen=True)
class FactorizationTrace:
    initial: HomaloidalNet
    steps: tuple[FactorStep, ...]
    terminal: str                        # "linear" or "quadratic"
    closing: QuadraticMap | None = None  # maps a quadratic terminal net to lines
    initial_simplicity: Simplicity = field(default=None)

    @property
    def final(self) -> HomaloidalNet:
        return self.steps[-1].net if self.steps else self.initial

    @property
    def n(self) -> int:
        return len(self.final.config)

    def maps(self) -> list[QuadraticMap]:
        out = [st.qmap for st in self.steps]
        if self.closing is not None:
            out.append(self.closing)
        return out

    def composed_matrix(self) -> np.ndarray:
        """Lattice action of the whole factorization on the final slot count."""
        n = self.n
        total = np.identity(n + 1, dtype=object)
        for st in self.steps:
            total = embed_matrix(st.qmap.matrix(st.n), n).dot(total)
        if self.closing is not None:
            total = self.closing.matrix(n).dot(total)
        return total

    def resulting_class(self) -> DivisorClass:
        v = self.composed_matrix().dot(np.array(self.initial.cls.padded(self.n).vector(),
                                                dtype=object))
        return DivisorClass.from_vector(v)


def factor(net: HomaloidalNet) -> FactorizationTrace:
    """Run the descent until the net is linear or quadratic."""
    steps = []
    cur = net
    start = simp = simplicity(net)
    while cur.degree > 2:
        _check_intermediate(cur)
        step = nc_step(cur)
        new_simp = simplicity(step.net)
        if not new_simp < simp:
            raise FactorizationError(
                f"simplicity did not drop: {simp} -> {new_simp} at {cur.cls}")
        steps.append(FactorStep(step.qmap, step.case, step.net, new_simp, len(step.config)))
        cur, simp = step.net, new_simp
    if cur.degree == 1:
        return FactorizationTrace(net, tuple(steps), "linear", None, start)
    base = [cur.config.points[s].id for s in range(cur.cls.n) if cur.cls.mults[s] == 1]
    closing = QuadraticMap.on(cur.config, base)
    return FactorizationTrace(net, tuple(steps), "quadratic", closing, start)


def _check_intermediate(net: HomaloidalNet):
    rec = numerical_record(net.cls)
    assert rec.nu == 1 and rec.genus == 0, f"lost homaloidal identities at {net.cls}"
    assert simplicity(net).h >= 2, f"fewer than three points above k/2 at {net.cls}"


def round_trip_ok(trace: FactorizationTrace) -> bool:
    """The composed action sends the net to the lines class."""
    return trace.resulting_class() == DivisorClass.line(trace.n)


@dataclass(frozen=True)
class Decomposition:
    """Type I maps, as slot triples, on the original slots plus auxiliary ones.

    Auxiliary generic points occupy the slots listed in ``auxiliary``.
    """
    steps: tuple[tuple[int, int, int], ...]
    n: int
    auxiliary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def composed_matrix(self) -> np.ndarray:
        total = np.identity(self.n + 1, dtype=object)
        for base in self.steps:
            total = quadratic_matrix(self.n, base).dot(total)
        return total


def decompose_quadratic(qmap: QuadraticMap, config: PointConfig) -> Decomposition:
    """Write a type II or III map as a product of type I maps.

    A type II map (p0, p1, p2) is gamma followed by beta, where gamma is type I
    at p0, p2 and a generic point q; a type III map uses a type II gamma at
    p0, p1, q.  In both cases beta is read off from the transformed net.
    Type II needs two type I maps and type III four.
    """
    if qmap.kind is QuadraticKind.TYPE_I:
        raise FactorizationError("map is already of type I")
    steps, n, aux = _decompose(qmap, config)
    return Decomposition(tuple(steps), n, tuple(aux))


def _decompose(qmap, config):
    if qmap.kind is QuadraticKind.TYPE_I:
        return [qmap.slots], len(config), []
    n0 = len(config)
    config1, q = config.with_generic_point()
    p0, p1, p2 = qmap.base
    first_base = (p0, p2, q) if qmap.kind is QuadraticKind.TYPE_II else (p0, p1, q)
    gamma = QuadraticMap.on(config1, first_base)
    after = transform_config(config1, gamma)
    net = gamma.apply(qmap.net_class(n0).padded(n0 + 1))
    second_ids = [after.points[s].id for s in range(net.n) if net.mults[s] == 1]
    if net.degree != 2 or len(second_ids) != 3:
        raise FactorizationError(f"unexpected intermediate net {net}")
    beta = QuadraticMap.on(after, second_ids)

    g_steps, g_n, g_aux = _decompose(gamma, config1)
    b_steps, b_n, b_aux = _decompose(beta, after)
    # gamma's factors agree with gamma only up to a permutation of target
    # slots; move beta's factors into that frame
    perm = _target_permutation(gamma.matrix(n0 + 1), g_steps, g_n, g_aux)
    shift = len(g_aux)
    total = g_n + len(b_aux)

    def move(s):
        return perm[s] if s < n0 + 1 else s + shift

    steps = list(g_steps) + [tuple(move(s) for s in base) for base in b_steps]
    aux = [n0] + list(g_aux) + [a + shift for a in b_aux]
    return steps, total, aux


def _target_permutation(mat, steps, n, aux):
    """Slot map s -> t with (composite row t) == (mat row s) on non-auxiliary columns."""
    comp = np.identity(n + 1, dtype=object)
    for base in steps:
        comp = quadratic_matrix(n, base).dot(comp)
    orig = embed_matrix(mat, n)
    keep = [0] + [s + 1 for s in range(n) if s not in aux]
    rows_c = [tuple(comp[r, c] for c in keep) for r in range(n + 1)]
    perm = {}
    for s in range(mat.shape[0] - 1):
        row = tuple(orig[s + 1, c] for c in keep)
        hits = [r for r in range(1, n + 1) if rows_c[r] == row]
        if len(hits) != 1:
            raise FactorizationError("composite does not determine a slot permutation")
        perm[s] = hits[0] - 1
    return perm


def decomposition_matches(qmap: QuadraticMap, config: PointConfig, dec: Decomposition) -> bool:
    """Composite agrees with the map up to a permutation of the target points.

    Only columns of non-auxiliary slots are compared; auxiliary points carry
    multiplicity 0 in every class of the original plane.
    """
    n = dec.n
    comp = dec.composed_matrix()
    orig = embed_matrix(qmap.matrix(len(config)), n)
    keep = [0] + [s + 1 for s in range(n) if s not in dec.auxiliary]
    rows_c = [tuple(comp[r, c] for c in keep) for r in range(n + 1)]
    rows_o = [tuple(orig[r, c] for c in keep) for r in range(n + 1)]
    if rows_c[0] != rows_o[0]:
        return False
    return sorted(rows_c[1:]) == sorted(rows_o[1:])

"""Untwisting plane Cremona maps through Sarkisov links.

Everything happens in the lattice of one fixed surface X: the source plane
blown up at the base points of the net.  A model S (the plane, a Hirzebruch
surface F_e, or the quadric F_0 with a chosen ruling) is recorded by

* the classes on X pulled back from S that span its cone: the line on the
  plane, or the fibre and the negative section (other ruling on F_0);
* the points blown up by X -> S, each with the class of its total
  exceptional curve in the lattice of X.

The net on X never changes; links only move the markers.  The degree of the
state is (mu, lambda, ell) where mu solves (mu K + L).F = 0, lambda is the
largest multiplicity of a point of S and ell counts the points attaining it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .cremona import HomaloidalNet, is_homaloidal
from .errors import NotHomaloidal, SarkisovError, TerminationReached
from .lattice import DivisorClass, canonical_class, intersect
from .points import PointConfig, PointNode, proximity_violations


class ModelKind(enum.Enum):
    PLANE = "P2"
    SCROLL = "F"          # Hirzebruch surface F_e, e >= 1
    QUADRIC_A = "F0(A)"   # P1 x P1 fibred by one ruling
    QUADRIC_B = "F0(B)"   # ... or by the other


@dataclass(frozen=True)
class MoriFibreSpace:
    kind: ModelKind
    e: int = 0

    def __post_init__(self):
        if self.kind is ModelKind.SCROLL and self.e < 1:
            raise ValueError("use a quadric ruling for e = 0")

    @classmethod
    def plane(cls) -> "MoriFibreSpace":
        return cls(ModelKind.PLANE)

    @classmethod
    def scroll(cls, e: int, ruling: ModelKind = ModelKind.QUADRIC_A) -> "MoriFibreSpace":
        return cls(ruling) if e == 0 else cls(ModelKind.SCROLL, e)

    @property
    def is_plane(self) -> bool:
        return self.kind is ModelKind.PLANE

    def __str__(self) -> str:
        return f"F{self.e}" if self.kind is ModelKind.SCROLL else self.kind.value


@dataclass(frozen=True, order=False)
class SarkisovDegree:
    mu: Fraction
    lam: int
    ell: int | None   # None when lambda = 0

    def key(self):
        return (self.mu, self.lam, self.ell or 0)

    def __lt__(self, other: "SarkisovDegree") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        ell = "*" if self.ell is None else str(self.ell)
        return f"({self.mu}, {self.lam}, {ell})"


@dataclass(frozen=True)
class SarkisovState:
    mfs: MoriFibreSpace
    net: DivisorClass                 # the net pulled back to X
    points: PointConfig               # points blown up by X -> S
    classes: tuple[DivisorClass, ...]  # total exceptional class of each point
    line: DivisorClass | None = None
    fibre: DivisorClass | None = None
    section: DivisorClass | None = None   # negative section, or other ruling on F0
    on_section: frozenset[int] = frozenset()

    def __post_init__(self):
        if len(self.classes) != len(self.points):
            raise ValueError("one exceptional class per point")
        if self.mfs.is_plane and self.line is None:
            raise ValueError("a plane state needs its line class")
        if not self.mfs.is_plane and (self.fibre is None or self.section is None):
            raise ValueError("a fibred state needs fibre and section classes")

    @classmethod
    def from_net(cls, net: HomaloidalNet | DivisorClass,
                 config: PointConfig | None = None) -> "SarkisovState":
        if isinstance(net, HomaloidalNet):
            dc, config = net.cls, net.config
        else:
            dc = net
            config = config if config is not None else PointConfig.general(dc.n)
        bad = proximity_violations(dc, config)
        if bad:
            raise SarkisovError(
                f"multiplicities are not monotone along infinitely near points (at {bad[0]})")
        n = dc.n
        classes = tuple(DivisorClass.exceptional(i, n) for i in range(n))
        return cls(MoriFibreSpace.plane(), dc, config, classes, line=DivisorClass.line(n))

    def mult(self, pid: int) -> int:
        return intersect(self.net, self.classes[self.points.index(pid)])

    def mults(self) -> tuple[int, ...]:
        return tuple(intersect(self.net, c) for c in self.classes)

    @property
    def fibre_class(self) -> DivisorClass:
        return self.line if self.mfs.is_plane else self.fibre

    def generators(self) -> tuple[DivisorClass, ...]:
        """Classes spanning the cone of curves of the model."""
        return (self.line,) if self.mfs.is_plane else (self.fibre, self.section)


@dataclass(frozen=True)
class SarkisovLink:
    kind: str                 # "I", "II", "III" or "IV"
    center: int | None        # point blown up or transformed, new point for III
    source: MoriFibreSpace
    target: MoriFibreSpace
    before: SarkisovDegree
    after: SarkisovDegree

    def describe(self) -> str:
        center = "-" if self.center is None else str(self.center)
        return (f"{self.kind:>3}  center {center:>3}  {self.source} -> {self.target}"
                f"  {self.before} -> {self.after}")


def _discrepancies(state: SarkisovState):
    """a_p, b_p with K_X = pi^*K_S + sum a_p E_p and L_X = pi^*L_S - sum b_p E_p (strict E_p)."""
    ids = state.points.ids
    m = dict(zip(ids, state.mults()))
    a, b = {}, {}
    for p in state.points.points:  # parents and proximate points come first
        a[p.id] = 1 + sum(a[q] for q in p.proximate_to)
        b[p.id] = m[p.id] + sum(b[q] for q in p.proximate_to)
    return a, b


def sarkisov_degree(state: SarkisovState) -> SarkisovDegree:
    F = state.fibre_class
    k = canonical_class(state.net.n)
    minus_kf = -intersect(k, F)
    assert minus_kf in (2, 3), "fibre class must have -K.F in {2, 3}"
    mu = Fraction(intersect(state.net, F), minus_kf)
    mults = state.mults()
    lam = max(mults, default=0)
    lam = max(lam, 0)
    if lam == 0:
        return SarkisovDegree(mu, 0, None)
    ell = sum(1 for x in mults if x == lam)
    a, b = _discrepancies(state)
    assert max(Fraction(b[p], a[p]) for p in a) == lam
    assert sum(1 for p in a if b[p] == lam * a[p]) == ell
    return SarkisovDegree(mu, lam, ell)


def adjoint_values(state: SarkisovState, mu: Fraction | None = None) -> list[Fraction]:
    """(K + L/mu).R for each generator R of the model."""
    if mu is None:
        mu = sarkisov_degree(state).mu
    k = canonical_class(state.net.n)
    return [intersect(k, r) + Fraction(intersect(state.net, r)) / mu
            for r in state.generators()]


def nef_adjoint_check(state: SarkisovState) -> bool:
    return all(v >= 0 for v in adjoint_values(state))


def crepant_coefficient(state: SarkisovState, pid: int) -> Fraction:
    """(K + L/mu).E for the exceptional curve over a proper point: 1 - m/mu."""
    mu = sarkisov_degree(state).mu
    return 1 - Fraction(state.mult(pid)) / mu


def is_terminal(state: SarkisovState) -> bool:
    deg = sarkisov_degree(state)
    return deg.lam <= deg.mu and nef_adjoint_check(state)


def _drop_point(config: PointConfig, classes, x: int):
    """Remove x; its first-order points become proper."""
    pts, cls = [], []
    for p, c in zip(config.points, classes):
        if p.id == x:
            continue
        parent = None if p.parent == x else p.parent
        pts.append(PointNode(p.id, parent, p.proximate_to - {x}, p.generic))
        cls.append(c)
    return PointConfig(tuple(pts)), tuple(cls)


def _maximal_point(state: SarkisovState, lam: int) -> int:
    cands = [p.id for p, c in zip(state.points.points, state.classes)
             if p.is_proper and intersect(state.net, c) == lam]
    if not cands:
        raise SarkisovError("no proper point of maximal multiplicity")
    return min(cands)


def untwist_step(state: SarkisovState) -> tuple[SarkisovLink, SarkisovState]:
    deg = sarkisov_degree(state)
    if deg.lam > deg.mu:
        x = _maximal_point(state, deg.lam)
        if state.mfs.is_plane:
            link, new = "I", _link_blow_up(state, x)
        else:
            link, new = "II", _link_elementary(state, x, deg)
        center = x
    else:
        values = adjoint_values(state, deg.mu)
        if all(v >= 0 for v in values):
            raise TerminationReached("lambda <= mu and the adjoint class is nef")
        if state.mfs.is_plane:
            raise SarkisovError("adjoint class on the plane cannot fail to be nef")
        if state.mfs.kind is ModelKind.SCROLL and state.mfs.e == 1:
            link, new = "III", _link_contract(state)
            center = new.points.ids[0]
        elif state.mfs.kind is not ModelKind.SCROLL:
            link, new, center = "IV", _link_swap(state), None
        else:
            raise SarkisovError(f"no link available on F{state.mfs.e}")
    after = sarkisov_degree(new)
    if not after < deg:
        raise SarkisovError(f"degree did not drop: {deg} -> {after}")
    return SarkisovLink(link, center, state.mfs, new.mfs, deg, after), new


def _link_blow_up(state: SarkisovState, x: int) -> SarkisovState:
    e_x = state.classes[state.points.index(x)]
    points, classes = _drop_point(state.points, state.classes, x)
    return SarkisovState(MoriFibreSpace.scroll(1), state.net, points, classes,
                         fibre=state.line - e_x, section=e_x,
                         on_section=frozenset(state.points.children(x)))


def _link_elementary(state: SarkisovState, x: int, deg: SarkisovDegree) -> SarkisovState:
    e_x = state.classes[state.points.index(x)]
    F, E = state.fibre, state.section
    new_point = state.points.next_id()
    new_class = F - e_x
    assert intersect(state.net, new_class) == 2 * deg.mu - deg.lam
    points, classes = _drop_point(state.points, state.classes, x)
    points = PointConfig(points.points + (PointNode(new_point),))
    classes = classes + (new_class,)
    e = state.mfs.e if state.mfs.kind is ModelKind.SCROLL else 0
    if e == 0:
        # the ruling through x becomes the (-1)-section
        e_new, section, on_sec = 1, E - e_x, frozenset()
    elif x in state.on_section:
        e_new, section, on_sec = e + 1, E - e_x, state.on_section - {x}
    else:
        # the section now passes through the new point
        e_new, section = e - 1, E + F - e_x
        on_sec = (state.on_section | {new_point}) if e_new > 0 else frozenset()
    return SarkisovState(MoriFibreSpace.scroll(e_new), state.net, points, classes,
                         fibre=F, section=section, on_section=on_sec)


def _link_contract(state: SarkisovState) -> SarkisovState:
    E = state.section
    z = state.points.next_id()
    pts = [PointNode(z)]
    for p in state.points.points:
        if p.id in state.on_section:
            pts.append(PointNode(p.id, z, p.proximate_to | {z}, p.generic))
        else:
            pts.append(p)
    return SarkisovState(MoriFibreSpace.plane(), state.net, PointConfig(tuple(pts)),
                         (E,) + state.classes, line=state.fibre + E)


def _link_swap(state: SarkisovState) -> SarkisovState:
    other = (ModelKind.QUADRIC_B if state.mfs.kind is ModelKind.QUADRIC_A
             else ModelKind.QUADRIC_A)
    return replace(state, mfs=MoriFibreSpace(other), fibre=state.section,
                   section=state.fibre, on_section=frozenset())


@dataclass(frozen=True)
class SarkisovTrace:
    states: tuple[SarkisovState, ...]
    links: tuple[SarkisovLink, ...]

    @property
    def kinds(self) -> list[str]:
        return [lk.kind for lk in self.links]

    @property
    def degrees(self) -> list[SarkisovDegree]:
        return [sarkisov_degree(s) for s in self.states]


def run_sarkisov(net: HomaloidalNet | DivisorClass, config: PointConfig | None = None,
                 max_links: int = 10_000) -> SarkisovTrace:
    if isinstance(net, DivisorClass):
        ok, reason = is_homaloidal(net, config)
        if not ok:
            raise NotHomaloidal(reason)
    state = SarkisovState.from_net(net, config)
    states, links = [state], []
    for _ in range(max_links):
        try:
            link, state = untwist_step(state)
        except TerminationReached:
            break
        states.append(state)
        links.append(link)
    else:
        raise SarkisovError("link limit reached")
    if not state.mfs.is_plane:
        raise SarkisovError(f"run stopped on {state.mfs}, not on the plane")
    return SarkisovTrace(tuple(states), tuple(links))

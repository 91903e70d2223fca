from fractions import Fraction

import pytest
from hypothesis import given, settings

from birat_surf.cremona import de_jonquieres
from birat_surf.errors import NotHomaloidal, SarkisovError, TerminationReached
from birat_surf.lattice import DivisorClass, canonical_class, intersect
from birat_surf.points import PointConfig, PointNode
from birat_surf.sarkisov import (ModelKind, MoriFibreSpace, SarkisovDegree, SarkisovState,
                                 adjoint_values, crepant_coefficient, is_terminal,
                                 nef_adjoint_check, run_sarkisov, sarkisov_degree, untwist_step)

from strategies import type_one_nets

F = Fraction
QUAD = DivisorClass(2, (1, 1, 1))


def test_standard_quadratic_degree():
    state = SarkisovState.from_net(QUAD)
    assert sarkisov_degree(state) == SarkisovDegree(F(2, 3), 1, 3)


def test_standard_quadratic_steps():
    state = SarkisovState.from_net(QUAD)
    expected = [("I", SarkisovDegree(F(1, 2), 1, 2)),
                ("II", SarkisovDegree(F(1, 2), 1, 1)),
                ("II", SarkisovDegree(F(1, 2), 0, None)),
                ("III", SarkisovDegree(F(1, 3), 0, None))]
    for kind, deg in expected:
        link, state = untwist_step(state)
        assert (link.kind, link.after) == (kind, deg)
    assert state.mfs.is_plane
    with pytest.raises(TerminationReached):
        untwist_step(state)


def test_run_lines_is_empty():
    trace = run_sarkisov(DivisorClass(1, (0, 0)))
    assert trace.kinds == []


def test_run_quadratic_kinds():
    assert run_sarkisov(QUAD).kinds == ["I", "II", "II", "III"]


def test_de_jonquieres_starts_at_double_point():
    trace = run_sarkisov(de_jonquieres(3))
    assert trace.links[0].kind == "I" and trace.links[0].center == 0
    degs = trace.degrees
    assert all(b < a for a, b in zip(degs, degs[1:]))


@pytest.mark.parametrize("d, mults", [(5, (2,) * 6), (8, (3,) * 7)])
def test_type_four_links_occur(d, mults):
    trace = run_sarkisov(DivisorClass(d, mults))
    assert "IV" in trace.kinds
    assert trace.degrees[-1] == SarkisovDegree(F(1, 3), 0, None)


def test_not_homaloidal_rejected():
    with pytest.raises(NotHomaloidal):
        run_sarkisov(DivisorClass(3, (1, 1, 1)))


def test_non_monotone_rejected():
    config = PointConfig((PointNode(0), PointNode(1, 0), PointNode(2)))
    with pytest.raises(SarkisovError, match="monotone"):
        SarkisovState.from_net(DivisorClass(2, (0, 1, 1)), config)


def test_adjoint_on_plane():
    lines = SarkisovState.from_net(DivisorClass(1, (0, 0, 0)))
    assert adjoint_values(lines) == [0]
    assert nef_adjoint_check(lines) and is_terminal(lines)
    quad = SarkisovState.from_net(QUAD)
    # the exceptional direction over a maximal point is negative for K + L/mu
    assert crepant_coefficient(quad, 0) == F(-1, 2)
    assert not is_terminal(quad)


def type_four_state():
    # F0 from the plane blown up at two points with the joining line contracted
    return SarkisovState(
        MoriFibreSpace.scroll(0), DivisorClass(2, (0, 1)), PointConfig.general(1),
        (DivisorClass(1, (1, 1)),), fibre=DivisorClass(1, (1, 0)),
        section=DivisorClass(1, (0, 1)))


def test_type_four_trigger():
    state = type_four_state()
    deg = sarkisov_degree(state)
    assert (deg.mu, deg.lam) == (1, 1)
    assert adjoint_values(state) == [0, -1]
    link, new = untwist_step(state)
    assert link.kind == "IV"
    assert sarkisov_degree(new).mu == F(1, 2)
    assert new.fibre == state.section


def test_degree_order_and_text():
    a = SarkisovDegree(F(1, 2), 1, 2)
    b = SarkisovDegree(F(1, 2), 0, None)
    assert b < a
    assert str(a) == "(1/2, 1, 2)" and str(b) == "(1/2, 0, *)"
    assert str(MoriFibreSpace.scroll(1)) == "F1"
    assert MoriFibreSpace.scroll(0).kind is ModelKind.QUADRIC_A


@settings(max_examples=30, deadline=None)
@given(type_one_nets(max_len=5))
def test_untwisting_descends(net):
    trace = run_sarkisov(net)
    degs = trace.degrees
    assert all(b < a for a, b in zip(degs, degs[1:]))
    assert trace.states[-1].mfs.is_plane
    k = canonical_class(net.cls.n)
    for s in trace.states:
        f = s.fibre_class
        assert -intersect(k, f) in (2, 3)

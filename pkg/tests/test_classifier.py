import pytest
from hypothesis import given, strategies as st

from birat_surf.classifier import (BIELLIPTIC_ORDERS, Kappa, Pluricanonical, Subclass,
                                   SurfaceInvariants, castelnuovo_rational, classify,
                                   consistency_check, general_type_plurigenus,
                                   kappa_zero_plurigenus, pluricanonical_behavior)
from birat_surf.errors import BiratError, InconsistentRecord, InsufficientData
from birat_surf.fibration import BdFCase


def test_consistency_examples():
    assert consistency_check(SurfaceInvariants(q=0, p_g=1, chi=2, K2=0, e=24)) == []
    assert consistency_check(SurfaceInvariants(q=0, p_g=0, chi=1, K2=0, e=12)) == []
    assert len(consistency_check(SurfaceInvariants(q=0, p_g=0, chi=2))) == 1


def test_consistency_multiplicativity():
    bad = consistency_check(SurfaceInvariants(plurigenera={2: 1, 4: 0}))
    assert bad == ["P_2 = 1 forces P_4 >= 1"]


def test_castelnuovo():
    assert castelnuovo_rational(0, 0)
    assert not castelnuovo_rational(0, 1)
    assert not castelnuovo_rational(1, 0)


def p12(value, **kw):
    return SurfaceInvariants(plurigenera={12: value}, **kw)


def test_classify_examples():
    c = classify(p12(1, p_g=1, q=0))
    assert (c.subclass, c.canonical_order) == (Subclass.K3, 1)
    c = classify(p12(1, p_g=0, q=0))
    assert (c.subclass, c.canonical_order) == (Subclass.ENRIQUES, 2)
    c = classify(p12(1, p_g=1, q=2))
    assert c.subclass is Subclass.ABELIAN
    c = classify(p12(1, p_g=0, q=1))
    assert c.subclass is Subclass.BIELLIPTIC and c.admissible_orders == BIELLIPTIC_ORDERS
    c = classify(p12(1, p_g=0, q=1, bdf_case=BdFCase("iii")))
    assert c.canonical_order == 4
    assert classify(p12(0, q=0)).subclass is Subclass.RATIONAL
    assert classify(p12(0, q=2)).subclass is Subclass.IRRATIONAL_RULED
    assert classify(p12(3, K2=0, minimal=True)).kappa is Kappa.ONE
    assert classify(p12(3, K2=2, minimal=True)).kappa is Kappa.TWO


def test_impossible_case():
    with pytest.raises(InconsistentRecord, match="impossible case"):
        classify(p12(1, p_g=1, q=1))


def test_insufficient():
    with pytest.raises(InsufficientData):
        classify(SurfaceInvariants(q=0, p_g=0))
    with pytest.raises(InsufficientData):
        classify(p12(2, K2=1))
    assert classify(p12(0)).undischarged


def test_kappa_zero_plurigenera_checked():
    with pytest.raises(InconsistentRecord):
        classify(SurfaceInvariants(q=0, p_g=0, plurigenera={12: 1, 3: 1}))


def test_enriques_plurigenera():
    c = classify(p12(1, p_g=0, q=0))
    assert [c.plurigenus(n) for n in range(1, 7)] == [0, 1, 0, 1, 0, 1]
    assert kappa_zero_plurigenus(Subclass.ENRIQUES, 5) == 0
    assert kappa_zero_plurigenus(Subclass.BIELLIPTIC, 6, 3) == 1
    with pytest.raises(BiratError):
        kappa_zero_plurigenus(Subclass.BIELLIPTIC, 6)


def test_general_type_plurigenus():
    assert general_type_plurigenus(1, 1, 2) == 2
    assert general_type_plurigenus(3, 2, 3) == 9
    assert general_type_plurigenus(1, 1, 12) == 67


def test_pluricanonical():
    assert Pluricanonical.BASE_POINT_FREE in pluricanonical_behavior(5, 3, 3)
    assert Pluricanonical.EXCEPTION in pluricanonical_behavior(3, 2, 1)
    assert Pluricanonical.BIRATIONAL_MORPHISM in pluricanonical_behavior(6, 2, 1)
    with pytest.raises(BiratError):
        pluricanonical_behavior(2, 1, 1)


def test_from_json():
    s = SurfaceInvariants.from_json({"q": 0, "p_g": 0, "plurigenera": {"12": 1}})
    assert s.P(12) == 1 and s.P(1) == 0
    with pytest.raises(BiratError):
        SurfaceInvariants.from_json({"q": 0, "colour": 1})
    with pytest.raises(BiratError):
        SurfaceInvariants.from_json({"q": "zero"})


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4), st.integers(-2, 4),
       st.booleans())
def test_classify_total(q, p_g, P12, K2, minimal):
    """Every record either classifies or raises one of the two documented errors."""
    s = SurfaceInvariants(q=q, p_g=p_g, K2=K2, plurigenera={12: P12}, minimal=minimal)
    try:
        c = classify(s)
    except (InconsistentRecord, InsufficientData):
        return
    expected = {0: Kappa.MINUS_INFINITY, 1: Kappa.ZERO}.get(P12)
    if expected is not None:
        assert c.kappa is expected
    else:
        assert c.kappa is (Kappa.ONE if K2 == 0 else Kappa.TWO)

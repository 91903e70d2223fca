import numpy as np
import pytest
from hypothesis import given, strategies as st

from birat_surf.errors import ConfigurationMismatch
from birat_surf.lattice import (DivisorClass, canonical_class, classes_gram, gram_matrix,
                                intersect, numerical_record, riemann_roch_chi)
from birat_surf.cremona import quadratic_transform

from strategies import class_pairs, classes


def numpy_pairing(a, b):
    # oracle: v^T diag(1, -1, ..) w in floating point
    g = np.diag([1.0] + [-1.0] * a.n)
    return int(round(np.array(a.vector(), float) @ g @ np.array(b.vector(), float)))


def test_intersect_examples():
    q = DivisorClass(2, (1, 1, 1))
    assert intersect(q, q) == 1
    assert intersect(DivisorClass(1, (0, 0, 0)), DivisorClass.exceptional(0, 3)) == 0
    assert intersect(DivisorClass(3, (1,) * 5), DivisorClass(3, (2, 1, 1, 1, 0))) == 4


def test_exceptional_square():
    e = DivisorClass.exceptional(1, 4)
    assert e == DivisorClass(0, (0, -1, 0, 0))
    assert intersect(e, e) == -1


def test_mismatch_errors():
    with pytest.raises(ConfigurationMismatch):
        intersect(DivisorClass(1, (0,)), DivisorClass(1, (0, 0)))
    with pytest.raises(ConfigurationMismatch):
        intersect(DivisorClass(1, (0,), key="a"), DivisorClass(1, (0,), key="b"))


def test_canonical_class():
    assert canonical_class(0) == DivisorClass(-3, ())
    assert canonical_class(3) == DivisorClass(-3, (-1, -1, -1))
    assert intersect(canonical_class(0), DivisorClass(1, ())) == -3


def test_numerical_record():
    r = numerical_record(DivisorClass(2, (1, 1, 1)))
    assert (r.nu, r.genus) == (1, 0)
    r = numerical_record(DivisorClass(0, (0, 0)))
    assert (r.nu, r.genus) == (0, 1)
    r = numerical_record(DivisorClass(6, (2,) * 8))
    assert (r.nu, r.genus) == (4, 2)


def test_riemann_roch():
    assert riemann_roch_chi(DivisorClass(0, ())) == 1
    assert riemann_roch_chi(DivisorClass(1, ())) == 3
    assert riemann_roch_chi(DivisorClass(2, (1, 1, 1))) == 3


def test_gram_helpers():
    g = gram_matrix(3)
    assert [list(r) for r in g] == [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    cs = [DivisorClass.line(2), DivisorClass.exceptional(0, 2)]
    assert classes_gram(cs) == [[1, 0], [0, -1]]


def test_json_round_trip():
    c = DivisorClass(5, (2, 2, 2))
    assert DivisorClass.from_json(c.to_json()) == c
    with pytest.raises(ValueError):
        DivisorClass.from_json({"degree": 1.5, "mults": []})
    with pytest.raises(ValueError):
        DivisorClass.from_json({"degree": 1})


@given(class_pairs())
def test_pairing_matches_numpy(pair):
    a, b = pair
    assert intersect(a, b) == numpy_pairing(a, b)


@given(class_pairs(), st.integers(-5, 5))
def test_bilinear_and_symmetric(pair, k):
    a, b = pair
    assert intersect(a, b) == intersect(b, a)
    assert intersect(k * a + b, b) == k * intersect(a, b) + intersect(b, b)


@given(classes())
def test_adjunction_parity(c):
    k = canonical_class(c.n)
    assert intersect(c, c + k) % 2 == 0
    # 2g - 2 = L.(L + K)
    assert 2 * numerical_record(c).genus - 2 == intersect(c, c + k)


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(
    classes(n), classes(n), st.permutations(range(n)).map(lambda p: p[:3]))))
def test_quadratic_transform_is_isometry(data):
    a, b, base = data
    ta, tb = quadratic_transform(a, base), quadratic_transform(b, base)
    assert intersect(ta, tb) == intersect(a, b)
    assert numerical_record(ta) == numerical_record(a)
    k = canonical_class(a.n)
    assert intersect(ta, k) == intersect(a, k)
    # involution
    assert quadratic_transform(ta, base) == a

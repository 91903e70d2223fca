import itertools

import pytest
from hypothesis import given, strategies as st

from birat_surf.cone import (collinear_blowup_cone, enumerate_minus_one_classes,
                             exe_cone_membership, exe_pairing, feasible_point,
                             hirzebruch_cone, in_cone, is_minus_one_class,
                             neg_curve_is_extremal, reduces_to_exceptional)
from birat_surf.errors import BiratError
from birat_surf.lattice import DivisorClass


def test_neg_curve_extremal_examples():
    e1 = DivisorClass.exceptional(0, 3)
    sample = [DivisorClass.line(3)] + [DivisorClass.exceptional(i, 3) for i in range(3)]
    assert neg_curve_is_extremal(e1, sample)
    rep = collinear_blowup_cone()
    assert neg_curve_is_extremal(DivisorClass(1, (1, 1, 1)), [DivisorClass.exceptional(i, 3)
                                                              for i in range(3)])
    assert rep.extremal == (True, True, True, True)
    with pytest.raises(BiratError):
        neg_curve_is_extremal((1, 0), [(0, 1)], gram=((0, 1), (1, -2)))


@pytest.mark.parametrize("n, squares", [(0, (0, 0)), (1, (0, -1)), (2, (0, -2)), (5, (0, -5))])
def test_hirzebruch(n, squares):
    c = hirzebruch_cone(n)
    assert c.self_intersections() == squares
    assert c.extremal()


def test_collinear_report():
    rep = collinear_blowup_cone()
    assert rep.anticanonical_square == 6
    assert rep.minus_k_degrees == (0, 1, 1, 1)
    assert rep.k_trivial_rays == ("C",)
    assert rep.ok


def test_feasible_point():
    assert feasible_point([[1, 1]], [2]) is not None
    assert feasible_point([[1, 0], [1, 0], [1, 0], [1, -1]], [1, 0, 0, 0]) is None
    assert feasible_point([[1, 1]], [-1]) is None


def brute_in_cone_2d(v, gens, bound=12):
    # oracle for small integer examples: search rational coefficients with denominator <= 6
    for den in range(1, 7):
        for coeffs in itertools.product(range(bound * den + 1), repeat=len(gens)):
            if all(sum(c * g[k] for c, g in zip(coeffs, gens)) == den * v[k]
                   for k in range(len(v))):
                return True
    return False


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-3, 3)), min_size=1, max_size=3),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_in_cone_against_search(gens, v):
    found = brute_in_cone_2d(v, gens, bound=6)
    if found:
        assert in_cone(v, gens)


def test_minus_one_counts():
    counts = [len(enumerate_minus_one_classes(n)) for n in range(1, 9)]
    assert counts == [1, 3, 6, 10, 16, 27, 56, 240]


def orbit_oracle(n):
    """(-1)-classes as the orbit of E_1 under permutations and the standard quadratic map."""
    m = max(n, 3)
    start = (0,) + tuple(-1 if i == 0 else 0 for i in range(m))
    seen, todo = {start}, [start]
    while todo:
        d, *ms = todo.pop()
        for i, j, k in itertools.combinations(range(m), 3):
            new = list(ms)
            new[i], new[j], new[k] = d - ms[j] - ms[k], d - ms[i] - ms[k], d - ms[i] - ms[j]
            v = (2 * d - ms[i] - ms[j] - ms[k],) + tuple(new)
            if v not in seen:
                seen.add(v)
                todo.append(v)
        for i, j in itertools.combinations(range(m), 2):
            new = list(ms)
            new[i], new[j] = new[j], new[i]
            v = (d,) + tuple(new)
            if v not in seen:
                seen.add(v)
                todo.append(v)
    if m > n:
        # classes living on the first n points only
        seen = {v for v in seen if not any(v[1 + n:])}
        seen = {v[:1 + n] for v in seen}
    return seen


@pytest.mark.parametrize("n", range(1, 9))
def test_minus_one_against_orbit(n):
    ours = {c.vector() for c in enumerate_minus_one_classes(n)}
    assert ours == orbit_oracle(n)


@pytest.mark.parametrize("n", [3, 6, 7])
def test_minus_one_reduce(n):
    for c in enumerate_minus_one_classes(n):
        assert is_minus_one_class(c) and reduces_to_exceptional(c)


def test_exe_examples():
    assert exe_cone_membership(1, 0, 0)
    assert not exe_cone_membership(1, -1, 0)
    assert exe_cone_membership(0, 0, 1)
    assert exe_pairing((1, -1, 0), (1, -1, 0)) == -2


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_exe_against_gram(a, b, c):
    gram = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    v = (a, b, c)
    sq = sum(v[i] * gram[i][j] * v[j] for i in range(3) for j in range(3))
    h = sum(v[i] * gram[i][j] * (1, 1, 0)[j] for i in range(3) for j in range(3))
    assert exe_pairing(v, v) == sq
    expected = (a, b, c) == (0, 0, 0) or (sq >= 0 and h > 0)
    assert exe_cone_membership(a, b, c) == expected

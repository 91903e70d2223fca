"""Shared hypothesis strategies."""
import random

from hypothesis import strategies as st

from birat_surf.cremona import HomaloidalNet, quadratic_transform
from birat_surf.lattice import DivisorClass
from birat_surf.points import PointConfig


def classes(n=None, bound=12):
    sizes = st.just(n) if n is not None else st.integers(0, 8)
    return sizes.flatmap(lambda k: st.builds(
        DivisorClass, st.integers(-bound, bound),
        st.tuples(*[st.integers(-bound, bound)] * k)))


def class_pairs(max_n=8, bound=12):
    return st.integers(0, max_n).flatmap(
        lambda k: st.tuples(classes(k, bound), classes(k, bound)))


def random_type_one_net(rng: random.Random, n: int, length: int) -> HomaloidalNet:
    """Lines pushed through ``length`` random type-I maps on n general points."""
    cls = DivisorClass.line(n)
    for _ in range(length):
        cls = quadratic_transform(cls, rng.sample(range(n), 3))
    return HomaloidalNet(cls, PointConfig.general(n))


@st.composite
def type_one_nets(draw, max_len=8, n=8):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    length = draw(st.integers(0, max_len))
    return random_type_one_net(random.Random(seed), n, length)

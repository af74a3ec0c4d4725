from math import gcd

import pytest
from hypothesis import given, strategies as st

from latkit.a2 import (A2Vector, a2_orthogonal_generator, a2_orthogonal_square, a2_report,
                       brute_force_orthogonal_square, orthogonal_gcd, same_square_embedding_equivalence,
                       square_branch)
from latkit.core import A2
from latkit.errors import NotPrimitive, ZeroVector
from latkit.suite import orbit_representatives, same_square_classes

coords = st.integers(-100, 100)


@st.composite
def primitive(draw):
    a, b = draw(coords), draw(coords)
    if gcd(a, b) != 1:
        a, b = 1, b
    return A2Vector(a, b)


class TestGenerator:
    @pytest.mark.parametrize("v, u, sq", [((1, 0), (1, 2), 6), ((1, -1), (1, 1), 2), ((1, 1), (1, -1), 6)])
    def test_examples(self, v, u, sq):
        gen = a2_orthogonal_generator(v)
        assert gen.coords == u and gen.square == sq
        assert A2.pair(list(v), list(u)) == 0

    def test_errors(self):
        with pytest.raises(NotPrimitive):
            a2_orthogonal_generator((2, 4))
        with pytest.raises(ZeroVector):
            a2_orthogonal_generator((0, 0))

    @given(primitive())
    def test_generator_is_primitive_orthogonal_canonical(self, v):
        u = a2_orthogonal_generator(v)
        assert A2.pair(list(v.coords), list(u.coords)) == 0
        assert gcd(u.a, u.b) == 1
        assert u.a > 0 or (u.a == 0 and u.b > 0)
        assert u.square == a2_orthogonal_square(v)

    @given(primitive())
    def test_square_via_gram(self, v):
        assert v.square == A2.square(list(v.coords))


class TestSquare:
    @pytest.mark.parametrize("v, sq, branch", [((1, 0), 6, "3v²"), ((1, -1), 2, "v²/3"), ((1, 3), 42, "3v²")])
    def test_examples(self, v, sq, branch):
        assert a2_orthogonal_square(v) == sq
        assert brute_force_orthogonal_square(v) == sq
        assert square_branch(v) == branch

    @given(primitive())
    def test_matches_scan(self, v):
        assert a2_orthogonal_square(v) == brute_force_orthogonal_square(v)

    @given(primitive())
    def test_branch_dichotomy(self, v):
        assert (v.square % 3 == 0) == (orthogonal_gcd(v) == 3)
        assert orthogonal_gcd(v) in (1, 3)

    def test_report(self):
        assert a2_report((1, 0)) == {"v": [1, 0], "u": [1, 2], "u_squared": 6, "branch": "3v²"}


class TestOrbits:
    @pytest.mark.parametrize("v, w, found", [((1, 0), (0, 1), True), ((1, 0), (1, -1), False),
                                             ((1, 2), (2, 1), True)])
    def test_examples(self, v, w, found):
        h = same_square_embedding_equivalence(v, w)
        assert (h is not None) == found
        if h is not None:
            assert tuple(h(list(v))) == tuple(w)

    def test_single_orbit_below_182(self):
        for sq, vs in same_square_classes(180).items():
            assert len(orbit_representatives(vs)) == 1, sq

    def test_square_182_splits(self):
        # 182 = 2 * 7 * 13: two primes that split in Z[omega] give two orbits
        v, w = A2Vector(-11, -6), A2Vector(-10, -9)
        assert v.square == w.square == 182
        assert same_square_embedding_equivalence(v, w) is None
        assert a2_orthogonal_square(v) == a2_orthogonal_square(w) == 546
        assert len(orbit_representatives(same_square_classes(182)[182])) == 2

    def test_equal_squares_have_isometric_complements(self):
        for vs in same_square_classes(200).values():
            assert len({brute_force_orthogonal_square(v) for v in vs}) == 1

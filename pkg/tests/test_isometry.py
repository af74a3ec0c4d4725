from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from latkit.core import A2, A2_NEG, E8_NEG, U, Lattice, diagonal, odd_unimodular, power
from latkit.errors import InvalidIsometry, NotDefinite, TooLarge
from latkit.isometry import Isometry, definite_isometries, identity_isometry, short_vectors


def brute_isometries(lat, bound=2):
    """All integer matrices with entries in [-bound, bound] preserving the form."""
    g = np.array(lat.gram)
    n = lat.rank
    found = set()
    for entries in product(range(-bound, bound + 1), repeat=n * n):
        m = np.array(entries).reshape(n, n)
        if (m.T @ g @ m == g).all():
            found.add(tuple(map(tuple, m.tolist())))
    return found


@pytest.mark.parametrize("lat, order", [(A2, 12), (diagonal(2), 2), (diagonal(2, 4), 4),
                                        (A2_NEG, 12), (diagonal(1, 1), 8), (Lattice(((2, 1), (1, 4))), 4)])
def test_rank_two_groups_match_brute_force(lat, order):
    ours = {h.matrix for h in definite_isometries(lat)}
    assert len(ours) == order
    if lat.rank == 2:
        assert ours == brute_isometries(lat)


def test_odd_cube():
    assert len(definite_isometries(odd_unimodular(3, 0))) == 48


def test_indefinite_rejected():
    with pytest.raises(NotDefinite):
        definite_isometries(U)


def test_cap():
    with pytest.raises(TooLarge):
        definite_isometries(power(E8_NEG, 2))


@pytest.mark.parametrize("lat", [A2, diagonal(2, 4), Lattice(((2, 1, 0), (1, 2, 1), (0, 1, 4)))])
def test_group_axioms(lat):
    group = definite_isometries(lat)
    keys = {h.matrix for h in group}
    ident = identity_isometry(lat)
    assert ident.matrix in keys and ident.negate().matrix in keys
    for a in group:
        assert a.inverse().matrix in keys
        for b in group:
            assert a.compose(b).matrix in keys


def test_contract_checked():
    with pytest.raises(InvalidIsometry):
        Isometry(A2, A2, [[1, 1], [0, 1]])
    with pytest.raises(InvalidIsometry):
        Isometry(diagonal(4), diagonal(4), [[2]])  # wrong form; also not unimodular


@given(st.integers(2, 12))
def test_short_vectors_match_box(bound):
    lat = Lattice(((2, 1, 0), (1, 3, 1), (0, 1, 4)))
    ours = set(short_vectors(lat, bound))
    box = {v for v in product(range(-4, 5), repeat=3) if any(v) and lat.square(list(v)) <= bound}
    assert ours == box


def test_short_vectors_exact():
    assert len(short_vectors(A2, 2, exact=True)) == 6
    with pytest.raises(NotDefinite):
        short_vectors(A2_NEG, 2)

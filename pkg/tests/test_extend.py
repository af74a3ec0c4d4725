from itertools import product

import pytest

from latkit import intmat
from latkit.core import A2_NEG, U, catalog, odd_unimodular, power
from latkit.embed import INCONCLUSIVE, OBSTRUCTED, PrimitiveSublattice, block_sublattice
from latkit.errors import InvalidIsometry, NotPrimitive
from latkit.discform import Answer
from latkit.extend import (Incompatible, coprime_glue_triviality, extend_isometry, extension_criterion,
                           minus_one_obstruction, split_lattice)
from latkit.isometry import Isometry, definite_isometries
from latkit.suite import coprime_control, coprime_fixture, i30_split, og10_split, u_split


def o_u():
    return [Isometry(U, U, m) for m in ([[1, 0], [0, 1]], [[-1, 0], [0, -1]],
                                         [[0, 1], [1, 0]], [[0, -1], [-1, 0]])]


def ambient_group(split):
    return o_u() if split.total == U else definite_isometries(split.total)


def restricts(split, h, f, g):
    """h(A basis) and h(T basis) are the images prescribed by g and f."""
    for basis, m in ((split.algebraic.basis, g.matrix), (split.transcendental.basis, f.matrix)):
        for j, v in enumerate(basis):
            want = [sum(m[i][j] * basis[i][t] for i in range(len(basis))) for t in range(split.total.rank)]
            if list(h(list(v))) != want:
                return False
    return True


class TestExtension:
    def test_u_swap(self):
        split = u_split()
        h = extend_isometry(split, split, [[-1]], [[1]])
        assert h.matrix == ((0, 1), (1, 0))

    def test_u_identity(self):
        split = u_split()
        assert extend_isometry(split, split, [[1]], [[1]]).matrix == ((1, 0), (0, 1))

    def test_i30_incompatible(self):
        split = i30_split()
        result = extend_isometry(split, split, [[-1, 0], [0, -1]], [[1]])
        assert isinstance(result, Incompatible) and not result
        w = result.witness
        assert w["image_via_f"] != w["expected_partner"]

    def test_invalid_pieces(self):
        split = u_split()
        with pytest.raises(InvalidIsometry):
            extend_isometry(split, split, [[2]], [[1]])

    @pytest.mark.parametrize("make", [u_split, i30_split])
    def test_extends_iff_some_ambient_isometry_restricts(self, make):
        split = make()
        group = ambient_group(split)
        for f, g in product(definite_isometries(split.t_lattice), definite_isometries(split.a_lattice)):
            h = extend_isometry(split, split, f, g)
            exists = any(restricts(split, k, f, g) for k in group)
            assert (not isinstance(h, Incompatible)) == exists
            if exists:
                assert restricts(split, h, f, g)
                pulled = intmat.matmul(intmat.matmul(intmat.transpose(h.matrix), split.total.rows()), h.matrix)
                assert pulled == split.total.rows()

    def test_composition(self):
        split = i30_split()
        pairs = list(product(definite_isometries(split.t_lattice), definite_isometries(split.a_lattice)))
        for (f1, g1), (f2, g2) in product(pairs, repeat=2):
            h1 = extend_isometry(split, split, f1, g1)
            h2 = extend_isometry(split, split, f2, g2)
            h = extend_isometry(split, split, f2.compose(f1), g2.compose(g1))
            if not any(isinstance(x, Incompatible) for x in (h1, h2, h)):
                assert h.matrix == h2.compose(h1).matrix


class TestCriterion:
    def test_og10_configuration(self):
        h = og10_split()
        crit = extension_criterion(h, h)
        assert crit.applies and crit.status == Answer.THEOREM_ASSERTED

    def test_genus_mismatch(self):
        h = og10_split()
        og10 = h.total
        other = split_lattice(og10, PrimitiveSublattice(og10, block_sublattice(og10, 0, 4).basis))
        crit = extension_criterion(h, other)
        assert not crit.applies and "genus mismatch" in crit.reasons

    def test_definite(self):
        crit = extension_criterion(i30_split(), i30_split())
        assert "not indefinite" in crit.reasons


class TestSignatureObstruction:
    def test_examples(self):
        assert minus_one_obstruction((2, 20)) == OBSTRUCTED
        assert minus_one_obstruction((2, 2)) == INCONCLUSIVE
        assert minus_one_obstruction((21, 2)) == OBSTRUCTED

    @pytest.mark.parametrize("lat, flip", [(U, [[1, 0], [0, -1]]),
                                           (power(U, 2), [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
                                           (odd_unimodular(1, 1), [[0, 1], [1, 0]])])
    def test_never_obstructs_self_dual(self, lat, flip):
        # the explicit matrix is an isometry L -> L(-1)
        neg = [[-x for x in row] for row in lat.rows()]
        assert intmat.matmul(intmat.matmul(intmat.transpose(flip), neg), flip) == lat.rows()
        assert minus_one_obstruction(lat) == INCONCLUSIVE


class TestCoprime:
    def test_k3n2_fixture(self):
        t, h, sub = coprime_fixture()
        res = coprime_glue_triviality(t, h, sub)
        assert res.trivial and res.certified_by_gcd
        assert res.complement_disc_form.invariant_factors == (6,)
        assert res.split_verified == Answer.YES

    def test_og10_block(self):
        og10 = catalog("OG10")
        sub = block_sublattice(og10, 22, 24)
        res = coprime_glue_triviality(A2_NEG, og10, sub)
        # the complement is unimodular, so nothing of D(T) is glued inside T + T-perp,
        # while all of D(T) is matched with D(OG10)
        assert res.glue_order == 1
        assert res.embedding_subgroup_order == 3 and not res.trivial

    def test_control_in_u(self):
        res = coprime_glue_triviality(*coprime_control())
        assert res.glue_order == 2
        assert res.embedding_subgroup_order == 1

    def test_not_primitive(self):
        with pytest.raises(NotPrimitive):
            coprime_glue_triviality(catalog("[8]"), U, [[2, 2]])

    def test_wrong_lattice(self):
        with pytest.raises(ValueError):
            coprime_glue_triviality(catalog("[4]"), U, [[1, 1]])

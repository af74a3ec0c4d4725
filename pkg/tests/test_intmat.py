from fractions import Fraction

import sympy
from hypothesis import given
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from latkit import intmat

from conftest import int_matrices


def sympy_invariants(a):
    d = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    k = min(d.shape)
    return sorted(abs(int(d[i, i])) for i in range(k) if d[i, i] != 0)


@given(int_matrices())
def test_smith_form_identity_and_chain(a):
    snf = intmat.smith_normal_form(a)
    assert intmat.matmul(intmat.matmul(snf.left, a), snf.right) == snf.diagonal
    assert abs(intmat.det(snf.left)) == 1
    assert abs(intmat.det(snf.right)) == 1
    assert intmat.matmul(snf.right, snf.right_inv) == intmat.identity(len(snf.right))
    nonzero = [d for d in snf.factors if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert snf.factors[len(nonzero):] == [0] * (len(snf.factors) - len(nonzero))


@given(int_matrices())
def test_invariants_match_sympy(a):
    assert sorted(intmat.invariant_factors(a)) == sympy_invariants(a)


@given(int_matrices(max_rows=5, max_cols=5))
def test_det_rank_match_sympy(a):
    m = sympy.Matrix(a)
    assert intmat.rank(a) == m.rank()
    if m.shape[0] == m.shape[1]:
        assert intmat.det(a) == m.det()


@given(int_matrices())
def test_inverse(a):
    n = min(len(a), len(a[0]))
    sq = [row[:n] for row in a[:n]]
    if intmat.det(sq) == 0:
        return
    inv = intmat.inverse(sq)
    assert intmat.matmul(sq, inv) == intmat.identity(n)
    assert inv == [[Fraction(int(x.p), int(x.q)) for x in row] for row in sympy.Matrix(sq).inv().tolist()]


@given(int_matrices())
def test_hermite_spans_same_lattice(a):
    h = intmat.hermite_rows(a)
    assert len(h) == intmat.rank(a)
    if not h:
        return
    # same row lattice iff adding the rows of a to h changes nothing
    both = [list(r) for r in a] + h
    assert intmat.invariant_factors(both) == intmat.invariant_factors(h)
    assert intmat.invariant_factors(h) == intmat.invariant_factors(a)


@given(int_matrices())
def test_kernel(a):
    n = len(a[0])
    k = intmat.integer_kernel(a, n)
    assert len(k) == n - intmat.rank(a)
    for v in k:
        assert intmat.matvec(a, v) == [0] * len(a)
    if k:
        assert intmat.lattice_index(k) == 1


@given(int_matrices())
def test_saturation_is_primitive_and_same_span(a):
    if not any(any(r) for r in a):
        return
    s = intmat.saturation(a)
    assert intmat.lattice_index(s) == 1
    assert intmat.rank(s) == intmat.rank(a) == intmat.rank(s + [list(r) for r in a])


def test_subgroup_order():
    assert intmat.subgroup_order([[1, 0]], [2, 4]) == 2
    assert intmat.subgroup_order([[0, 1]], [2, 4]) == 4
    assert intmat.subgroup_order([[1, 2]], [2, 4]) == 2
    assert intmat.subgroup_order([], [2, 4]) == 1


def test_frac_mod():
    assert intmat.frac_mod(Fraction(-1, 3)) == Fraction(2, 3)
    assert intmat.frac_mod(Fraction(7, 2), 2) == Fraction(3, 2)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from latkit.core import disc, signature
from latkit.dsl import (Atom, Diag, Gram, OddUnimodular, Power, Rescale, Sum, evaluate, lattice_from_text,
                        parse_lattice_expr, pretty)
from latkit.errors import NonIntegralRescale, ParseError, UnknownName


def test_og10_expression():
    lat = lattice_from_text("U^3 + E8(-1)^2 + A2(-1)")
    assert lat.rank == 24 and disc(lat) == 3 and signature(lat) == (3, 21)


def test_diagonal():
    assert lattice_from_text("[-2]").gram == ((-2,),)
    assert lattice_from_text(" [ 1 , -1 ] ").gram == ((1, 0), (0, -1))


def test_other_atoms():
    assert lattice_from_text("gram[[0,1],[1,0]]").gram == ((0, 1), (1, 0))
    assert signature(lattice_from_text("I(21,2)")) == (21, 2)
    assert disc(lattice_from_text("K3n(3)")) == 4
    assert lattice_from_text("A2(2)").gram == ((4, -2), (-2, 4))


def test_ast_shape():
    assert parse_lattice_expr("U^3 + E8(-1)") == Sum((Power(Atom("U"), 3), Rescale(Atom("E8"), Fraction(-1))))


@pytest.mark.parametrize("text, offset, expected", [
    ("U^", 2, "unsigned integer"),
    ("U +", 3, "name"),
    ("[1,", 3, "integer"),
    ("U U", 2, "end of input"),
    ("I(2,", 4, "unsigned integer"),
])
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as err:
        parse_lattice_expr(text)
    assert err.value.position == offset
    assert expected in err.value.expected


def test_unknown_name():
    with pytest.raises(UnknownName):
        parse_lattice_expr("U + D4")


def test_bad_rescale():
    with pytest.raises(NonIntegralRescale):
        lattice_from_text("A2(1/2)")


@pytest.mark.parametrize("text", ["U^3 + E8(-1)^2 + A2(-1)", "[-2]", "gram[[0,1],[1,0]]", "I(21,2)",
                                  "K3n(2)", "A2(1/2)", "[1,2,3]^2 + U"])
def test_canonical_round_trip(text):
    assert pretty(parse_lattice_expr(text)) == text


names = st.sampled_from(["U", "A2", "E8", "OG10", "K3", "Mukai"])
ints = st.integers(-9, 9)
atoms = st.one_of(
    names.map(Atom),
    st.integers(2, 6).map(lambda n: Atom("K3n", n)),
    st.lists(ints.filter(bool), min_size=1, max_size=3).map(lambda xs: Diag(tuple(xs))),
    st.tuples(st.integers(0, 4), st.integers(0, 4)).map(lambda pq: OddUnimodular(*pq)),
    st.just(Gram(((0, 1), (1, 0)))),
)
scaled = st.one_of(atoms, st.tuples(names.map(Atom), st.fractions(max_denominator=4).filter(bool))
                   .map(lambda t: Rescale(*t)))
terms = st.one_of(scaled, st.tuples(scaled, st.integers(1, 4)).map(lambda t: Power(*t)))
exprs = st.one_of(terms, st.lists(terms, min_size=2, max_size=4).map(lambda ts: Sum(tuple(ts))))


@given(exprs)
def test_parse_pretty_identity(node):
    assert parse_lattice_expr(pretty(node)) == node


@given(exprs)
def test_whitespace_is_insignificant(node):
    text = pretty(node)
    assert parse_lattice_expr(" " + text.replace("+", " + ").replace("^", " ^ ") + " ") == node


def test_evaluate_power_is_sum():
    assert evaluate(parse_lattice_expr("A2^2")) == evaluate(parse_lattice_expr("A2 + A2"))

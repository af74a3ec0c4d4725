from fractions import Fraction

import pytest

from latkit.core import A2, U, rescale
from latkit.core import discriminant_group
from latkit.embed import saturate
from latkit.isometry import definite_isometries
from latkit import jsonio


def test_lattice_round_trip():
    data = jsonio.lattice_to_json(A2)
    assert data == {"name": "A2", "gram": [[2, -1], [-1, 2]]}
    assert jsonio.lattice_from_json(data) == A2


def test_lattice_from_expression():
    assert jsonio.lattice_from_json("U") == U


@pytest.mark.parametrize("gram", [[[1.0]], [[True]], [["1"]], [[2 ** 53]], "x"])
def test_rejects_bad_entries(gram):
    with pytest.raises(ValueError):
        jsonio.lattice_from_json({"gram": gram})


def test_sublattice_round_trip():
    sub = saturate(U, [[1, 1]])
    assert jsonio.sublattice_from_json(jsonio.sublattice_to_json(sub)) == sub


def test_glue_graph():
    graph = [([Fraction(1, 2)], [Fraction(-1, 2), Fraction(3)])]
    data = jsonio.glue_graph_to_json(graph)
    assert data == [[["1/2"], ["-1/2", "3/1"]]]
    assert jsonio.glue_graph_from_json(data) == graph
    with pytest.raises(ValueError):
        jsonio.rational_from_str(0.5)


def test_torsion_form():
    form = discriminant_group(rescale(A2, 2))
    assert jsonio.torsion_form_from_json(jsonio.torsion_form_to_json(form)) == form


def test_isometry():
    h = definite_isometries(A2)[3]
    back = jsonio.isometry_from_json(jsonio.isometry_to_json(h))
    assert back.matrix == h.matrix and back.source == A2


def test_extend_case():
    split, split2, f, g = jsonio.load_extend_case({"total": "U", "algebraic": [[1, 1]], "f": [[-1]], "g": [[1]]})
    assert split is split2 and f == [[-1]]


def test_dumps_is_deterministic():
    assert jsonio.dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'

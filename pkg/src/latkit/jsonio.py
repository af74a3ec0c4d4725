"""JSON encodings for lattices, sublattices, glue graphs, forms and isometries."""

import json
from fractions import Fraction

from .core import Lattice
from .embed import PrimitiveSublattice
from .isometry import Isometry
from .torsion import TorsionQuadraticForm

MAX_EXACT = 2 ** 53 - 1


def _check_int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"{where}: expected an integer, got {x!r}")
    if abs(x) > MAX_EXACT:
        raise ValueError(f"{where}: {x} does not round-trip exactly through JSON numbers")
    return x


def _int_matrix(rows, where):
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError(f"{where}: expected a list of integer lists")
    return [[_check_int(x, where) for x in r] for r in rows]


def lattice_to_json(lattice):
    out = {"gram": lattice.rows()}
    if lattice.name:
        out = {"name": lattice.name, **out}
    return out


def lattice_from_json(data):
    """Accepts a lattice object, or a string in the expression language."""
    if isinstance(data, str):
        from .dsl import lattice_from_text
        return lattice_from_text(data)
    if not isinstance(data, dict) or "gram" not in data:
        raise ValueError("lattice JSON needs a 'gram' field")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError("lattice name must be a string")
    return Lattice(tuple(map(tuple, _int_matrix(data["gram"], "gram"))), name)


def sublattice_to_json(sub):
    return {"ambient": lattice_to_json(sub.ambient), "basis": [list(r) for r in sub.basis]}


def sublattice_from_json(data):
    return PrimitiveSublattice(lattice_from_json(data["ambient"]), _int_matrix(data["basis"], "basis"))


def rational_to_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s):
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string 'a/b', got {s!r}")
    value = Fraction(s)
    if "/" in s and int(s.split("/")[1]) <= 0:
        raise ValueError(f"denominator must be positive in {s!r}")
    return value


def glue_graph_to_json(graph):
    return [[[rational_to_str(t) for t in x], [rational_to_str(t) for t in y]] for x, y in graph]


def glue_graph_from_json(data):
    return [([rational_from_str(t) for t in x], [rational_from_str(t) for t in y]) for x, y in data]


def torsion_form_to_json(form):
    return form.to_json()


def torsion_form_from_json(data):
    return TorsionQuadraticForm.from_json(data)


def isometry_to_json(h):
    return {"matrix": [list(r) for r in h.matrix], "source": lattice_to_json(h.source),
            "target": lattice_to_json(h.target)}


def isometry_from_json(data):
    return Isometry(lattice_from_json(data["source"]), lattice_from_json(data["target"]),
                    _int_matrix(data["matrix"], "matrix"))


def load_extend_case(data):
    """Read an extension problem.

    Fields: ``total`` (lattice), ``algebraic`` (span of A), ``f`` and ``g``
    (integer matrices, columns are images), and optionally ``total2`` and
    ``algebraic2`` for a different target (defaults to the source).
    """
    from .extend import split_lattice

    total = lattice_from_json(data["total"])
    split = split_lattice(total, _int_matrix(data["algebraic"], "algebraic"))
    if "total2" in data or "algebraic2" in data:
        total2 = lattice_from_json(data.get("total2", data["total"]))
        split2 = split_lattice(total2, _int_matrix(data.get("algebraic2", data["algebraic"]), "algebraic2"))
    else:
        split2 = split
    return split, split2, _int_matrix(data["f"], "f"), _int_matrix(data["g"], "g")


def dumps(obj):
    """Deterministic compact JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)

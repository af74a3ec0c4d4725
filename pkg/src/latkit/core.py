"""Integral lattices: construction, invariants, and the named catalog."""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import intmat
from .errors import Degenerate, NonIntegralRescale, NotSymmetric, UnknownName, ZeroVector
from .torsion import TorsionQuadraticForm

EVEN = "Even"
ODD = "Odd"


@dataclass(frozen=True)
class Lattice:
    """A free Z-module with a nondegenerate symmetric integer Gram matrix.

    Use :func:`make_lattice` to build one from untrusted input; the
    constructor itself validates too, so every instance is well formed.
    """

    gram: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise NotSymmetric(f"gram[{i}][{j}] = {gram[i][j]} but gram[{j}][{i}] = {gram[j][i]}")
        if intmat.det(gram) == 0:
            raise Degenerate("Gram matrix is singular")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self):
        return len(self.gram)

    @property
    def det(self):
        return intmat.det(self.gram)

    def pair(self, v, w):
        return intmat.bilinear(self.gram, v, w)

    def square(self, v):
        return intmat.bilinear(self.gram, v, v)

    def rows(self):
        return [list(r) for r in self.gram]

    def renamed(self, name):
        return Lattice(self.gram, name)

    def __str__(self):
        label = self.name or "Lattice"
        return f"{label} (rank {self.rank})"


def make_lattice(gram, name=None):
    """Validate an integer matrix and wrap it as a :class:`Lattice`."""
    rows = [list(r) for r in gram]
    for row in rows:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Fraction) and x.denominator == 1:
                    continue
                raise TypeError(f"Gram entries must be integers, got {x!r}")
    return Lattice(tuple(tuple(int(x) for x in r) for r in rows), name)


ZERO = Lattice((), "0")


def direct_sum(*lattices, name=None):
    gram = intmat.block_diag(*(lat.gram for lat in lattices))
    return Lattice(tuple(map(tuple, gram)), name)


def power(lattice, n, name=None):
    return direct_sum(*([lattice] * n), name=name)


def rescale(lattice, factor, name=None):
    """Multiply the bilinear form by a nonzero rational.

    The scaled Gram matrix itself must be integral; an integral quadratic
    form with half-integral off-diagonal entries is rejected.
    """
    factor = Fraction(factor)
    if factor == 0:
        raise ValueError("rescale factor must be nonzero")
    scaled = [[factor * x for x in row] for row in lattice.gram]
    if not intmat.is_integral(scaled):
        raise NonIntegralRescale(f"scaling by {factor} leaves non-integral entries")
    return Lattice(tuple(map(tuple, intmat.to_int(scaled))), name)


def signature(lattice):
    """(positive, negative) inertia via exact congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise Degenerate("zero row during diagonalization")
                # e_k -> e_k + e_j makes the pivot 2 * a[k][j]
                a[k] = [x + y for x, y in zip(a[k], a[j])]
                for row in a:
                    row[k] += row[j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                for row in a:
                    row[i] -= f * row[k]
    return pos, neg


def parity(lattice):
    return EVEN if all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.rank)) else ODD


def is_even(lattice):
    return parity(lattice) == EVEN


def is_definite(lattice):
    pos, neg = signature(lattice)
    return pos == 0 or neg == 0


def disc(lattice):
    return abs(lattice.det)


def is_unimodular(lattice):
    return disc(lattice) == 1


def discriminant_group(lattice):
    """D(L) = L^dual / L with its bilinear (and, if L is even, quadratic) form.

    With ``U G V = diag(d)`` from the Smith form, the dual lattice is spanned
    by the columns of ``V`` divided by ``d_i``; those columns with
    ``d_i > 1`` are the generators.
    """
    gram = lattice.gram
    n = lattice.rank
    snf = intmat.smith_normal_form([list(r) for r in gram])
    gens, rows, factors = [], [], []
    for i, d in enumerate(snf.factors):
        if d > 1:
            factors.append(d)
            gens.append(tuple(Fraction(snf.right[t][i], d) for t in range(n)))
            rows.append(tuple(snf.right_inv[i]))
    b = [[intmat.bilinear(gram, x, y) for y in gens] for x in gens]
    even = is_even(lattice)
    q = [intmat.bilinear(gram, x, x) for x in gens] if even else None
    return TorsionQuadraticForm.from_values(
        factors, b, q,
        generators=tuple(gens),
        parity_of_source=parity(lattice),
        dual_coords=tuple(rows),
        source_rank=n,
    )


def length(form):
    """Minimal number of generators of D (a lattice is replaced by D(L))."""
    if isinstance(form, Lattice):
        form = discriminant_group(form)
    diag = [[d if i == j else 0 for j in range(form.length)]
            for i, d in enumerate(form.invariant_factors)]
    return sum(1 for d in intmat.invariant_factors(diag) if d > 1)


def divisibility(lattice, v):
    """gcd of v.w over all w in the lattice."""
    if len(v) != lattice.rank:
        raise ValueError("vector length does not match the rank")
    if not any(v):
        raise ZeroVector("divisibility of the zero vector is undefined")
    return intmat.content(intmat.matvec(lattice.gram, v))


def change_basis(lattice, p, name=None):
    """Gram matrix in a new basis whose vectors are the columns of ``p``."""
    if abs(intmat.det(p)) != 1:
        raise ValueError("basis change must be unimodular")
    g = intmat.matmul(intmat.matmul(intmat.transpose(p), [list(r) for r in lattice.gram]), p)
    return Lattice(tuple(map(tuple, g)), name or lattice.name)


# catalog ---------------------------------------------------------------

_E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)

U = Lattice(((0, 1), (1, 0)), "U")
A2 = Lattice(((2, -1), (-1, 2)), "A2")
E8 = Lattice(_E8, "E8")
E8_NEG = rescale(E8, -1, "E8(-1)")
A2_NEG = rescale(A2, -1, "A2(-1)")


def diagonal(*entries, name=None):
    n = len(entries)
    return Lattice(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)),
                   name)


def odd_unimodular(p, q):
    """I(p, q): diagonal form with p entries +1 and q entries -1."""
    return diagonal(*([1] * p + [-1] * q), name=f"I({p},{q})")


def k3n(n):
    if n < 2:
        raise ValueError("K3n needs n >= 2 so that [-2(n-1)] is nondegenerate")
    return direct_sum(power(U, 3), E8_NEG, E8_NEG, diagonal(-2 * (n - 1)), name=f"K3n({n})")


def _named():
    return {
        "U": U,
        "A2": A2,
        "E8": E8,
        "E8(-1)": E8_NEG,
        "A2(-1)": A2_NEG,
        "CubicH4": odd_unimodular(21, 2).renamed("CubicH4"),
        "CubicPrim": direct_sum(U, U, E8, E8, A2, name="CubicPrim"),
        "Mukai": direct_sum(*[U] * 4, E8_NEG, E8_NEG, name="Mukai"),
        "OG10": direct_sum(*[U] * 3, E8_NEG, E8_NEG, A2_NEG, name="OG10"),
        "K3": direct_sum(*[U] * 3, E8_NEG, E8_NEG, name="K3"),
        "Lambda24": direct_sum(*[U] * 4, E8_NEG, E8_NEG, name="Lambda24"),
        "Lambda26": direct_sum(*[U] * 5, E8_NEG, E8_NEG, name="Lambda26"),
    }


CATALOG_NAMES = ("U", "A2", "E8", "E8(-1)", "A2(-1)", "CubicH4", "CubicPrim", "Mukai",
                 "OG10", "K3", "K3n", "Lambda24", "Lambda26")
PARAMETRIC_NAMES = ("K3n",)

_DIAG_RE = re.compile(r"^\[\s*(-?\d+)\s*\]$")
_ODD_RE = re.compile(r"^I\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_K3N_RE = re.compile(r"^K3n\(\s*(\d+)\s*\)$")


def catalog(name, n=None):
    """Look up a lattice by name.

    Besides the fixed names this accepts ``"[n]"``, ``"I(p,q)"`` and
    ``"K3n"`` (with ``n=``) or ``"K3n(n)"``.
    """
    name = name.strip()
    if name == "K3n":
        if n is None:
            raise UnknownName("K3n needs a parameter n")
        return k3n(int(n))
    m = _K3N_RE.match(name)
    if m:
        return k3n(int(m.group(1)))
    m = _DIAG_RE.match(name)
    if m:
        return diagonal(int(m.group(1)), name=name)
    m = _ODD_RE.match(name)
    if m:
        return odd_unimodular(int(m.group(1)), int(m.group(2)))
    table = _named()
    if name not in table:
        raise UnknownName(f"unknown lattice name {name!r}")
    return table[name]


def invariants(lattice):
    """Summary dict used by the CLI and JSON reports."""
    form = discriminant_group(lattice)
    return {
        "rank": lattice.rank,
        "signature": list(signature(lattice)),
        "parity": parity(lattice),
        "disc": disc(lattice),
        "invariant_factors": list(form.invariant_factors),
    }


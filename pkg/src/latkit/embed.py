"""Primitive sublattices, orthogonal complements, gluing and overlattices."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import intmat
from .core import Lattice, discriminant_group, disc, is_even, length, rescale
from .errors import DegenerateComplement, NonIntegralGlue, NotIsotropic, NotPrime, ZeroSpan
from .intmat import frac_mod

OBSTRUCTED = "Obstructed"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class PrimitiveSublattice:
    """Saturated sublattice of ``ambient``; rows of ``basis`` are ambient coordinates."""

    ambient: Lattice
    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in row) for row in self.basis)
        object.__setattr__(self, "basis", basis)
        if any(len(r) != self.ambient.rank for r in basis):
            raise ValueError("basis rows must have the ambient rank")
        if intmat.rank(basis) != len(basis):
            raise ValueError("basis rows are linearly dependent")
        if basis and intmat.lattice_index(basis) != 1:
            raise ValueError("span is not saturated")

    @property
    def rank(self):
        return len(self.basis)

    @property
    def induced_gram(self):
        return tuple(map(tuple, intmat.congruent(self.ambient.rows(), self.basis)))

    @property
    def is_degenerate(self):
        return intmat.det(self.induced_gram) == 0

    def lattice(self, name=None):
        """The sublattice as an abstract lattice (raises Degenerate if singular)."""
        return Lattice(self.induced_gram, name)

    def contains(self, v):
        return intmat.rank([*self.basis, list(v)]) == self.rank

    def to_json(self):
        return {"ambient": {"name": self.ambient.name, "gram": self.ambient.rows()},
                "basis": [list(r) for r in self.basis]}


def saturate(ambient, span):
    """Smallest primitive sublattice containing ``span``."""
    rows = [list(v) for v in span]
    if not rows or not any(any(r) for r in rows):
        raise ZeroSpan("span is empty or zero")
    if any(len(r) != ambient.rank for r in rows):
        raise ValueError("span vectors must have the ambient rank")
    return PrimitiveSublattice(ambient, intmat.saturation(rows))


def block_sublattice(ambient, start, stop):
    """Coordinate block e_start..e_{stop-1} (primitive by construction)."""
    n = ambient.rank
    return PrimitiveSublattice(ambient, [[int(j == i) for j in range(n)] for i in range(start, stop)])


def orthogonal_complement(ambient, sub):
    """S-perp inside the ambient lattice, as a primitive sublattice."""
    if sub.is_degenerate:
        raise DegenerateComplement("sublattice is degenerate, so it meets its own complement")
    pairing = intmat.matmul([list(r) for r in sub.basis], ambient.rows())
    basis = intmat.integer_kernel(pairing, ambient.rank)
    comp = PrimitiveSublattice(ambient, basis)
    if comp.rank and comp.is_degenerate:
        raise DegenerateComplement("orthogonal complement is degenerate")
    return comp


@dataclass(frozen=True)
class GlueData:
    """M / (L + L-perp) with its images in D(L) and D(L-perp).

    ``representatives`` are pairs of rational coordinate vectors
    (in the bases of L and of L-perp), reduced into [0, 1).
    ``generators`` are the same classes as integer ambient vectors.
    """

    ambient: Lattice
    sub: PrimitiveSublattice
    complement: PrimitiveSublattice
    order: int
    orders: tuple
    generators: tuple
    representatives: tuple
    disc_sub: object
    disc_complement: object
    map_to_DL: tuple
    map_to_DLperp: tuple

    def graph(self):
        """Glue pairs as accepted by :func:`overlattice_from_glue`."""
        return [(list(a), list(b)) for a, b in self.representatives]

    def elements(self):
        """Every element of the glue group as a (D(L) element, D(L-perp) element) pair."""
        dl, dk = self.disc_sub, self.disc_complement
        out = {(dl.zero(), dk.zero())}
        for a, b, o in zip(self.map_to_DL, self.map_to_DLperp, self.orders):
            new = set()
            for x, y in out:
                for k in range(o):
                    new.add((dl.add(x, dl.scale(k, a)), dk.add(y, dk.scale(k, b))))
            out = new
        return out

    def gamma(self):
        """The glue isomorphism as a dict from D(L) elements to D(L-perp) elements."""
        return dict(self.elements())


def _stacked(sub, comp):
    return [list(r) for r in sub.basis] + [list(r) for r in comp.basis]


def glue_data(ambient, sub):
    """Gluing subgroup of a nondegenerate primitive sublattice.

    The glue-order identity and the (anti-)isometry of both embeddings are
    asserted before returning.
    """
    comp = orthogonal_complement(ambient, sub)
    if sub.is_degenerate:
        raise DegenerateComplement("sublattice is degenerate")
    r = sub.rank
    c = _stacked(sub, comp)
    c_inv = intmat.inverse(c)
    snf = intmat.smith_normal_form(c)
    dl = discriminant_group(sub.lattice())
    dk = discriminant_group(comp.lattice()) if comp.rank else discriminant_group(Lattice(()))
    gens, reps, orders, to_l, to_k = [], [], [], [], []
    for i, d in enumerate(snf.factors):
        if d <= 1:
            continue
        w = snf.right_inv[i]
        coords = [frac_mod(x) for x in intmat.matmul([w], c_inv)[0]]
        amb = intmat.to_int([[sum(coords[t] * c[t][j] for t in range(len(c)))
                              for j in range(ambient.rank)]])[0]
        left, right = tuple(coords[:r]), tuple(coords[r:])
        gens.append(tuple(amb))
        reps.append((left, right))
        orders.append(d)
        to_l.append(dl.coords(left))
        to_k.append(dk.coords(right))
    order = 1
    for d in orders:
        order *= d
    glue = GlueData(ambient, sub, comp, order, tuple(orders), tuple(gens), tuple(reps), dl, dk,
                    tuple(to_l), tuple(to_k))
    _check_glue(glue)
    return glue


def _check_glue(glue):
    dm = disc(glue.ambient)
    dl, dk = glue.disc_sub, glue.disc_complement
    if glue.order ** 2 * dm != dl.order * dk.order:
        raise AssertionError("glue order identity failed")
    if intmat.subgroup_order(glue.map_to_DL, dl.invariant_factors) != glue.order:
        raise AssertionError("glue group does not inject into D(L)")
    if intmat.subgroup_order(glue.map_to_DLperp, dk.invariant_factors) != glue.order:
        raise AssertionError("glue group does not inject into D(L-perp)")
    even = is_even(glue.ambient)
    k = len(glue.orders)
    for i in range(k):
        a, b = glue.map_to_DL[i], glue.map_to_DLperp[i]
        if even and frac_mod(dl.q(a) + dk.q(b), 2) != 0:
            raise AssertionError("glue is not anti-isometric on quadratic values")
        for j in range(k):
            a2, b2 = glue.map_to_DL[j], glue.map_to_DLperp[j]
            if frac_mod(dl.b(a, a2) + dk.b(b, b2), 1) != 0:
                raise AssertionError("glue is not anti-isometric on bilinear values")


def overlattice_from_glue(first, second, graph, with_basis=False, even=None):
    """Overlattice of first + second generated by rational glue vectors.

    ``graph`` is a list of pairs (x, y) with x in first^dual and y in
    second^dual (basis coordinates).  The subgroup they generate must be
    isotropic: for the quadratic form when ``even`` (the default when both
    pieces are even), for the bilinear form otherwise.  With
    ``with_basis`` the integral basis is returned too, as rational rows in
    the coordinates of first + second.
    """
    n1, n2 = first.rank, second.rank
    gram = intmat.block_diag(first.gram, second.gram)
    glue = []
    for x, y in graph:
        x = [Fraction(t) for t in x]
        y = [Fraction(t) for t in y]
        if len(x) != n1 or len(y) != n2:
            raise ValueError("glue vector has the wrong length")
        if not intmat.is_integral([intmat.matvec(first.gram, x), intmat.matvec(second.gram, y)]):
            raise NonIntegralGlue("glue vector does not lie in the dual lattice")
        glue.append(x + y)
    n = n1 + n2
    den = intmat.common_denominator([t for v in glue for t in v])
    rows = [[den * int(i == j) for j in range(n)] for i in range(n)]
    rows += [[int(den * t) for t in v] for v in glue]
    basis = [[Fraction(t, den) for t in row] for row in intmat.hermite_rows(rows)]
    new_gram = intmat.congruent(gram, basis)
    if even is None:
        even = is_even(first) and is_even(second)
    diagonal_ok = all(
        Fraction(new_gram[i][i]).denominator == 1 and (not even or new_gram[i][i] % 2 == 0)
        for i in range(n))
    integral = intmat.is_integral(new_gram)
    if not diagonal_ok or (even and not integral):
        raise NotIsotropic("glue subgroup is not isotropic")
    if not integral:
        raise NonIntegralGlue("glue subgroup does not give an integral form")
    lattice = Lattice(tuple(map(tuple, intmat.to_int(new_gram))))
    return (lattice, basis) if with_basis else lattice


def overlattice_index(first, second, overlattice):
    """[overlattice : first + second], from disc(first) disc(second) = index^2 disc(over)."""
    ratio = Fraction(disc(first) * disc(second), disc(overlattice))
    root = isqrt(ratio.numerator)
    if ratio.denominator != 1 or root * root != ratio.numerator:
        raise ValueError("discriminants are inconsistent with an overlattice")
    return root


def unimodular_embedding_obstruction(lattice, n, rank_ambient):
    """Length obstruction to embedding L(n) primitively into a unimodular lattice.

    For |n| >= 2 the group D(L(n)) contains (Z/n)^rank(L); since a primitive
    sublattice of a unimodular lattice has D isomorphic to that of its
    complement, l(D(L(n))) cannot exceed rank_ambient - rank(L).  Never
    claims that an embedding exists.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    scaled = rescale(lattice, n)
    if abs(n) >= 2 and length(scaled) > rank_ambient - lattice.rank:
        return OBSTRUCTED
    return INCONCLUSIVE


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def transcendental_disc_candidates(p, m):
    """Admissible disc(T) when disc(ambient) = p is prime and the glue has order m.

    disc(T) * disc(NS) = p * m^2 with m dividing both factors forces
    disc(T) to be m or p*m.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("glue order must be positive")
    return {m, p * m}


def disc_factorizations(p, m):
    """Brute-force oracle: every a with a * b = p * m^2, m | a, m | b."""
    total = p * m * m
    return {a for a in range(1, total + 1) if total % a == 0 and a % m == 0 and (total // a) % m == 0}

"""Extending isometries across a glue, and related obstructions."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import intmat
from .core import Lattice, disc, discriminant_group, is_definite, is_even, length, signature
from .discform import Answer, same_genus, torsion_form_isomorphic
from .embed import (INCONCLUSIVE, OBSTRUCTED, PrimitiveSublattice, glue_data, orthogonal_complement,
                    saturate)
from .errors import InvalidIsometry, NotPrimitive
from .isometry import Isometry


@dataclass(frozen=True)
class SplitLattice:
    """A lattice H cut into a primitive part A and its complement T = A-perp."""

    total: Lattice
    algebraic: PrimitiveSublattice
    transcendental: PrimitiveSublattice
    glue: object = field(repr=False)

    @property
    def a_lattice(self):
        return self.algebraic.lattice()

    @property
    def t_lattice(self):
        return self.transcendental.lattice()


def split_lattice(total, algebraic):
    """Build a SplitLattice from a span (or primitive sublattice) of the algebraic part."""
    sub = algebraic if isinstance(algebraic, PrimitiveSublattice) else saturate(total, algebraic)
    glue = glue_data(total, sub)
    return SplitLattice(total, sub, glue.complement, glue)


@dataclass(frozen=True)
class Incompatible:
    """f and g disagree on the glue; ``witness`` names the offending generator."""

    witness: dict

    def __bool__(self):
        return False


def _as_isometry(f, source, target, label):
    if isinstance(f, Isometry):
        if f.source.gram != source.gram or f.target.gram != target.gram:
            raise InvalidIsometry(f"{label} does not map between the expected lattices")
        return f
    try:
        return Isometry(source, target, f)
    except InvalidIsometry as exc:
        raise InvalidIsometry(f"{label}: {exc}") from None


def glue_images(split, split2, f, g):
    """Images of the glue generators of ``split`` under g (on A) and f (on T).

    Returns a list of (generator, image in D(A'), image in D(T')).
    """
    da, dt = split2.glue.disc_sub, split2.glue.disc_complement
    out = []
    for gen, (ca, ct) in zip(split.glue.generators, split.glue.representatives):
        out.append((gen, da.coords(g(list(ca))), dt.coords(f(list(ct)))))
    return out


def _extension_matrix(split, split2, f, g):
    """Rational matrix of g + f in ambient coordinates (column convention)."""
    c = [list(r) for r in split.algebraic.basis] + [list(r) for r in split.transcendental.basis]
    c2 = [list(r) for r in split2.algebraic.basis] + [list(r) for r in split2.transcendental.basis]
    block = intmat.block_diag([list(r) for r in g.matrix], [list(r) for r in f.matrix])
    return intmat.matmul(intmat.matmul(intmat.transpose(c2), block),
                         intmat.inverse(intmat.transpose(c)))


def extend_isometry(split, split2, f, g):
    """Glue f: T -> T' and g: A -> A' into h: H -> H' when they agree on the glue.

    Agreement is decided in the discriminant groups: every glue generator
    (a, t) of H must go to a pair (g(a), f(t)) that lies in the glue of H'.
    On success the extension is built and checked to be integral.
    """
    f = _as_isometry(f, split.t_lattice, split2.t_lattice, "f")
    g = _as_isometry(g, split.a_lattice, split2.a_lattice, "g")
    gamma = split2.glue.gamma()
    for gen, a_img, t_img in glue_images(split, split2, f, g):
        if gamma.get(a_img) != t_img:
            return Incompatible({
                "generator": list(gen),
                "image_via_g": list(a_img),
                "image_via_f": list(t_img),
                "expected_partner": None if a_img not in gamma else list(gamma[a_img]),
            })
    h = _extension_matrix(split, split2, f, g)
    if not intmat.is_integral(h):
        raise AssertionError("glue maps agree but the extension is not integral")
    return Isometry(split.total, split2.total, intmat.to_int(h))


@dataclass(frozen=True)
class ExtensionCriterion:
    applies: bool
    reasons: tuple

    @property
    def status(self):
        return Answer.THEOREM_ASSERTED if self.applies else Answer.NO

    def to_json(self):
        return {"applies": self.applies, "reasons": list(self.reasons), "status": str(self.status)}


def extension_criterion(split, split2):
    """Check whether every glue-compatible g is guaranteed to exist.

    Requires the totals to share a genus and the algebraic parts to be even,
    indefinite, in the same genus, with rank(A) >= l(D(A)) + 2.
    """
    a, a2 = split.a_lattice, split2.a_lattice
    reasons = []
    if not same_genus(split.total, split2.total):
        reasons.append("total lattices not in the same genus")
    if not (is_even(a) and is_even(a2)):
        reasons.append("not even")
    if is_definite(a) or is_definite(a2):
        reasons.append("not indefinite")
    if not same_genus(a, a2):
        reasons.append("genus mismatch")
    if a.rank < length(a) + 2:
        reasons.append("rank below length + 2")
    return ExtensionCriterion(not reasons, tuple(reasons))


def minus_one_obstruction(lattice):
    """OBSTRUCTED when L cannot be isometric to L(-1), i.e. its signature is unbalanced."""
    pos, neg = lattice if isinstance(lattice, tuple) else signature(lattice)
    return OBSTRUCTED if pos != neg else INCONCLUSIVE


@dataclass(frozen=True)
class CoprimeGlueResult:
    """Outcome of :func:`coprime_glue_triviality`.

    ``embedding_subgroup_order`` is the order of the subgroup of D(H) glued
    to D(T) by the embedding; ``trivial`` means it is 1, so that
    D(T-perp) = D(T)(-1) + D(H).  ``glue_order`` is |H / (T + T-perp)|.
    """

    trivial: bool
    certified_by_gcd: bool
    embedding_subgroup_order: int
    glue_order: int
    complement_disc_form: object
    split_verified: Answer

    def to_json(self):
        return {
            "trivial": self.trivial,
            "certified_by_gcd": self.certified_by_gcd,
            "embedding_subgroup_order": self.embedding_subgroup_order,
            "glue_order": self.glue_order,
            "complement_disc_form": self.complement_disc_form.to_json(),
            "split_verified": str(self.split_verified),
        }


def coprime_glue_triviality(t_lattice, ambient, embedding):
    """Decide whether T sits in H without gluing any part of D(H).

    The embedding subgroup embeds in both D(T) and D(H), so
    gcd(disc T, disc H) = 1 certifies that it is trivial; its order is also
    computed exactly from disc(T) disc(H) = order^2 disc(T-perp).
    """
    if isinstance(embedding, PrimitiveSublattice):
        sub = embedding
    else:
        rows = [list(r) for r in embedding]
        if intmat.lattice_index(rows) != 1:
            raise NotPrimitive("embedding basis does not span a primitive sublattice")
        sub = PrimitiveSublattice(ambient, rows)
    if sub.ambient.gram != ambient.gram:
        raise ValueError("embedding lives in a different ambient lattice")
    if sub.induced_gram != t_lattice.gram:
        raise ValueError("embedding does not realize the given lattice")
    comp = orthogonal_complement(ambient, sub)
    k_lattice = comp.lattice()
    ratio = Fraction(disc(t_lattice) * disc(ambient), disc(k_lattice))
    order = isqrt(ratio.numerator)
    if ratio.denominator != 1 or order * order != ratio.numerator:
        raise AssertionError("discriminants inconsistent with a primitive embedding")
    glue = glue_data(ambient, sub)
    dk = discriminant_group(k_lattice)
    trivial = order == 1
    split = Answer.NO
    if trivial:
        expected = discriminant_group(t_lattice).negate().direct_sum(discriminant_group(ambient))
        split = torsion_form_isomorphic(dk, expected)
    return CoprimeGlueResult(
        trivial=trivial,
        certified_by_gcd=gcd(disc(t_lattice), disc(ambient)) == 1,
        embedding_subgroup_order=order,
        glue_order=glue.order,
        complement_disc_form=dk,
        split_verified=split,
    )

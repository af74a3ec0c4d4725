"""Comparison and automorphisms of discriminant forms; genus in the
(signature, parity, discriminant form) sense."""

import enum
from dataclasses import dataclass

from . import intmat
from .config import group_cap
from .core import (EVEN, Lattice, discriminant_group, is_definite, is_even, length, parity,
                   signature)
from .errors import TooLarge
from .isometry import definite_isometries


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    TOO_LARGE = "too-large"
    THEOREM_ASSERTED = "theorem-asserted"

    def __bool__(self):
        return self in (Answer.YES, Answer.THEOREM_ASSERTED)

    def __str__(self):
        return self.value


def negate(form):
    return form.negate()


def _group_invariants(form):
    diag = [[d if i == j else 0 for j in range(form.length)]
            for i, d in enumerate(form.invariant_factors)]
    return [d for d in intmat.invariant_factors(diag) if d > 1]


def _form_maps(src, dst, first_only, cap, use_quadratic=None):
    """Enumerate form-preserving isomorphisms src -> dst.

    Each result is a tuple of images (one element of ``dst`` per generator
    of ``src``).
    """
    if _group_invariants(src) != _group_invariants(dst):
        return []
    if max(src.order, dst.order) > cap:
        raise TooLarge(f"group order {dst.order} exceeds cap {cap}")
    if use_quadratic is None:
        use_quadratic = src.quadratic is not None and dst.quadratic is not None
    k = src.length
    if k == 0:
        return [()]
    value = dst.q if use_quadratic else (lambda y: dst.b(y, y))
    src_value = src.q if use_quadratic else (lambda x: src.b(x, x))
    basis = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    wanted = [src_value(e) for e in basis]
    pool = [(y, value(y)) for y in dst.elements()]
    by_level = []
    for i, e in enumerate(basis):
        d = src.invariant_factors[i]
        by_level.append([y for y, v in pool
                         if v == wanted[i] and not any((d * c) % m for c, m in zip(y, dst.invariant_factors))])
    results = []
    images = []

    def recurse(i):
        if i == k:
            if intmat.subgroup_order(images, dst.invariant_factors) == src.order:
                results.append(tuple(images))
                return first_only
            return False
        for y in by_level[i]:
            if all(dst.b(images[j], y) == src.bilinear[j][i] for j in range(i)):
                images.append(y)
                stop = recurse(i + 1)
                images.pop()
                if stop:
                    return True
        return False

    recurse(0)
    return results


def torsion_form_isomorphic(q1, q2, cap=None):
    """YES/NO, or TOO_LARGE when the groups exceed the enumeration cap.

    Quadratic values are compared when both forms carry them; otherwise
    only the bilinear forms are compared.
    """
    cap = group_cap() if cap is None else cap
    if _group_invariants(q1) != _group_invariants(q2):
        return Answer.NO
    try:
        found = _form_maps(q1, q2, True, cap)
    except TooLarge:
        return Answer.TOO_LARGE
    return Answer.YES if found else Answer.NO


@dataclass(frozen=True)
class TorsionFormAutomorphism:
    """Automorphism given by the images of the generators."""

    form: object
    images: tuple

    @property
    def matrix(self):
        k = self.form.length
        return tuple(tuple(self.images[j][i] for j in range(k)) for i in range(k))

    def __call__(self, x):
        out = self.form.zero()
        for c, img in zip(x, self.images):
            out = self.form.add(out, self.form.scale(c, img))
        return out

    def compose(self, first):
        return TorsionFormAutomorphism(self.form, tuple(self(img) for img in first.images))

    def is_identity(self):
        k = self.form.length
        return all(self.images[i] == tuple(int(i == j) for j in range(k)) for i in range(k))


def disc_form_automorphisms(form, cap=None):
    """Every automorphism of (D, b, q) by exhaustive search.

    Raises ``TooLarge`` when the group order exceeds the cap.
    """
    cap = group_cap() if cap is None else cap
    if form.order > cap:
        raise TooLarge(f"group order {form.order} exceeds cap {cap}")
    return [TorsionFormAutomorphism(form, imgs) for imgs in _form_maps(form, form, False, cap)]


def group_automorphism_count(form, cap=None):
    """Number of automorphisms of the underlying abelian group (no form)."""
    cap = group_cap() if cap is None else cap
    if form.order > cap:
        raise TooLarge(f"group order {form.order} exceeds cap {cap}")
    k = form.length
    images = []
    count = 0
    pool = list(form.elements())

    def recurse(i):
        nonlocal count
        if i == k:
            if intmat.subgroup_order(images, form.invariant_factors) == form.order:
                count += 1
            return
        d = form.invariant_factors[i]
        for y in pool:
            if not any((d * c) % m for c, m in zip(y, form.invariant_factors)):
                images.append(y)
                recurse(i + 1)
                images.pop()

    recurse(0)
    return count


def induced_automorphism(isometry, form):
    """Action of a lattice automorphism (column convention) on D(L)."""
    images = tuple(form.coords(isometry(g)) for g in form.generators)
    return TorsionFormAutomorphism(form, images)


@dataclass(frozen=True)
class GenusTuple:
    signature: tuple
    parity: str
    disc_form: object

    @property
    def compares_bilinear_only(self):
        """Odd lattices are compared on (signature, parity, bilinear form)
        only; no finer 2-adic data is consulted."""
        return self.parity != EVEN


def genus_tuple(lattice):
    return GenusTuple(signature(lattice), parity(lattice), discriminant_group(lattice))


def same_genus(first, second, cap=None):
    g1 = first if isinstance(first, GenusTuple) else genus_tuple(first)
    g2 = second if isinstance(second, GenusTuple) else genus_tuple(second)
    if g1.signature != g2.signature or g1.parity != g2.parity:
        return Answer.NO
    if g1.disc_form.order != g2.disc_form.order:
        return Answer.NO
    return torsion_form_isomorphic(g1.disc_form, g2.disc_form, cap)


@dataclass(frozen=True)
class NikulinCriteria:
    even: bool
    indefinite: bool
    rank_ge_length_plus_2: bool

    @property
    def conclusion(self):
        return self.even and self.indefinite and self.rank_ge_length_plus_2

    @property
    def status(self):
        # uniqueness in the genus and surjectivity onto O(D) are not computed
        return Answer.THEOREM_ASSERTED if self.conclusion else Answer.NO

    def to_json(self):
        return {
            "even": self.even,
            "indefinite": self.indefinite,
            "rank_ge_length_plus_2": self.rank_ge_length_plus_2,
            "conclusion": self.conclusion,
            "status": str(self.status),
        }


def nikulin_criteria(lattice):
    """Hypotheses under which O(L) -> O(D(L)) is surjective and L is unique
    in its genus: L even, indefinite, and rank(L) >= l(D(L)) + 2."""
    return NikulinCriteria(
        even=is_even(lattice),
        indefinite=not is_definite(lattice),
        rank_ge_length_plus_2=lattice.rank >= length(lattice) + 2,
    )


def disc_image(lattice, isometries=None):
    """Image of O(L) in O(D(L)) for a definite lattice, as a set of image tuples."""
    form = discriminant_group(lattice)
    if isometries is None:
        isometries = definite_isometries(lattice)
    return form, {induced_automorphism(h, form).images for h in isometries}


def lattice_to_disc_image_surjective(lattice, cap=None):
    """Whether O(L) -> O(D(L)) is onto.

    Definite lattices are decided by enumeration; even indefinite lattices
    meeting :func:`nikulin_criteria` get THEOREM_ASSERTED; anything else is
    TOO_LARGE.
    """
    if not isinstance(lattice, Lattice):
        raise TypeError("expected a Lattice")
    if lattice.rank == 0 or is_definite(lattice):
        try:
            form, image = disc_image(lattice)
            full = {a.images for a in disc_form_automorphisms(form, cap)}
        except TooLarge:
            return Answer.TOO_LARGE
        return Answer.YES if image == full else Answer.NO
    if discriminant_group(lattice).is_trivial:
        return Answer.YES
    if nikulin_criteria(lattice).conclusion:
        return Answer.THEOREM_ASSERTED
    return Answer.TOO_LARGE

"""Finite quadratic modules (torsion bilinear/quadratic forms).

An element of a form with generators of orders ``d_1, ..., d_k`` is a tuple
of integers ``(c_1, ..., c_k)`` with ``0 <= c_i < d_i``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, prod

from . import intmat
from .intmat import frac_mod


@dataclass(frozen=True)
class TorsionQuadraticForm:
    """Discriminant-type form b: D x D -> Q/Z, q: D -> Q/2Z.

    ``generators`` are lifts in the source lattice tensored with Q (basis
    coordinates), or ``None`` for forms built abstractly.  ``quadratic`` is
    ``None`` unless the source lattice is even.  ``dual_coords`` holds one
    integer row per generator so that an element ``x`` of the dual lattice
    has coordinate ``d_i * (row_i . x) mod d_i``.
    """

    invariant_factors: tuple
    bilinear: tuple
    quadratic: tuple = None
    generators: tuple = field(default=None, compare=False)
    parity_of_source: str = "Even"
    dual_coords: tuple = field(default=None, compare=False, repr=False)
    source_rank: int = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        k = len(self.invariant_factors)
        if any(d < 2 for d in self.invariant_factors):
            raise ValueError("invariant factors must be >= 2")
        if len(self.bilinear) != k or any(len(r) != k for r in self.bilinear):
            raise ValueError("bilinear matrix has the wrong shape")
        if self.quadratic is not None:
            if len(self.quadratic) != k:
                raise ValueError("quadratic values have the wrong length")
            for i in range(k):
                if frac_mod(self.quadratic[i] - self.bilinear[i][i], 1) != 0:
                    raise ValueError("quadratic and bilinear values disagree mod 1")

    @classmethod
    def from_values(cls, factors, bilinear, quadratic=None, **extra):
        """Build a form, reducing bilinear mod 1 and quadratic mod 2."""
        b = tuple(tuple(frac_mod(Fraction(x), 1) for x in row) for row in bilinear)
        q = None if quadratic is None else tuple(frac_mod(Fraction(x), 2) for x in quadratic)
        return cls(tuple(int(d) for d in factors), b, q, **extra)

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def length(self):
        return len(self.invariant_factors)

    @property
    def is_trivial(self):
        return not self.invariant_factors

    @property
    def exponent(self):
        e = 1
        for d in self.invariant_factors:
            e = e * d // gcd(e, d)
        return e

    # element arithmetic -------------------------------------------------

    def zero(self):
        return (0,) * self.length

    def reduce(self, x):
        return tuple(c % d for c, d in zip(x, self.invariant_factors))

    def add(self, x, y):
        return self.reduce(a + b for a, b in zip(x, y))

    def scale(self, k, x):
        return self.reduce(k * a for a in x)

    def elements(self):
        return product(*(range(d) for d in self.invariant_factors))

    def element_order(self, x):
        o = 1
        for c, d in zip(x, self.invariant_factors):
            o = o * (d // gcd(c, d)) // gcd(o, d // gcd(c, d))
        return o

    def b(self, x, y):
        k = self.length
        total = Fraction(0)
        for i in range(k):
            if x[i]:
                row = self.bilinear[i]
                for j in range(k):
                    if y[j]:
                        total += x[i] * y[j] * row[j]
        return frac_mod(total, 1)

    def q(self, x):
        """Quadratic value mod 2 (or b(x, x) mod 1 when no quadratic form)."""
        if self.quadratic is None:
            return self.b(x, x)
        k = self.length
        total = Fraction(0)
        for i in range(k):
            if x[i]:
                total += x[i] * x[i] * self.quadratic[i]
                for j in range(i + 1, k):
                    if x[j]:
                        total += 2 * x[i] * x[j] * self.bilinear[i][j]
        return frac_mod(total, 2)

    def coords(self, vector):
        """Element represented by a dual-lattice vector (basis coordinates)."""
        if self.dual_coords is None:
            raise ValueError("form carries no coordinate map")
        out = []
        for row, d in zip(self.dual_coords, self.invariant_factors):
            t = d * sum(Fraction(r) * Fraction(v) for r, v in zip(row, vector))
            if t.denominator != 1:
                raise ValueError(f"{vector} is not in the dual lattice")
            out.append(t.numerator % d)
        return tuple(out)

    # derived forms -------------------------------------------------------

    def negate(self):
        b = tuple(tuple(frac_mod(-x, 1) for x in row) for row in self.bilinear)
        q = None if self.quadratic is None else tuple(frac_mod(-x, 2) for x in self.quadratic)
        return TorsionQuadraticForm(self.invariant_factors, b, q, self.generators,
                                    self.parity_of_source, self.dual_coords, self.source_rank)

    def bilinear_only(self):
        return TorsionQuadraticForm(self.invariant_factors, self.bilinear, None,
                                    self.generators, "Odd", self.dual_coords, self.source_rank)

    def direct_sum(self, other):
        k1, k2 = self.length, other.length
        b = [list(r) + [Fraction(0)] * k2 for r in self.bilinear]
        b += [[Fraction(0)] * k1 + list(r) for r in other.bilinear]
        if self.quadratic is not None and other.quadratic is not None:
            q = tuple(self.quadratic) + tuple(other.quadratic)
            parity = "Even"
        else:
            q, parity = None, "Odd"
        gens = coords = rank = None
        if self.source_rank is not None and other.source_rank is not None:
            n1, n2 = self.source_rank, other.source_rank
            rank = n1 + n2
            if self.generators is not None and other.generators is not None:
                gens = tuple(tuple(g) + (Fraction(0),) * n2 for g in self.generators)
                gens += tuple((Fraction(0),) * n1 + tuple(g) for g in other.generators)
            if self.dual_coords is not None and other.dual_coords is not None:
                coords = tuple(tuple(r) + (0,) * n2 for r in self.dual_coords)
                coords += tuple((0,) * n1 + tuple(r) for r in other.dual_coords)
        return TorsionQuadraticForm(tuple(self.invariant_factors) + tuple(other.invariant_factors),
                                    tuple(tuple(r) for r in b), q, gens, parity, coords, rank)

    def normal_form(self):
        """Same form re-presented on generators with d_1 | d_2 | ... ."""
        k = self.length
        if k == 0:
            return self
        diag = [[self.invariant_factors[i] if i == j else 0 for j in range(k)] for i in range(k)]
        snf = intmat.smith_normal_form(diag)
        left_inv = intmat.to_int(intmat.inverse(snf.left))
        keep = [j for j in range(k) if snf.factors[j] > 1]
        factors = tuple(snf.factors[j] for j in keep)
        new_gens = [self.reduce(left_inv[i][j] for i in range(k)) for j in keep]
        b = tuple(tuple(self.b(x, y) for y in new_gens) for x in new_gens)
        q = None if self.quadratic is None else tuple(self.q(x) for x in new_gens)
        lifts = coords = None
        if self.generators is not None:
            width = self.source_rank
            lifts = tuple(
                tuple(sum(c * Fraction(g[t]) for c, g in zip(x, self.generators))
                      for t in range(width))
                for x in new_gens)
        if self.dual_coords is not None:
            # new coordinate j = sum_i left[j][i] * old_i  (mod d'_j)
            width = self.source_rank
            coords = []
            for j, dj in zip(keep, factors):
                row = [Fraction(0)] * width
                for i in range(k):
                    c = Fraction(snf.left[j][i] * self.invariant_factors[i], dj)
                    if c:
                        for t in range(width):
                            row[t] += c * self.dual_coords[i][t]
                coords.append(tuple(row))
            coords = tuple(coords)
        return TorsionQuadraticForm(factors, b, q, lifts, self.parity_of_source, coords,
                                    self.source_rank)

    def to_json(self):
        return {
            "factors": list(self.invariant_factors),
            "bilinear": [[_fstr(x) for x in row] for row in self.bilinear],
            "quadratic": None if self.quadratic is None else [_fstr(x) for x in self.quadratic],
        }

    @classmethod
    def from_json(cls, data):
        quad = data.get("quadratic")
        return cls.from_values(
            data["factors"],
            [[Fraction(x) for x in row] for row in data["bilinear"]],
            None if quad is None else [Fraction(x) for x in quad],
            parity_of_source="Odd" if quad is None else "Even",
        )


def _fstr(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

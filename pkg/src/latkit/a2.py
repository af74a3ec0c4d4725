"""Primitive vectors of A2 and their orthogonal complements."""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .core import A2
from .errors import NotPrimitive, ZeroVector
from .isometry import definite_isometries

_O_A2 = None


@dataclass(frozen=True)
class A2Vector:
    """a*e1 + b*e2 in the basis with Gram [[2,-1],[-1,2]]."""

    a: int
    b: int

    @property
    def coords(self):
        return (self.a, self.b)

    @property
    def square(self):
        return 2 * self.a * self.a - 2 * self.a * self.b + 2 * self.b * self.b

    def pair(self, other):
        a, b = self.a, self.b
        c, d = other.a, other.b
        return 2 * a * c - a * d - b * c + 2 * b * d

    @property
    def is_primitive(self):
        return gcd(self.a, self.b) == 1


def _vec(v):
    return v if isinstance(v, A2Vector) else A2Vector(*v)


def _check(v):
    v = _vec(v)
    if v.a == 0 and v.b == 0:
        raise ZeroVector("the zero vector has no orthogonal complement of rank 1")
    if not v.is_primitive:
        raise NotPrimitive(f"({v.a},{v.b}) is not primitive")
    return v


def canonical_sign(x, y):
    """Pick the sign of (x, y) with x > 0, or x == 0 and y > 0."""
    return (x, y) if x > 0 or (x == 0 and y > 0) else (-x, -y)


def a2_orthogonal_generator(v):
    """Primitive generator of v-perp in A2.

    With p = 2a - b and q = 2b - a, u.v = xp + yq, so the solutions are
    multiples of (q, -p) / gcd(p, q).
    """
    v = _check(v)
    p, q = 2 * v.a - v.b, 2 * v.b - v.a
    g = gcd(p, q)
    return A2Vector(*canonical_sign(q // g, -p // g))


def orthogonal_gcd(v):
    v = _check(v)
    return gcd(2 * v.a - v.b, 2 * v.b - v.a)


def square_branch(v):
    """"v²/3" when 3 divides v², otherwise "3v²"."""
    return "v²/3" if _check(v).square % 3 == 0 else "3v²"


def a2_orthogonal_square(v):
    """Square of the generator of v-perp: v²/3 if 3 | v², else 3v²."""
    v = _check(v)
    s = v.square
    return s // 3 if s % 3 == 0 else 3 * s


def brute_force_orthogonal_square(v):
    """Oracle: smallest square of a primitive u with u.v = 0 and |x|, |y| <= 3(|a|+|b|).

    Each x in range gives at most one y with u.v = 0, read off the Gram
    pairing row of v, so the scan is linear in the bound.
    """
    v = _vec(v)
    bound = 3 * (abs(v.a) + abs(v.b))
    r0, r1 = 2 * v.a - v.b, -v.a + 2 * v.b  # u.v = x*r0 + y*r1
    xs = np.arange(-bound, bound + 1, dtype=np.int64)
    if r1 == 0:
        xs, ys = np.zeros(2 * bound + 1, dtype=np.int64), xs
    else:
        keep = (xs * r0) % r1 == 0
        xs = xs[keep]
        ys = -(xs * r0) // r1
    ok = (np.abs(ys) <= bound) & (np.gcd(xs, ys) == 1)
    xs, ys = xs[ok], ys[ok]
    if not len(xs):
        return None
    assert not np.any(xs * r0 + ys * r1)
    return int(np.min(2 * xs * xs - 2 * xs * ys + 2 * ys * ys))


def a2_isometries():
    """O(A2), computed once."""
    global _O_A2
    if _O_A2 is None:
        _O_A2 = definite_isometries(A2)
    return _O_A2


def same_square_embedding_equivalence(v, w):
    """An isometry of A2 carrying v to w, or None if there is none."""
    v, w = _check(v), _check(w)
    if v.square != w.square:
        return None
    for h in a2_isometries():
        if tuple(h(v.coords)) == w.coords:
            return h
    return None


def a2_report(v):
    """JSON-ready summary for a primitive vector."""
    v = _check(v)
    u = a2_orthogonal_generator(v)
    return {"v": list(v.coords), "u": list(u.coords), "u_squared": u.square,
            "branch": square_branch(v)}


def check_exhaustive_range(bound):
    """Closed form against the scan, and the branch against g, for |a|, |b| <= bound."""
    count = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if gcd(a, b) != 1:
                continue
            count += 1
            v = A2Vector(a, b)
            if a2_orthogonal_square(v) != brute_force_orthogonal_square(v):
                return {"ok": False, "vectors": count, "witness": {"v": [a, b], "why": "closed form differs from scan"}}
            if (v.square % 3 == 0) != (orthogonal_gcd(v) == 3):
                return {"ok": False, "vectors": count, "witness": {"v": [a, b], "why": "branch dichotomy"}}
    return {"ok": True, "vectors": count, "witness": None}

"""Isometries between lattices and exhaustive isometry groups of definite lattices."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import intmat
from .config import DEFAULT_ISOMETRY_CAP
from .core import Lattice, rescale, signature
from .errors import InvalidIsometry, NotDefinite, TooLarge


@dataclass(frozen=True)
class Isometry:
    """Integer matrix whose columns are images of the source basis.

    Contract: ``matrix^T * gram_target * matrix == gram_source`` and the
    matrix is invertible over Z.
    """

    source: Lattice
    target: Lattice
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n, k = self.target.rank, self.source.rank
        if len(m) != n or any(len(r) != k for r in m):
            raise InvalidIsometry(f"matrix must be {n}x{k}")
        if n != k:
            raise InvalidIsometry("source and target ranks differ")
        pulled = intmat.matmul(intmat.matmul(intmat.transpose(m), self.target.rows()), m)
        if pulled != self.source.rows():
            raise InvalidIsometry("matrix does not carry the target form back to the source form")
        if abs(intmat.det(m)) != 1:
            raise InvalidIsometry("matrix is not invertible over Z")

    @classmethod
    def trusted(cls, source, target, matrix):
        """Skip validation; for matrices produced by a search that already
        guarantees the contract."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        object.__setattr__(obj, "matrix", tuple(tuple(r) for r in matrix))
        return obj

    def __call__(self, v):
        return intmat.matvec(self.matrix, v)

    def compose(self, first):
        """self o first."""
        if first.target != self.source:
            raise InvalidIsometry("cannot compose: target and source differ")
        return Isometry(first.source, self.target, intmat.matmul(self.matrix, first.matrix))

    def inverse(self):
        inv = intmat.to_int(intmat.inverse(self.matrix))
        return Isometry(self.target, self.source, inv)

    def negate(self):
        return Isometry(self.source, self.target, [[-x for x in row] for row in self.matrix])

    def to_json(self):
        return {
            "matrix": [list(r) for r in self.matrix],
            "source": {"name": self.source.name, "gram": self.source.rows()},
            "target": {"name": self.target.name, "gram": self.target.rows()},
        }


def identity_isometry(lattice):
    return Isometry(lattice, lattice, intmat.identity(lattice.rank))


def _ldl(gram):
    """G = L D L^T over Q for a positive definite G; returns (L, D)."""
    n = len(gram)
    low = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    for j in range(n):
        d[j] = Fraction(gram[j][j]) - sum(low[j][k] ** 2 * d[k] for k in range(j))
        for i in range(j + 1, n):
            low[i][j] = (gram[i][j] - sum(low[i][k] * low[j][k] * d[k] for k in range(j))) / d[j]
    return low, d


def short_vectors(lattice, bound, exact=False):
    """All nonzero x with x.x <= bound (or == bound when ``exact``).

    The lattice must be positive definite.  Enumeration walks the exact
    LDL^T decomposition coordinate by coordinate (Fincke-Pohst) without
    floating point.
    """
    gram = lattice.gram
    n = lattice.rank
    low, d = _ldl(gram)
    if any(x <= 0 for x in d):
        raise NotDefinite("short vector enumeration needs a positive definite form")
    bound = Fraction(bound)
    out = []
    x = [0] * n

    def recurse(i, remaining):
        if i < 0:
            if any(x):
                out.append(tuple(x))
            return
        center = -sum(low[j][i] * x[j] for j in range(i + 1, n))
        t = remaining / d[i]
        r = isqrt(t.numerator // t.denominator) + 1
        lo = int(center // 1) - r
        hi = int(-((-center) // 1)) + r
        for v in range(lo, hi + 1):
            used = d[i] * (v - center) ** 2
            if used <= remaining:
                x[i] = v
                recurse(i - 1, remaining - used)
        x[i] = 0

    recurse(n - 1, bound)
    if exact:
        out = [v for v in out if lattice.square(v) == bound]
    return sorted(out)


def definite_isometries(lattice, cap=DEFAULT_ISOMETRY_CAP):
    """The full group O(L) of a definite lattice, by exhaustive search.

    Basis vector ``e_i`` may only map to a vector of the same norm, and the
    pairings with the images already chosen must match.  ``cap`` bounds the
    number of candidate images examined; beyond it ``TooLarge`` is raised.
    """
    pos, neg = signature(lattice)
    if pos and neg:
        raise NotDefinite(f"signature {(pos, neg)} is indefinite")
    work = lattice if neg == 0 else rescale(lattice, -1)
    n = work.rank
    if n == 0:
        return [identity_isometry(lattice)]
    gram = work.gram
    cands = []
    levels = []
    seen_norms = {}
    for i in range(n):
        norm = gram[i][i]
        if norm not in seen_norms:
            first = len(cands)
            cands.extend(short_vectors(work, norm, exact=True))
            seen_norms[norm] = list(range(first, len(cands)))
        levels.append(seen_norms[norm])
    gcands = [intmat.matvec(gram, c) for c in cands]
    rows = {}
    images = [None] * n
    found = []
    examined = 0

    def pairings(a):
        row = rows.get(a)
        if row is None:
            ga = gcands[a]
            row = rows[a] = [intmat.dot(ga, c) for c in cands]
        return row

    def recurse(depth, lists):
        nonlocal examined
        if depth == n:
            found.append(tuple(images))
            return
        for a in lists[0]:
            row = pairings(a)
            target = gram[depth]
            narrowed = []
            for offset, candidates in enumerate(lists[1:], start=depth + 1):
                want = target[offset]
                examined += len(candidates)
                kept = [c for c in candidates if row[c] == want]
                if not kept:
                    break
                narrowed.append(kept)
            if examined > cap:
                raise TooLarge(f"isometry search exceeded {cap} candidate images")
            if len(narrowed) == n - depth - 1:
                images[depth] = a
                recurse(depth + 1, narrowed)
        images[depth] = None

    recurse(0, levels)
    return [Isometry.trusted(lattice, lattice, intmat.transpose([cands[a] for a in imgs]))
            for imgs in found]

"""Seeded random lattices and sublattices for property checks."""

import random

from . import intmat
from .core import E8, U, Lattice, change_basis, diagonal, direct_sum, rescale
from .embed import PrimitiveSublattice


def rng_for(seed):
    return random.Random(seed)


def random_lattice(rng, rank, bound=3):
    """Nondegenerate symmetric Gram matrix with entries in [-bound, bound]."""
    while True:
        g = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            for j in range(i, rank):
                g[i][j] = g[j][i] = rng.randint(-bound, bound)
        if intmat.det(g) != 0:
            return Lattice(tuple(map(tuple, g)))


def random_unimodular_matrix(rng, n, steps=None, bound=1):
    """Product of random elementary column operations and sign flips."""
    m = intmat.identity(n)
    if n < 2:
        return [[rng.choice((1, -1))]] if n else m
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([k for k in range(-bound, bound + 1) if k])
        for row in m:
            row[j] += c * row[i]
    for i in range(n):
        if rng.random() < 0.5:
            for row in m:
                row[i] = -row[i]
    return m


def scramble(rng, lattice, steps=None):
    """The same lattice in a random basis."""
    return change_basis(lattice, random_unimodular_matrix(rng, lattice.rank, steps), lattice.name)


def random_unimodular(rng, max_rank=10):
    """A random unimodular lattice of rank <= max_rank, written in a scrambled basis.

    Built from U, [1], [-1] and E8 / E8(-1) summands.
    """
    parts = []
    rank = 0
    target = rng.randint(2, max_rank)
    while rank < target:
        room = target - rank
        options = ["U", "+1", "-1"] if room >= 2 else ["+1", "-1"]
        if room >= 8 and rng.random() < 0.2:
            options.append("E8")
        pick = rng.choice(options)
        if pick == "U":
            parts.append(U)
            rank += 2
        elif pick == "E8":
            parts.append(E8 if rng.random() < 0.5 else rescale(E8, -1))
            rank += 8
        else:
            parts.append(diagonal(int(pick)))
            rank += 1
    return scramble(rng, direct_sum(*parts), steps=rank)


def random_primitive_sublattice(rng, ambient, k=None, bound=2, tries=200):
    """Saturation of k random vectors, nondegenerate, with 0 < k < rank."""
    n = ambient.rank
    for _ in range(tries):
        kk = k if k is not None else rng.randint(1, n - 1)
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(kk)]
        if intmat.rank(rows) != kk:
            continue
        sub = PrimitiveSublattice(ambient, intmat.saturation(rows))
        if not sub.is_degenerate:
            return sub
    raise RuntimeError("could not draw a nondegenerate primitive sublattice")

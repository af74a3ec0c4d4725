"""The ``verify`` suite: named arithmetic checks with seeded random trials."""

from math import gcd

from . import intmat
from .a2 import (A2Vector, brute_force_orthogonal_square, check_exhaustive_range,
                 same_square_embedding_equivalence)
from .core import (A2, A2_NEG, U, Lattice, catalog, direct_sum, disc, divisibility, is_even,
                   odd_unimodular, parity, power, signature)
from .discform import (Answer, disc_form_automorphisms, disc_image, lattice_to_disc_image_surjective,
                       nikulin_criteria, torsion_form_isomorphic)
from .embed import (INCONCLUSIVE, OBSTRUCTED, PrimitiveSublattice, block_sublattice, disc_factorizations,
                    glue_data, is_prime, overlattice_from_glue, transcendental_disc_candidates,
                    unimodular_embedding_obstruction)
from .extend import (Incompatible, _extension_matrix, coprime_glue_triviality, extend_isometry,
                     extension_criterion, minus_one_obstruction, split_lattice)
from .isometry import definite_isometries
from .sampling import random_lattice, random_primitive_sublattice, random_unimodular, rng_for

SUITES = ("paper",)
MAX_ISO_ORDER = 2000


# fixtures ---------------------------------------------------------------

def u_split():
    """U with A = span(1,1) ([2]) and T = span(1,-1) ([-2])."""
    return split_lattice(U, [[1, 1]])


def i30_split():
    """I(3,0) with A = span(1,1,1) ([3]) and T its rank-2 complement."""
    return split_lattice(odd_unimodular(3, 0), [[1, 1, 1]])


def og10_split():
    """OG10 with A = U + A2(-1) (the last U and the A2(-1) block) and T = U^2 + E8(-1)^2."""
    h = catalog("OG10")
    a = block_sublattice(h, 4, 6).basis + block_sublattice(h, 22, 24).basis
    return split_lattice(h, PrimitiveSublattice(h, a))


def coprime_fixture():
    """T = an A2(-1) inside the first E8(-1) of K3n(2), disc 3 against disc 2."""
    h = catalog("K3n(2)")
    sub = block_sublattice(h, 6, 8)
    return sub.lattice(), h, sub


def coprime_control():
    """T = span(1,1) in U, Gram [2]."""
    sub = PrimitiveSublattice(U, [[1, 1]])
    return sub.lattice(), U, sub


# helpers ----------------------------------------------------------------

def stacked_basis(glue):
    return [list(r) for r in glue.sub.basis] + [list(r) for r in glue.complement.basis]


def round_trip(ambient, sub):
    """Rebuild the ambient lattice from S, S-perp and the glue.

    Returns (overlattice, basis change) where the basis change has integer
    rows in ambient coordinates, is unimodular, and carries the ambient Gram
    matrix to the overlattice Gram matrix.
    """
    glue = glue_data(ambient, sub)
    over, basis = overlattice_from_glue(sub.lattice(), glue.complement.lattice(), glue.graph(),
                                        with_basis=True, even=is_even(ambient))
    change = intmat.matmul(basis, stacked_basis(glue))
    if not intmat.is_integral(change):
        raise AssertionError("reconstructed basis is not integral in the ambient")
    change = intmat.to_int(change)
    if abs(intmat.det(change)) != 1:
        raise AssertionError("reconstructed basis is not unimodular")
    if intmat.congruent(ambient.rows(), change) != over.rows():
        raise AssertionError("reconstructed Gram matrix does not match")
    return over, change


def extension_restricts(split, split2, h, f, g):
    """h maps A-basis vectors as g does and T-basis vectors as f does."""
    for basis, basis2, m in ((split.algebraic.basis, split2.algebraic.basis, g.matrix),
                             (split.transcendental.basis, split2.transcendental.basis, f.matrix)):
        for j, v in enumerate(basis):
            want = [sum(m[i][j] * basis2[i][t] for i in range(len(basis2))) for t in range(h.source.rank)]
            if list(h(list(v))) != want:
                return False
    return True


def extension_sweep(split):
    """All (f, g) in O(T) x O(A): extension exists iff glue maps agree.

    The oracle is integrality of the rational extension matrix, which never
    looks at discriminant groups.  Returns (cases, extended, first failure).
    """
    t, a = split.t_lattice, split.a_lattice
    cases = extended = 0
    for f in definite_isometries(t):
        for g in definite_isometries(a):
            cases += 1
            oracle = intmat.is_integral(_extension_matrix(split, split, f, g))
            h = extend_isometry(split, split, f, g)
            if isinstance(h, Incompatible):
                if oracle:
                    return cases, extended, {"f": f.matrix, "g": g.matrix, "why": "integral but rejected"}
                continue
            extended += 1
            if not oracle or not extension_restricts(split, split, h, f, g):
                return cases, extended, {"f": f.matrix, "g": g.matrix, "why": "bad extension"}
    return cases, extended, None


# checks -----------------------------------------------------------------

def check_glue_order_identity(rng, trials):
    """|G|^2 disc M = disc L disc L-perp on random sublattices, with |G| = |det C|."""
    for i in range(trials):
        m = random_lattice(rng, rng.randint(2, 8))
        s = random_primitive_sublattice(rng, m)
        glue = glue_data(m, s)
        index = abs(intmat.det(stacked_basis(glue)))
        lhs = disc(s.lattice()) * disc(glue.complement.lattice())
        if index != glue.order or glue.order ** 2 * disc(m) != lhs:
            return False, {"trial": i, "ambient": m.rows(), "basis": [list(r) for r in s.basis]}
    return True, {"cases": trials}


def draw_unimodular_case(rng, max_order=MAX_ISO_ORDER):
    """Random (M, S) with M unimodular and |D(S)| <= max_order (redrawn otherwise)."""
    while True:
        m = random_unimodular(rng, 10)
        s = random_primitive_sublattice(rng, m, bound=1)
        if disc(s.lattice()) <= max_order:
            return m, s


def unimodular_glue_ok(m, s):
    """D(S) and D(S-perp) are anti-isometric, both elementwise through the
    glue and by an independent isomorphism search."""
    glue = glue_data(m, s)
    a, b = glue.disc_sub, glue.disc_complement
    if glue.order != a.order or glue.order != b.order:
        return False
    even = is_even(m)
    for x, y in glue.elements():
        if even and intmat.frac_mod(a.q(x) + b.q(y), 2):
            return False
        if not even and intmat.frac_mod(a.b(x, x) + b.b(y, y), 1):
            return False
    if not even:
        a, b = a.bilinear_only(), b.bilinear_only()
    return torsion_form_isomorphic(a, b.negate()) == Answer.YES


def check_glue_anti_isometry(rng, trials):
    for i in range(trials):
        m, s = draw_unimodular_case(rng)
        if not unimodular_glue_ok(m, s):
            return False, {"trial": i, "ambient": m.rows(), "basis": [list(r) for r in s.basis]}
    return True, {"cases": trials}


def check_length_obstruction(rng, trials):
    t12 = power(U, 6)
    cases = [
        (t12, 2, 22, OBSTRUCTED),
        (A2, 2, 24, INCONCLUSIVE),
        (A2, 1, 3, INCONCLUSIVE),
    ]
    for lat, n, r, want in cases:
        got = unimodular_embedding_obstruction(lat, n, r)
        if got != want:
            return False, {"rank": lat.rank, "n": n, "ambient_rank": r, "got": got}
    # monotone in the ambient rank
    for _ in range(trials // 10 or 1):
        lat = random_lattice(rng, rng.randint(1, 5))
        n = rng.randint(2, 4)
        seen = False
        for r in range(lat.rank + 20, lat.rank - 1, -1):
            obs = unimodular_embedding_obstruction(lat, n, r) == OBSTRUCTED
            if seen and not obs:
                return False, {"gram": lat.rows(), "n": n, "rank": r}
            seen = seen or obs
    return True, None


def check_isometry_extension(rng, trials):
    out = {}
    for name, split in (("U", u_split()), ("I(3,0)", i30_split())):
        cases, extended, bad = extension_sweep(split)
        if bad:
            return False, {"fixture": name, **bad}
        out[name] = {"pairs": cases, "extended": extended}
    return True, out


def check_extension_criterion(rng, trials):
    h = og10_split()
    crit = extension_criterion(h, h)
    ok = crit.applies and disc(h.t_lattice) == 1
    bad = extension_criterion(u_split(), u_split())
    ok = ok and not bad.applies and "not indefinite" in bad.reasons
    return ok, {"og10": crit.to_json(), "u": bad.to_json()}


def check_signature_obstruction(rng, trials):
    ok = (minus_one_obstruction((2, 20)) == OBSTRUCTED
          and minus_one_obstruction((2, 2)) == INCONCLUSIVE
          and minus_one_obstruction((21, 2)) == OBSTRUCTED)
    for lat in (U, power(U, 2), odd_unimodular(1, 1)):
        ok = ok and minus_one_obstruction(lat) == INCONCLUSIVE
    return ok, None


def check_catalog_discs(rng, trials):
    og10, k3n2, mukai, cubic, prim = (catalog(n) for n in ("OG10", "K3n(2)", "Mukai", "CubicH4", "CubicPrim"))
    found = {
        "OG10": disc(og10), "K3n(2)": disc(k3n2), "Mukai": disc(mukai),
        "CubicH4": [disc(cubic), parity(cubic), list(signature(cubic))],
        "CubicPrim": [parity(prim), prim.rank],
    }
    want = {"OG10": 3, "K3n(2)": 2, "Mukai": 1, "CubicH4": [1, "Odd", [21, 2]], "CubicPrim": ["Even", 22]}
    return found == want, found


def check_disc_candidates(rng, trials):
    fixed = transcendental_disc_candidates(3, 1) == {1, 3} and transcendental_disc_candidates(2, 5) == {5, 10}
    for p in (q for q in range(2, 40) if is_prime(q)):
        for m in range(1, 13):
            if transcendental_disc_candidates(p, m) != disc_factorizations(p, m):
                return False, {"p": p, "m": m}
    return fixed, None


def check_divisibility_three(rng, trials):
    h = catalog("OG10")
    v = [0] * 22 + [1, -1]
    ok = (divisibility(A2_NEG, [1, -1]) == 3 and A2_NEG.square([1, -1]) == -6
          and divisibility(h, v) == 3 and h.square(v) == -6)
    return ok, {"vector": v}


def check_coprime_split(rng, trials):
    t, h, sub = coprime_fixture()
    res = coprime_glue_triviality(t, h, sub)
    ok = (res.trivial and res.certified_by_gcd and res.split_verified == Answer.YES
          and res.complement_disc_form.invariant_factors == (6,))
    ct, cu, csub = coprime_control()
    ctrl = coprime_glue_triviality(ct, cu, csub)
    ok = ok and ctrl.glue_order == 2 and ctrl.embedding_subgroup_order == 1
    return ok, {"fixture": res.to_json(), "control": ctrl.to_json()}


def same_square_classes(max_square):
    """Primitive A2 vectors grouped by square, for squares up to ``max_square``.

    Coordinates up to sqrt(max_square) suffice since v^2 >= a^2 + b^2.
    """
    r = int(max_square ** 0.5) + 1
    out = {}
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            v = A2Vector(a, b)
            if gcd(a, b) == 1 and v.square <= max_square:
                out.setdefault(v.square, []).append(v)
    return out


def orbit_representatives(vectors):
    """One vector per O(A2)-orbit among ``vectors``."""
    reps = []
    for v in vectors:
        if not any(same_square_embedding_equivalence(r, v) for r in reps):
            reps.append(v)
    return reps


def check_a2_exhaustive(rng, trials, bound=100):
    scan = check_exhaustive_range(bound)
    if not scan["ok"]:
        return False, scan["witness"]
    count = scan["vectors"]
    split = []
    for sq, vs in sorted(same_square_classes(200).items()):
        perp = {brute_force_orthogonal_square(v) for v in vs}
        if len(perp) != 1:
            return False, {"square": sq, "why": "complements of equal-square vectors differ"}
        reps = orbit_representatives(vs)
        if len(reps) > 1:
            split.append({"square": sq, "orbits": [list(v.coords) for v in reps]})
    return True, {"vectors": count, "squares_with_several_orbits": split}


def check_a2_disc_surjectivity(rng, trials):
    group = definite_isometries(A2)
    form, image = disc_image(A2, group)
    full = disc_form_automorphisms(form)
    ok = len(group) == 12 and len(image) == 2 == len(full)
    ok = ok and lattice_to_disc_image_surjective(A2) == Answer.YES
    return ok, {"O(A2)": len(group), "image": len(image), "O(D)": len(full)}


def check_nikulin(rng, trials):
    rank3 = Lattice(((0, 1, 0), (1, 0, 0), (0, 0, -6)))
    ok = (nikulin_criteria(direct_sum(U, A2_NEG)).conclusion
          and nikulin_criteria(rank3).conclusion
          and not nikulin_criteria(direct_sum(Lattice(((2,),)), Lattice(((-2,),)))).conclusion)
    return ok, None


def check_overlattice_round_trip(rng, trials):
    for i in range(trials):
        m = random_lattice(rng, rng.randint(2, 6))
        s = random_primitive_sublattice(rng, m)
        try:
            round_trip(m, s)
        except AssertionError as exc:
            return False, {"trial": i, "ambient": m.rows(), "basis": [list(r) for r in s.basis],
                           "why": str(exc)}
    return True, {"cases": trials}


CHECKS = (
    ("glue-order-identity", "glue order squared times disc(M) equals disc(L) disc(L-perp)",
     lambda rng, n: check_glue_order_identity(rng, n)),
    ("glue-anti-isometry", "unimodular ambient: D(L) is anti-isometric to D(L-perp)",
     lambda rng, n: check_glue_anti_isometry(rng, max(n // 5, 1))),
    ("length-obstruction", "l(D(T(n))) > rank(ambient) - rank(T) forbids a primitive embedding",
     check_length_obstruction),
    ("isometry-extension", "f + g extends to the total lattice iff the glue maps agree",
     check_isometry_extension),
    ("extension-criterion", "even, indefinite, same genus, rank >= length + 2 on the algebraic part",
     check_extension_criterion),
    ("signature-obstruction", "L = L(-1) forces equal signature components",
     check_signature_obstruction),
    ("catalog-discs", "discriminants, parities and signatures of the named lattices",
     check_catalog_discs),
    ("transcendental-disc-candidates", "disc(T) is m or p*m for prime ambient discriminant p",
     check_disc_candidates),
    ("divisibility-three", "a -6 vector of the A2(-1) block has divisibility 3 in the whole lattice",
     check_divisibility_three),
    ("coprime-split", "coprime discriminants: D(T-perp) = D(T)(-1) + D(H)",
     check_coprime_split),
    ("nikulin-criteria", "even indefinite with rank >= length + 2",
     check_nikulin),
    ("a2-orthogonal-square-exhaustive",
     "generator of v-perp in A2 has square v^2/3 or 3v^2; equal squares give isometric complements",
     check_a2_exhaustive),
    ("a2-disc-surjectivity", "O(A2) maps onto O(D(A2))",
     check_a2_disc_surjectivity),
    ("overlattice-round-trip", "S + S-perp glued back is the ambient, with an explicit basis change",
     lambda rng, n: check_overlattice_round_trip(rng, max(n // 5, 1))),
)


def _plain(x):
    """Tuples to lists, recursively, so records serialize identically."""
    if isinstance(x, (list, tuple)):
        return [_plain(t) for t in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


def run_suite(suite="paper", seed=0, trials=500):
    """Run every check; returns (records, summary).  Deterministic in (seed, trials)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    records = []
    for k, (check_id, anchor, fn) in enumerate(CHECKS):
        rng = rng_for(f"{seed}:{check_id}")
        ok, witness = fn(rng, trials)
        status = "pass" if ok else "fail"
        if ok and check_id in ("extension-criterion", "nikulin-criteria"):
            status = "theorem-asserted"
        record = {"check_id": check_id, "anchor": anchor, "status": status}
        if witness is not None:
            record["witness"] = _plain(witness)
        records.append(record)
    failed = sum(r["status"] == "fail" for r in records)
    summary = {
        "suite": suite, "seed": seed, "trials": trials, "checks": len(records),
        "failed": failed, "status": "fail" if failed else "pass",
    }
    return records, summary

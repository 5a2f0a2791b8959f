"""Classical cyclic-code semantics of a defining set: dimension, designed
distance, MDS certification, Hermitian dual containment, and the generator
polynomial over F_{q^2}."""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import DefiningSet
from .gf import FieldTower, Poly


@dataclass(frozen=True)
class ClassicalParams:
    """[n, k, d] data for the cyclic code with a given defining set.

    d_bch is the designed-distance lower bound from the longest run of
    consecutive defining-set elements; is_mds means that bound already
    meets the Singleton bound, so it is the exact minimum distance.
    """

    n: int
    k: int
    d_bch: int
    is_mds: bool


def dimension(z: DefiningSet) -> int:
    """Dimension n - |Z| of the cyclic code with defining set Z."""
    return z.ctx.n - len(z)


def longest_circular_run(members, n: int) -> int:
    """Length of the longest run of consecutive residues mod n in a set.

    Works on any residue collection (no closure needed); a full circle
    counts as n.
    """
    ms = sorted(set(x % n for x in members))
    k = len(ms)
    if k == 0:
        return 0
    if k == n:
        return n
    best = cur = 1
    prev = ms[0]
    for x in ms[1:] + [m + n for m in ms]:
        if x == prev + 1:
            cur += 1
            if cur > best:
                best = cur
        else:
            cur = 1
        prev = x
    return min(best, n)


def bch_bound(z: DefiningSet) -> int:
    """Designed distance: one more than the longest consecutive run in Z.

    A defining set with d-1 consecutive elements forces minimum distance
    at least d.  Empty Z gives 1 (the whole space); full Z gives n+1 (the
    zero code) by convention.
    """
    return longest_circular_run(z.members, z.ctx.n) + 1


def mds_certificate(z: DefiningSet) -> ClassicalParams:
    """Parameters with an exact-distance certificate when BCH meets Singleton."""
    n = z.ctx.n
    k = dimension(z)
    d = bch_bound(z)
    return ClassicalParams(n=n, k=k, d_bch=d, is_mds=(d == n - k + 1))


def hermitian_dual_containing(z: DefiningSet) -> bool:
    """True iff the code contains its Hermitian dual: Z and -qZ are disjoint."""
    return z.isdisjoint(z.neg_q())


def generator_polynomial(z: DefiningSet, tower: FieldTower) -> Poly:
    """The monic generator: product of (x - root^j) over all j in Z, taken
    coset by coset so every factor's coefficients land in F_{q^2}.

    The result has degree |Z| and divides x^n - 1 exactly (asserted).
    """
    ctx = z.ctx
    if tower.n != ctx.n or tower.q != ctx.q:
        raise ValueError("tower does not match the defining set's context")
    g = Poly.one(tower.fq2)
    for rep in z.coset_reps():
        g = g * tower.minimal_polynomial(rep)
    assert g.degree == len(z) and g.is_monic()
    if not z.is_empty():
        Poly.x_pow_n_minus_1(tower.fq2, ctx.n).exact_div(g)
    return g


def check_polynomial(z: DefiningSet, tower: FieldTower) -> Poly:
    """(x^n - 1) / generator: the generator of the complementary-coset code."""
    g = generator_polynomial(z, tower)
    return Poly.x_pow_n_minus_1(tower.fq2, z.ctx.n).exact_div(g)

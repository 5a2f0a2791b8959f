"""Defining-set decomposition, ebit counting, and entanglement-assisted
code parameters with Singleton certification.

The decomposition splits a defining set Z into the part that meets its
own -q image (each element there costs one pre-shared entangled pair)
and the remainder, which is disjoint from its -q image.  The derived
quantum parameters are [[n, 2k - n + c, d; c]] for the classical [n, k]
cyclic code, where c is the size of the overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import bch_bound, dimension
from .cosets import DefiningSet

EAQMDS = "eaqmds"
EQUALITY_WITHOUT_PRECONDITION = "equality-without-precondition"
NOT_EAQMDS = "not-eaqmds"


@dataclass(frozen=True)
class Decomposition:
    """Z split as free_part (disjoint from its -q image) plus entangled_part
    (Z intersected with -qZ, itself -q-invariant)."""

    whole: DefiningSet
    free_part: DefiningSet
    entangled_part: DefiningSet


def decompose(z: DefiningSet) -> Decomposition:
    """Split Z; every structural invariant is asserted on every call."""
    overlap = z.intersect(z.neg_q())
    free = z.difference(overlap)
    assert free.union(overlap) == z
    assert free.isdisjoint(overlap)
    # applying -q twice multiplies by q^2, which fixes coset-closed sets,
    # so the overlap is -q-invariant and the free part avoids its image
    assert overlap.neg_q() == overlap
    assert free.isdisjoint(free.neg_q())
    return Decomposition(whole=z, free_part=free, entangled_part=overlap)


def ebits(z: DefiningSet) -> int:
    """Number of pre-shared entangled pairs the construction consumes."""
    return len(decompose(z).entangled_part)


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, k, d; c]] plus the certification flags.

    d is the designed distance of the underlying cyclic code (exact
    whenever that code is MDS).  singleton_equality records whether
    n + c - k == 2(d - 1); distance_precondition_ok records d <= (n+2)/2,
    the regime in which that equality certifies an MDS-optimal code.
    """

    n: int
    k: int
    d: int
    c: int
    singleton_equality: bool
    distance_precondition_ok: bool
    in_theorem_range: bool = False

    def as_bracket(self, q: int | None = None) -> str:
        tail = f"_{q}" if q is not None else ""
        return f"[[{self.n},{self.k},{self.d};{self.c}]]{tail}"


def eaqecc_params(z: DefiningSet, in_theorem_range: bool = False) -> EaqeccParams:
    """Entanglement-assisted parameters derived from a defining set."""
    n = z.ctx.n
    k_classical = dimension(z)
    c = ebits(z)
    d = bch_bound(z)
    k = 2 * k_classical - n + c
    if k < 0:
        raise ValueError(
            f"defining set too large: logical dimension 2*{k_classical}-{n}+{c} < 0"
        )
    equality = n + c - k == 2 * (d - 1)
    precondition = 2 * d <= n + 2
    if precondition:
        # n + c - k equals 2|Z| here while d - 1 is at most |Z|, so the
        # bound can never be violated; tripwire for internal bugs only
        assert n + c - k >= 2 * (d - 1)
    return EaqeccParams(
        n=n,
        k=k,
        d=d,
        c=c,
        singleton_equality=equality,
        distance_precondition_ok=precondition,
        in_theorem_range=in_theorem_range,
    )


def eaqmds_status(params: EaqeccParams) -> str:
    """One of "eaqmds", "equality-without-precondition", "not-eaqmds".

    The middle status exists because the equality n + c - k == 2(d-1) can
    hold with d beyond (n+2)/2, where it no longer certifies optimality;
    such codes are reported rather than adjudicated.
    """
    if params.singleton_equality and params.distance_precondition_ok:
        return EAQMDS
    if params.singleton_equality:
        return EQUALITY_WITHOUT_PRECONDITION
    return NOT_EAQMDS


def eaqmds_check(params: EaqeccParams) -> bool:
    """True iff both the Singleton equality and its distance precondition hold."""
    return eaqmds_status(params) == EAQMDS

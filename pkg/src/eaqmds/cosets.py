"""Cyclotomic cosets modulo n under multiplication by q^2, and the set
algebra of coset-closed subsets, including the -q map.

The engine accepts any modulus n coprime to q.  The lengths this project
is really about, n = (q^2+1)/5, satisfy q^2 = -1 (mod n); then every
orbit is the pair {i, n-i} (a singleton for i = 0 and, when n is even,
for i = n/2).  Structural assertions specific to that situation are only
made when the context actually has it.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator


@dataclass(frozen=True)
class CycContext:
    """Modulus n and alphabet parameter q; orbits multiply by q^2 mod n."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        if gcd(self.n, self.q) != 1:
            raise ValueError(f"gcd(n={self.n}, q={self.q}) != 1")

    @property
    def multiplier(self) -> int:
        return self.q * self.q % self.n

    @property
    def q_squared_is_minus_one(self) -> bool:
        """True when q^2 = -1 (mod n); forces every coset to be {i, n-i}."""
        return self.multiplier == (self.n - 1) % self.n

    @property
    def is_split_fifth_length(self) -> bool:
        """True when n is exactly (q^2+1)/5."""
        return 5 * self.n == self.q * self.q + 1

    @classmethod
    def for_family(cls, q: int) -> "CycContext":
        """The context with n = (q^2+1)/5; q^2+1 must be divisible by 5."""
        if (q * q + 1) % 5 != 0:
            raise ValueError(f"(q^2+1) not divisible by 5 for q={q}")
        return cls((q * q + 1) // 5, q)


@dataclass(frozen=True)
class CycCoset:
    """One orbit under multiplication by q^2 mod n, with smallest-member rep."""

    ctx: CycContext
    rep: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def neg_q_image(self) -> set[int]:
        n, q = self.ctx.n, self.ctx.q
        return {(-q * x) % n for x in self.elements}


def coset(ctx: CycContext, i: int) -> CycCoset:
    """The coset containing i: the orbit {i, i*q^2, i*q^4, ...} mod n."""
    i %= ctx.n
    mult = ctx.multiplier
    orbit = [i]
    cur = i * mult % ctx.n
    while cur != i:
        orbit.append(cur)
        cur = cur * mult % ctx.n
    orbit.sort()
    return CycCoset(ctx, orbit[0], tuple(orbit))


def all_cosets(ctx: CycContext) -> list[CycCoset]:
    """All cosets, by ascending representative; they partition 0..n-1."""
    seen = bytearray(ctx.n)
    out = []
    for i in range(ctx.n):
        if not seen[i]:
            c = coset(ctx, i)
            for x in c.elements:
                seen[x] = 1
            out.append(c)
    return out


class DefiningSet:
    """A union of whole cosets: a subset of Z_n closed under *q^2 mod n."""

    __slots__ = ("ctx", "members", "_set")

    def __init__(self, ctx: CycContext, members: Iterable[int]):
        mset = frozenset(int(m) % ctx.n for m in members)
        mult = ctx.multiplier
        n = ctx.n
        for m in mset:
            if m * mult % n not in mset:
                raise ValueError(
                    f"set is not closed under multiplication by q^2: "
                    f"{m} in, {m * mult % n} out"
                )
        self.ctx = ctx
        self.members = tuple(sorted(mset))
        self._set = mset

    @classmethod
    def empty(cls, ctx: CycContext) -> "DefiningSet":
        return cls(ctx, ())

    @classmethod
    def from_cosets(cls, ctx: CycContext, reps: Iterable[int]) -> "DefiningSet":
        members: set[int] = set()
        for r in reps:
            members.update(coset(ctx, r).elements)
        return cls(ctx, members)

    @classmethod
    def full(cls, ctx: CycContext) -> "DefiningSet":
        return cls(ctx, range(ctx.n))

    # -- basic protocol ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x % self.ctx.n in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DefiningSet)
            and self.ctx == other.ctx
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.members))

    def __repr__(self) -> str:
        return f"DefiningSet(n={self.ctx.n}, q={self.ctx.q}, size={len(self)})"

    def is_empty(self) -> bool:
        return not self.members

    def _check(self, other: "DefiningSet") -> None:
        if self.ctx != other.ctx:
            raise ValueError("defining sets live in different contexts")

    # -- set algebra (closure is preserved by all of these) --------------------

    def union(self, other: "DefiningSet") -> "DefiningSet":
        self._check(other)
        return DefiningSet(self.ctx, self._set | other._set)

    def intersect(self, other: "DefiningSet") -> "DefiningSet":
        self._check(other)
        return DefiningSet(self.ctx, self._set & other._set)

    def difference(self, other: "DefiningSet") -> "DefiningSet":
        self._check(other)
        return DefiningSet(self.ctx, self._set - other._set)

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def isdisjoint(self, other: "DefiningSet") -> bool:
        self._check(other)
        return self._set.isdisjoint(other._set)

    def complement(self) -> "DefiningSet":
        return DefiningSet(self.ctx, set(range(self.ctx.n)) - self._set)

    def neg_q(self) -> "DefiningSet":
        """The image {(n - q*x) mod n}; again coset-closed, same size.

        On coset-closed sets this map is an involution: applying it twice
        multiplies by q^2, which fixes every coset.
        """
        n, q = self.ctx.n, self.ctx.q
        return DefiningSet(self.ctx, ((-q * x) % n for x in self.members))

    def coset_reps(self) -> tuple[int, ...]:
        """Ascending representatives of the distinct cosets this set unites."""
        reps = []
        seen: set[int] = set()
        for m in self.members:
            if m not in seen:
                c = coset(self.ctx, m)
                seen.update(c.elements)
                reps.append(c.rep)
        return tuple(reps)


def neg_q_map(s: DefiningSet) -> DefiningSet:
    """Free-function spelling of DefiningSet.neg_q()."""
    return s.neg_q()


# ---------------------------------------------------------------------------
# the coset reflection identity -q*C_{s*q+i} == C_{i*q-s} and its windows
# ---------------------------------------------------------------------------


def coset_product_identity(ctx: CycContext, s: int, i: int) -> bool:
    """Check -q * C_{s*q+i} == C_{(i*q-s) mod n} as a set identity."""
    lhs = coset(ctx, (s * ctx.q + i) % ctx.n).neg_q_image()
    rhs = set(coset(ctx, (i * ctx.q - s) % ctx.n).elements)
    return lhs == rhs


def coset_product_identity_inverse(ctx: CycContext, t: int, j: int) -> bool:
    """Check -q * C_{t*q-j} == C_{(j*q+t) mod n} as a set identity."""
    lhs = coset(ctx, (t * ctx.q - j) % ctx.n).neg_q_image()
    rhs = set(coset(ctx, (j * ctx.q + t) % ctx.n).elements)
    return lhs == rhs


def _ranges(*bounds: tuple[int, int]) -> Iterator[int]:
    for lo, hi in bounds:
        yield from range(lo, hi + 1)


def identity_windows(q: int) -> Iterator[tuple[int, int]]:
    """The stated (s, i) windows of the reflection identity for a family q.

    Odd q uses the windows exactly as stated for q = 3 and 7 (mod 10); for
    the even field sizes (q = 2 or 8 mod 10) the same expressions are used
    with integer floors, which is the natural reading since no separate
    windows are stated for them.
    """
    r = q % 10
    if r in (3, 8):
        hi1 = (3 * q - 9) // 10
        lo2, hi2 = (2 * q + 4) // 5, (3 * q - 4) // 5
        smax = (q - 3) // 10
        for s in range(smax):
            for i in _ranges((1, hi1), (lo2, hi2)):
                yield s, i
        for i in _ranges((1, hi1)):
            yield smax, i
    elif r in (7, 2):
        smax = (q - 7) // 10
        for s in range(smax + 1):
            for i in _ranges(
                (1, (q - 2) // 5),
                ((3 * q + 9) // 10, (2 * q - 4) // 5),
                ((q + 1) // 2, (7 * q - 9) // 10),
            ):
                yield s, i
    else:
        raise ValueError(f"q={q} is not congruent to 2, 3, 7 or 8 mod 10")


def identity_window_contains(q: int, s: int, i: int) -> bool:
    """Whether (s, i) lies inside the stated windows of the reflection
    identity.  The identity can still be checked outside them; a True
    result from the check there is an observation, not a covered claim.
    """
    try:
        return any((s, i) == pair for pair in identity_windows(q))
    except ValueError:
        return False


def inverse_identity_windows(q: int, with_offset: bool) -> Iterator[tuple[int, int]]:
    """The (t, j) windows for the inverse identity -q*C_{t*q-j} == C_{j*q+t}.

    Two readings are in circulation for the q = 3 (mod 10) shape: one whose
    middle window starts at (2q+4)/5 and one that starts 2 higher.  Both are
    generated (pick with ``with_offset``) so callers can check each; the
    identity itself holds on both.
    """
    r = q % 10
    if r in (3, 8):
        hi1 = (3 * q - 9) // 10
        lo2 = (2 * q + 4) // 5 + (2 if with_offset else 0)
        hi2 = (3 * q - 4) // 5
        jmax = (q - 3) // 10
        for j in range(jmax):
            for t in _ranges((1, hi1), (lo2, hi2)):
                yield t, j
        for t in _ranges((1, hi1)):
            yield t, jmax
    elif r in (7, 2):
        # same ranges as the forward identity, with t in i's role and j in s's
        for s, i in identity_windows(q):
            yield i, s
    else:
        raise ValueError(f"q={q} is not congruent to 2, 3, 7 or 8 mod 10")

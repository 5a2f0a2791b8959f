import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eaqmds.cosets import (
    CycContext,
    DefiningSet,
    all_cosets,
    coset,
    coset_product_identity,
    coset_product_identity_inverse,
    identity_window_contains,
    identity_windows,
    inverse_identity_windows,
    neg_q_map,
)


def test_context_validation():
    with pytest.raises(ValueError):
        CycContext(10, 5)  # gcd != 1
    with pytest.raises(ValueError):
        CycContext.for_family(11)  # 122 is not divisible by 5
    ctx = CycContext.for_family(23)
    assert ctx.n == 106
    assert ctx.q_squared_is_minus_one
    assert ctx.is_split_fifth_length


def test_cosets_q23(ctx23):
    assert coset(ctx23, 0).elements == (0,)
    assert coset(ctx23, 1).elements == (1, 105)
    assert coset(ctx23, 53).elements == (53,)  # the midpoint (q^2+1)/10
    assert coset(ctx23, 105).rep == 1


def test_all_cosets_partition_counts(ctx7, ctx23, ctx32):
    cs23 = all_cosets(ctx23)
    assert len(cs23) == 54
    assert sorted(len(c) for c in cs23).count(1) == 2  # {0} and {53}
    assert sum(len(c) for c in cs23) == 106

    cs7 = all_cosets(ctx7)
    assert len(cs7) == 6
    assert {c.elements for c in cs7 if len(c) == 1} == {(0,), (5,)}

    cs32 = all_cosets(ctx32)  # n = 205 odd: no midpoint singleton
    assert len(cs32) == 103
    assert sum(1 for c in cs32 if len(c) == 1) == 1


def test_every_coset_is_a_conjugate_pair(ctx23, ctx32):
    for ctx in (ctx23, ctx32):
        for c in all_cosets(ctx):
            assert set(c.elements) == {c.rep, (ctx.n - c.rep) % ctx.n}


def test_neg_q_map_examples(ctx23):
    assert neg_q_map(DefiningSet.from_cosets(ctx23, [0])).members == (0,)
    # -23*2 = 60, -23*104 = 46 (mod 106)
    assert DefiningSet.from_cosets(ctx23, [2]).neg_q().members == (46, 60)


def coset_closed_sets(ctx):
    reps = sorted({c.rep for c in all_cosets(ctx)})
    return st.sets(st.sampled_from(reps)).map(
        lambda chosen: DefiningSet.from_cosets(ctx, chosen)
    )


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_neg_q_is_a_cardinality_preserving_involution(data):
    ctx = CycContext.for_family(23)
    z = data.draw(coset_closed_sets(ctx))
    img = z.neg_q()  # construction itself revalidates coset closure
    assert len(img) == len(z)
    assert img.neg_q() == z


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_set_algebra_preserves_closure(data):
    ctx = CycContext.for_family(23)
    a = data.draw(coset_closed_sets(ctx))
    b = data.draw(coset_closed_sets(ctx))
    assert a.intersect(a) == a
    assert a.difference(a).is_empty()
    for combined in (a.union(b), a.intersect(b), a.difference(b)):
        DefiningSet(ctx, combined.members)  # would raise if closure broke


def test_set_algebra_examples(ctx7, ctx23):
    c2, c3 = DefiningSet.from_cosets(ctx23, [2]), DefiningSet.from_cosets(ctx23, [3])
    assert len(c2 | c3) == 4
    z = DefiningSet.from_cosets(ctx7, [0, 1])  # {0, 1, 9}
    assert (z & z.neg_q()).members == (0,)  # -7*{0,1,9} = {0,3,7} mod 10


def test_mismatched_contexts_raise(ctx7, ctx23):
    with pytest.raises(ValueError):
        DefiningSet.empty(ctx7).union(DefiningSet.empty(ctx23))


def test_closure_is_validated(ctx23):
    with pytest.raises(ValueError):
        DefiningSet(ctx23, [1])  # orbit of 1 also contains 105


def test_coset_reps_and_complement(ctx23):
    z = DefiningSet.from_cosets(ctx23, [0, 1, 105, 2])
    assert z.coset_reps() == (0, 1, 2)
    comp = z.complement()
    assert len(comp) == 106 - 5
    assert (z | comp) == DefiningSet.full(ctx23)


# -- the reflection identity -q C_{sq+i} = C_{iq-s} ------------------------------


def test_identity_examples(ctx23):
    assert coset_product_identity(ctx23, 0, 2)
    # -q C_26 = C_68 = {38, 68}
    assert coset_product_identity(ctx23, 1, 3)
    assert set(coset(ctx23, 68).elements) == {38, 68}
    ctx37 = CycContext.for_family(37)
    assert coset_product_identity(ctx37, 0, 1)


@pytest.mark.parametrize("q", [23, 43, 37, 47, 32, 128])
def test_identity_holds_on_all_stated_windows(q):
    ctx = CycContext.for_family(q)
    count = 0
    for s, i in identity_windows(q):
        assert coset_product_identity(ctx, s, i), (q, s, i)
        count += 1
    assert count > 0


@pytest.mark.parametrize("q", [23, 43, 37, 32, 128])
@pytest.mark.parametrize("with_offset", [False, True])
def test_inverse_identity_holds_on_both_window_readings(q, with_offset):
    # the two circulating window readings differ by an offset of 2 in one
    # bound; the identity holds on both, so neither is flagged as wrong
    ctx = CycContext.for_family(q)
    for t, j in inverse_identity_windows(q, with_offset):
        assert coset_product_identity_inverse(ctx, t, j), (q, t, j, with_offset)


def test_identity_window_membership_q23():
    wins = set(identity_windows(23))
    assert (0, 2) in wins and (1, 3) in wins and (2, 6) in wins
    assert (0, 7) not in wins  # in the gap between the stated ranges
    assert (2, 10) not in wins  # the last s value only allows the low range
    assert identity_window_contains(23, 0, 2)
    assert not identity_window_contains(23, 0, 7)  # checkable, but untested range
    assert not identity_window_contains(24, 0, 1)  # not a family shape at all

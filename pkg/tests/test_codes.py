from hypothesis import given, settings
from hypothesis import strategies as st

from eaqmds.codes import (
    bch_bound,
    check_polynomial,
    dimension,
    generator_polynomial,
    hermitian_dual_containing,
    longest_circular_run,
    mds_certificate,
)
from eaqmds.cosets import CycContext, DefiningSet
from eaqmds.families import family_defining_set, free_window_set
from eaqmds.gf import Poly


def test_dimension_examples(ctx23, spec23, spec43):
    assert dimension(DefiningSet.empty(ctx23)) == 106
    assert dimension(family_defining_set(spec23, 2)) == 106 - 47
    assert dimension(family_defining_set(spec43, 2)) == 370 - 87


def test_bch_bound_examples(ctx23, spec23):
    assert bch_bound(DefiningSet.from_cosets(ctx23, [0])) == 2
    # the family block {83..105, 0..23} is one circular run of 47
    z = family_defining_set(spec23, 2)
    assert bch_bound(z) == 48
    # non-adjacent singletons in a context where all cosets are singletons
    ctx = CycContext(8, 3)
    assert bch_bound(DefiningSet(ctx, [0, 2])) == 2


def test_bch_bound_conventions(ctx23):
    assert bch_bound(DefiningSet.empty(ctx23)) == 1
    assert bch_bound(DefiningSet.full(ctx23)) == 107


@settings(max_examples=80, deadline=None)
@given(
    members=st.sets(st.integers(0, 59), max_size=25),
    shift=st.integers(0, 59),
)
def test_run_length_invariant_under_shift_and_negation(members, shift):
    n = 60
    base = longest_circular_run(members, n)
    assert longest_circular_run({(x + shift) % n for x in members}, n) == base
    assert longest_circular_run({(-x) % n for x in members}, n) == base


def test_mds_certificates(ctx23, spec23, spec43):
    p = mds_certificate(family_defining_set(spec23, 2))
    assert (p.n, p.k, p.d_bch, p.is_mds) == (106, 59, 48, True)
    p = mds_certificate(family_defining_set(spec43, 3))
    assert (p.n, p.k, p.d_bch, p.is_mds) == (370, 197, 174, True)
    p = mds_certificate(DefiningSet.from_cosets(ctx23, [0, 2]))
    assert not p.is_mds and p.d_bch == 2


def test_hermitian_dual_containing(ctx23, spec23):
    assert hermitian_dual_containing(DefiningSet.empty(ctx23))
    # the five-window free set really avoids its -q image
    assert hermitian_dual_containing(free_window_set(spec23, 2))
    # the full family block does not (its overlap is the 21 ebits)
    assert not hermitian_dual_containing(family_defining_set(spec23, 2))


def test_generator_polynomial_of_c0_is_x_minus_1(tower7, ctx7):
    g = generator_polynomial(DefiningSet.from_cosets(ctx7, [0]), tower7)
    assert g.coeffs == (tower7.fq2.neg(1), 1)


def test_generator_polynomial_divides_xn_minus_1(tower7, ctx7):
    z = DefiningSet.from_cosets(ctx7, [0, 1])
    g = generator_polynomial(z, tower7)
    assert g.degree == len(z) == 3
    full = Poly.x_pow_n_minus_1(tower7.fq2, 10)
    q, r = full.divmod(g)
    assert r.is_zero() and (q * g).coeffs == full.coeffs


def test_generator_times_complement_generator_is_xn_minus_1(tower7, ctx7):
    z = DefiningSet.from_cosets(ctx7, [0, 1])
    g = generator_polynomial(z, tower7)
    gc = generator_polynomial(z.complement(), tower7)
    assert (g * gc).coeffs == Poly.x_pow_n_minus_1(tower7.fq2, 10).coeffs


def test_check_polynomial_degree(tower7, ctx7):
    z = DefiningSet.from_cosets(ctx7, [0, 1])
    assert check_polynomial(z, tower7).degree == dimension(z)


def test_generator_degree_always_matches_set_size(tower23, ctx23):
    for reps in ([0], [1], [0, 1, 2], [53]):
        z = DefiningSet.from_cosets(ctx23, reps)
        assert generator_polynomial(z, tower23).degree == len(z)


def test_dual_containment_matches_zero_ebits(ctx7):
    # cross-module consistency spot check; the fuzz version lives with the
    # decomposition tests
    from eaqmds.eaqecc import ebits

    for reps in ([], [1], [1, 2], [0, 1]):
        z = DefiningSet.from_cosets(ctx7, reps)
        assert hermitian_dual_containing(z) == (ebits(z) == 0)

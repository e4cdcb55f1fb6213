import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from descentpoly import identities as ids
from descentpoly.exact_poly import IntPolynomial as P
from descentpoly.realroots import (
    NotSquarefree,
    brenti_chain,
    brenti_step,
    cauchy_bound,
    count_real_roots,
    is_log_concave,
    is_real_rooted,
    is_unimodal,
    pf_class,
    squarefree_decomposition,
    sturm_chain,
)

from test_words import small_vectors


def grid_sign_changes(p, lo, hi, steps=4000):
    """Independent root-count lower bound: sign changes of p on a rational grid."""
    xs = [Fraction(lo) + (Fraction(hi) - Fraction(lo)) * i / steps for i in range(steps + 1)]
    signs = [p(x) > 0 for x in xs if p(x) != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def test_sturm_chain_examples():
    chain = sturm_chain(P([-1, 0, 1]))
    assert len(chain) == 3 and chain[-1].degree == 0 and chain[-1][0] > 0
    assert sturm_chain(P([0, 1])) == [P([0, 1]), P([1])]
    chain = sturm_chain(P([1, 31, 55, 9]))
    lead_signs_inf = [c.leading > 0 for c in chain]
    lead_signs_neg = [(c.leading > 0) == (c.degree % 2 == 0) for c in chain]
    var = lambda s: sum(1 for a, b in zip(s, s[1:]) if a != b)
    assert var(lead_signs_neg) - var(lead_signs_inf) == 3


def test_sturm_chain_rejects_zero():
    with pytest.raises(ValueError):
        sturm_chain(P())


def test_count_real_roots_examples():
    assert count_real_roots(P([-1, 0, 1]), -2, 2) == 2
    assert count_real_roots(P([1, 0, 1]), -10, 10) == 0
    p = P([1, 31, 55, 9])
    assert count_real_roots(p, -cauchy_bound(p), 0) == 3
    assert grid_sign_changes(p, -cauchy_bound(p), 0) == 3


def test_count_real_roots_requires_squarefree():
    with pytest.raises(NotSquarefree):
        count_real_roots(P([1, 2, 1]), -5, 5)


def test_is_real_rooted_examples():
    assert is_real_rooted(P([1, 3])).real_rooted
    assert not is_real_rooted(P([1, 0, 1])).real_rooted
    cert = is_real_rooted(P([1, 31, 55, 9]))
    assert cert.real_rooted
    assert cert.interval_bound == 1 + Fraction(55, 9)


def test_certificate_factorization_invariant():
    # (t+1)^3 (t+2)^2 t^2 (t^2+1)
    p = P([0, 0, 1]) * P([1, 1]) ** 3 * P([2, 1]) ** 2 * P([1, 0, 1])
    cert = is_real_rooted(p)
    assert not cert.real_rooted
    assert cert.zero_root_multiplicity == 2
    rebuilt = P([0, 0, 1])
    for f, k in cert.squarefree_factors:
        rebuilt = rebuilt * f ** k
    assert rebuilt == p
    assert cert.real_root_count() == 2 + 3 + 2


def test_squarefree_decomposition():
    p = P([1, 1]) ** 2 * P([-3, 2]) * P([5, 0, 1]) ** 3
    got = dict((f.coeffs, k) for f, k in squarefree_decomposition(p * 6))
    assert got == {P([1, 1]).coeffs: 2, P([-3, 2]).coeffs: 1, P([5, 0, 1]).coeffs: 3}


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
@settings(max_examples=80)
def test_sturm_matches_grid_on_random_polynomials(cs):
    p = P(cs)
    if p.degree < 1 or p[0] == 0:
        return
    cert = is_real_rooted(p)
    distinct = sum(f.real_roots for f in cert.factors)
    # A grid can only under-count roots.
    bound = cert.interval_bound + 1
    assert grid_sign_changes(p, -bound, bound, 600) <= distinct


@pytest.mark.parametrize("cs, expected", [
    ([1, 31, 55, 9], True),
    ([1, 1, 1], True),
    ([1, 0, 1], False),
    ([0, 0, 1, 2, 1], True),
    ([1, 3, 1], True),
    ([1, 1, 3], False),
])
def test_log_concave(cs, expected):
    assert is_log_concave(P(cs)) is expected


@pytest.mark.parametrize("cs, expected", [
    ([1, 31, 55, 9], True),
    ([1, 3], True),
    ([2, 1, 2], False),
    ([1, 2, 2, 1], True),
    ([3, 2, 1], True),
])
def test_unimodal(cs, expected):
    assert is_unimodal(P(cs)) is expected


def test_sequence_checks_reject_negative():
    with pytest.raises(ValueError):
        is_log_concave(P([1, -1]))
    with pytest.raises(ValueError):
        is_unimodal(P([1, -1]))


def test_pf_class():
    assert pf_class(P([1, 3])) == "PF"
    assert pf_class(P([1, 0, 1])) == "PF1"
    assert pf_class(P([1, -1])) is None


def test_brenti_step_examples():
    assert brenti_step(P([1, 1]), 1, 1, 2) == P([1, 3])
    assert brenti_step(P([1]), 1, 1, 1) == P([1])
    # appending a letter of multiplicity 1 multiplies f(k) by 2k+1: a=2, b=1
    assert brenti_step(P([1, 6, 1]), 2, 1, 3) == ids.descent_poly_bruteforce((1, 1, 1))
    assert brenti_step(P([1, 6, 1]), 2, 1, 3) == P([1, 23, 23, 1])
    # with a=1 the same step raises a multiplicity to 2 instead
    assert brenti_step(P([1, 6, 1]), 1, 1, 3) == ids.descent_poly_bruteforce((2, 1))


def test_brenti_step_non_integer():
    with pytest.raises(ValueError):
        brenti_step(P([1, 1]), Fraction(1, 3), 1, 2)


@pytest.mark.parametrize("m", list(small_vectors(5)))
def test_brenti_chain_matches_brute_force(m):
    for vec, poly in brenti_chain(m):
        assert poly == ids.descent_poly_bruteforce(vec)
        assert is_real_rooted(poly).real_rooted
    for vec, poly in brenti_chain(m, signed=False):
        assert poly == ids.descent_poly_bruteforce(vec, signed=False)


@pytest.mark.parametrize("m", list(small_vectors(6)))
def test_unsigned_descent_polys_real_rooted(m):
    p = ids.descent_poly_bruteforce(m, signed=False)
    assert is_real_rooted(p).real_rooted


def test_real_rooted_nonnegative_implies_log_concave_and_unimodal():
    rng = random.Random(7)
    for _ in range(100):
        p = P([1])
        for _ in range(rng.randint(1, 6)):
            p = p * P([rng.randint(1, 9), rng.randint(1, 9)])
        assert is_real_rooted(p).real_rooted
        assert is_log_concave(p) and is_unimodal(p)

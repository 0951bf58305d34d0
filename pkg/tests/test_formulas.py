import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitz.equivalence import weak_count
from hurwitz.formulas import (CaseTag, FormulaDomainError, case_tag, claim_counts_g0_h2,
                              claim_counts_g1_h3, i_first_system, i_second_system,
                              i_second_system_at_k_plus_1, ip, nu_g0_h0, nu_g0_h1, nu_g0_h2,
                              nu_g1_h2, nu_g1_h3, nu_g1_h3_uncorrected, nu_g2_decomposition,
                              nu_g2_h4, nu_g2_h4_uncorrected, sym_count, v_first_system,
                              v_second_system)
from hurwitz.partitions import heart, partitions_of

from oracles import (embedding_system_count, five_tuples, g0_embedding_counts,
                     g1_h2_embedding_count, g1_h3_embedding_counts)


def test_integer_part_is_floor():
    assert ip(Fraction(7, 2)) == 3
    assert ip(Fraction(-1, 2)) == -1
    assert ip(4) == 4


@given(st.integers(-50, 50), st.integers(1, 12))
def test_integer_part_matches_floor_division(a, b):
    assert ip(Fraction(a, b)) == a // b


def test_trivial_families():
    assert all(nu_g0_h0(k) == 1 and nu_g0_h1(k) == 1 for k in range(1, 10))


@pytest.mark.parametrize("pqr,tag,nu", [
    ((3, 3, 3), CaseTag.EE, 0),
    ((4, 4, 1), CaseTag.EG, 1),
    ((5, 2, 2), CaseTag.GE_G, 1),
    ((4, 3, 2), CaseTag.GG_L, 3),
    ((5, 3, 1), CaseTag.GG_G, 2),
    ((7, 1, 1), CaseTag.GE_G, 1),
])
def test_g0_h2_cases(pqr, tag, nu):
    assert case_tag(4, *pqr) == tag
    assert nu_g0_h2(4, *pqr) == nu
    assert sum(claim_counts_g0_h2(4, *pqr)) == nu


def test_g0_h2_order_free_and_domain():
    assert nu_g0_h2(4, 2, 3, 4) == nu_g0_h2(4, 4, 3, 2)
    with pytest.raises(FormulaDomainError):
        nu_g0_h2(4, 3, 3, 2)
    with pytest.raises(FormulaDomainError):
        nu_g0_h2(4, 9, 0, 0)


@pytest.mark.parametrize("k", range(2, 9))
def test_g0_claims_match_embedding_solutions(k):
    for pi in partitions_of(2 * k + 1):
        if len(pi) == 3:
            assert claim_counts_g0_h2(k, *pi) == g0_embedding_counts(k, tuple(pi))


@pytest.mark.parametrize("k", range(2, 9))
def test_g1_h2_is_floor_of_square(k):
    assert nu_g1_h2(k) == k * k // 4 == g1_h2_embedding_count(k)


def test_g1_h2_domain():
    with pytest.raises(FormulaDomainError):
        nu_g1_h2(1)


def test_g1_h3_values():
    assert nu_g1_h3(4, 7) == 5
    assert nu_g1_h3_uncorrected(4, 7) == 6
    assert [nu_g1_h3(3, p) for p in (4, 5, 6)] == [2, 2, 3]
    for k, p in [(3, 2), (3, 7), (2, 3)]:
        with pytest.raises(FormulaDomainError):
            nu_g1_h3(k, p)


@pytest.mark.parametrize("k", range(3, 9))
def test_g1_h3_claims_match_embedding_solutions(k):
    for p in range(k + 1, 2 * k + 1):
        claims = claim_counts_g1_h3(k, p)
        assert claims._asdict() == g1_h3_embedding_counts(k, p)
        assert sum(claims) == nu_g1_h3_uncorrected(k, p)


@pytest.mark.parametrize("k", range(3, 10))
def test_intermediate_systems(k):
    for p in range(k + 1, 2 * k + 1):
        assert i_first_system(k, p) == embedding_system_count(k, p, "I1")
        assert v_first_system(k, p) == embedding_system_count(k, p, "V1")
        assert v_second_system(k, p) == embedding_system_count(k, p, "V2")
        if p == k + 1:
            assert i_second_system_at_k_plus_1(k) == embedding_system_count(k, p, "I2")
        elif p < 2 * k:
            assert i_second_system(k, p) == embedding_system_count(k, p, "I2")


def test_g2_values():
    assert nu_g2_h4(4) == 10
    assert nu_g2_h4_uncorrected(4) == 13
    assert [nu_g2_h4(k) for k in range(5, 9)] == [55, 165, 375, 750]
    with pytest.raises(FormulaDomainError):
        nu_g2_h4(3)


@pytest.mark.parametrize("k", range(4, 14))
def test_g2_decomposition_matches_polynomial(k):
    asym, sym = nu_g2_decomposition(k)
    assert asym == 8 * math.comb(k, 4)
    assert sym_count(k) == five_tuples(k - 4, symmetric=True)
    assert asym + sym == nu_g2_h4_uncorrected(k)


def test_sym_count_small():
    assert sym_count(3) == 0
    assert sym_count(4) == 1
    assert nu_g2_decomposition(2) == (0, 0)


def test_every_formula_matches_enumeration_up_to_degree_11():
    for k in range(1, 6):
        assert weak_count(heart(k, 0, [2 * k + 1])).nu == nu_g0_h0(k)
        for p in range(k + 1, 2 * k + 1):
            assert weak_count(heart(k, 1, [p, 2 * k + 1 - p])).nu == nu_g0_h1(k)
        if k >= 2:
            assert weak_count(heart(k, 2, [2 * k + 1])).nu == nu_g1_h2(k)
            for pi in partitions_of(2 * k + 1, max_len=3):
                if len(pi) == 3:
                    assert weak_count(heart(k, 2, pi)).nu == nu_g0_h2(k, *pi)
        if k >= 3:
            for p in range(k + 1, 2 * k + 1):
                assert weak_count(heart(k, 3, [p, 2 * k + 1 - p])).nu == nu_g1_h3(k, p)
        if k >= 4:
            assert weak_count(heart(k, 4, [2 * k + 1])).nu == nu_g2_h4(k)

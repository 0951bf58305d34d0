"""Closed-form weak Hurwitz numbers for the odd-degree family
``[2,...,2,1], [2,...,2,2h+1], pi`` of degree ``d = 2k + 1``.

``ip(x)`` is the integer part ``[x]``; every bracketed quantity below is
non-negative on the documented input ranges. Arithmetic is exact
(:class:`fractions.Fraction`).
"""

from __future__ import annotations

import enum
import itertools
import math
from fractions import Fraction
from typing import NamedTuple


class FormulaDomainError(ValueError):
    pass


def ip(x) -> int:
    """Integer part of a rational."""
    return math.floor(Fraction(x))


def _sq_ip(x) -> int:
    # [x^2]
    x = Fraction(x)
    return ip(x * x)


# -- genus 0 -----------------------------------------------------------------

def nu_g0_h0(k: int = 1) -> int:
    """``[2^k,1], [2^k,1], [2k+1]``: always a unique realization."""
    return 1


def nu_g0_h1(k: int = 1) -> int:
    """``[2^k,1], [2^(k-1),3], [p,q]``: always a unique realization."""
    return 1


class CaseTag(str, enum.Enum):
    """Comparison pattern of ``p >= q >= r`` and of ``p`` against ``k``."""

    EE = "EE"
    EG = "EG"
    GE_G = "GE/G"
    GE_L = "GE/L"
    GG_G = "GG/G"
    GG_L = "GG/L"


def _sorted_pqr(k: int, p: int, q: int, r: int) -> tuple[int, int, int]:
    p, q, r = sorted((p, q, r), reverse=True)
    if r < 1:
        raise FormulaDomainError("parts must be positive")
    if p + q + r != 2 * k + 1:
        raise FormulaDomainError(f"{p}+{q}+{r} != 2k+1 = {2 * k + 1}")
    return p, q, r


def case_tag(k: int, p: int, q: int, r: int) -> CaseTag:
    p, q, r = _sorted_pqr(k, p, q, r)
    if p == q == r:
        return CaseTag.EE
    if p == q:
        return CaseTag.EG
    big = p > k
    if q == r:
        return CaseTag.GE_G if big else CaseTag.GE_L
    return CaseTag.GG_G if big else CaseTag.GG_L


_G0_CLAIMS = {
    CaseTag.EE: (0, 0),
    CaseTag.EG: (0, 1),
    CaseTag.GE_G: (1, 0),
    CaseTag.GE_L: (0, 1),
    CaseTag.GG_G: (1, 1),
    CaseTag.GG_L: (0, 3),
}


def claim_counts_g0_h2(k: int, p: int, q: int, r: int) -> tuple[int, int]:
    """Realizations of ``[p,q,r]`` through the two planar embeddings (I, II)."""
    return _G0_CLAIMS[case_tag(k, p, q, r)]


def nu_g0_h2(k: int, p: int, q: int, r: int) -> int:
    """Weak Hurwitz number of ``[2^k,1], [2^(k-2),5], [p,q,r]`` (genus 0)."""
    p, q, r = _sorted_pqr(k, p, q, r)
    if p == q == r:
        return 0
    if p == q or q == r:
        return 1
    return 2 if p > k else 3


# -- genus 1 -----------------------------------------------------------------

def nu_g1_h2(k: int) -> int:
    """Weak Hurwitz number of ``[2^k,1], [2^(k-2),5], [2k+1]`` (genus 1)."""
    if k < 2:
        raise FormulaDomainError(f"need k >= 2, got {k}")
    return _sq_ip(Fraction(k, 2))


def _check_g1_h3(k: int, p: int) -> None:
    if k < 3:
        raise FormulaDomainError(f"need k >= 3, got {k}")
    if not k + 1 <= p <= 2 * k:
        raise FormulaDomainError(f"need k+1 <= p <= 2k, got k={k}, p={p}")


def nu_g1_h3_uncorrected(k: int, p: int) -> int:
    """The genus-1, ``h=3`` closed formula, without the ``k=4, p=7`` correction."""
    _check_g1_h3(k, p)
    return (_sq_ip(Fraction(k - ip(Fraction(p + 1, 2)), 2))
            + _sq_ip(Fraction(ip(Fraction(p - 1, 2)), 2))
            + ip(Fraction(p, 2)) ** 2
            - (p - 1) * ip(Fraction(p, 2))
            + _sq_ip(Fraction(p, 2))
            + k * k - k * (p - 1)
            + (p - 1) * (p - 4) // 2)


def nu_g1_h3(k: int, p: int) -> int:
    """Weak Hurwitz number of ``[2^k,1], [2^(k-3),7], [p, 2k+1-p]`` with ``p > k``."""
    if (k, p) == (4, 7):
        return 5
    return nu_g1_h3_uncorrected(k, p)


class G1H3Claims(NamedTuple):
    I: int  # noqa: E741
    II: int
    III: int
    IV: int
    V: int
    VI: int
    VII: int


def claim_I_g1(k: int, p: int) -> int:
    return (_sq_ip(Fraction(k - ip(Fraction(p + 1, 2)), 2))
            + _sq_ip(Fraction(ip(Fraction(p - 1, 2)), 2))
            - _sq_ip(Fraction(p - k - 1, 2)))


def claim_II_g1(k: int, p: int) -> int:
    return (p - k - 1) * (p - k - 2) // 2


def claim_IV_g1(k: int, p: int) -> int:
    return _sq_ip(Fraction(p - k - 1, 2))


def claim_V_g1(k: int, p: int) -> int:
    half = ip(Fraction(p, 2))
    return half * half - (p - 1) * half - k * (p - k) + p * (p - 1) // 2


def claim_VI_g1(k: int, p: int) -> int:
    return (2 * k - p) * (p - k - 1)


def claim_VII_g1(k: int, p: int) -> int:
    return _sq_ip(Fraction(p, 2)) - k * (p - k)


def claim_counts_g1_h3(k: int, p: int) -> G1H3Claims:
    """Realizations of ``[p,q]`` through each of the seven torus embeddings."""
    _check_g1_h3(k, p)
    ii = claim_II_g1(k, p)
    return G1H3Claims(claim_I_g1(k, p), ii, ii, claim_IV_g1(k, p),
                      claim_V_g1(k, p), claim_VI_g1(k, p), claim_VII_g1(k, p))


# Intermediate sums inside the genus-1 claims. They are closed forms of
# sums of ([n/2] + 1) and stay valid past the range where the sums are empty.

def i_first_system(k: int, p: int) -> int:
    """Embedding I, ``p`` on the short side: solutions up to ``c <-> d``."""
    m = k - 2 - ip(Fraction(p + 1, 2))
    return _sq_ip(Fraction(m, 2)) + k - 1 - ip(Fraction(p + 1, 2))


def i_second_system_at_k_plus_1(k: int) -> int:
    """Embedding I, ``p`` on the long side, at ``p = k + 1``."""
    half_k = ip(Fraction(k, 2))
    return _sq_ip(Fraction(half_k, 2) - 1) + half_k - 1


def i_second_system(k: int, p: int) -> int:
    """Embedding I, ``p`` on the long side, for ``k+1 < p < 2k``."""
    m = ip(Fraction(p - 1, 2))
    return (_sq_ip(Fraction(m, 2) - 1) - _sq_ip(Fraction(p - k - 3, 2))
            + m - p + k + 1)


def v_first_system(k: int, p: int) -> Fraction:
    """Embedding V with ``2a+c+d+3 = p``."""
    m = ip(Fraction(p - 1, 2))
    return (Fraction(m * m, 2) - Fraction(m * (2 * p - 2 * k - 1), 2)
            + Fraction((p - k - 1) * (p - k), 2))


def v_second_system(k: int, p: int) -> Fraction:
    """Embedding V with ``2b+c+d+4 = p``."""
    m = ip(Fraction(p, 2))
    return (Fraction(m * m, 2) - Fraction(m * (2 * p - 2 * k - 1), 2)
            + Fraction((p - k - 1) * (p - k), 2))


# -- genus 2 -----------------------------------------------------------------

def nu_g2_h4_uncorrected(k: int) -> int:
    """``k(7k^3 - 42k^2 + 72k - 37)/16 + 5(2k-3)[k/2]/8``, in exact integers."""
    if k < 4:
        raise FormulaDomainError(f"need k >= 4, got {k}")
    num = k * (7 * k ** 3 - 42 * k ** 2 + 72 * k - 37) + 10 * (2 * k - 3) * (k // 2)
    if num % 16:
        raise ArithmeticError(f"genus-2 formula is not integral at k={k}")
    return num // 16


def nu_g2_h4(k: int) -> int:
    """Weak Hurwitz number of ``[2^k,1], [2^(k-4),9], [2k+1]`` (genus 2)."""
    if k == 4:
        return 10
    return nu_g2_h4_uncorrected(k)


def sym_count(k: int) -> int:
    """5-tuples of non-negative integers summing to ``k-4``, up to
    ``(a,b,c,d,e) <-> (b,a,d,c,e)``."""
    n = k - 4
    if n < 0:
        return 0
    seen = set()
    for a, b, c, d in itertools.product(range(n + 1), repeat=4):
        e = n - a - b - c - d
        if e >= 0:
            seen.add(min((a, b, c, d, e), (b, a, d, c, e)))
    return len(seen)


def nu_g2_decomposition(k: int) -> tuple[int, int]:
    """``(8 * C(k,4), 5 * sym_count(k))``: asymmetric and symmetric embedding families."""
    if k < 4:
        return 0, 0
    return 8 * math.comb(k, 4), 5 * sym_count(k)

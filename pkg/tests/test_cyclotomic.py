from math import comb

import pytest
from hypothesis import given, strategies as st

from isodual.cyclotomic import (
    CarlitzPoly,
    binomial_support,
    carlitz_identity_check,
    carlitz_poly,
    cyclotomic_code_params,
    e_sequence,
    genus_Kn,
    log_ceil,
    pmul,
)
from isodual.field import GF


def test_carlitz_small():
    assert carlitz_poly(2, (1,)) == CarlitzPoly(2, ((1,),))
    assert carlitz_poly(3, (0, 1)).coeffs == ((0, 1), (1,))
    # rho_{x^2} = u^{q^2} + (x^q + x) u^q + x^2 u
    assert carlitz_poly(3, (0, 0, 1)).coeffs == ((0, 0, 1), (0, 1, 0, 1), (1,))
    assert carlitz_poly(2, (0, 0, 1)).u_degree == 4


polys = st.lists(st.integers(0, 2), min_size=1, max_size=4)


@given(polys, polys)
def test_carlitz_is_a_ring_map(f, g):
    F = GF(3)
    fg = pmul(F, tuple(f), tuple(g))
    assert carlitz_poly(3, f).compose(carlitz_poly(3, g)) == carlitz_poly(3, fg)
    s = [F.add(a, b) for a, b in zip(f + [0] * 4, g + [0] * 4)]
    assert carlitz_poly(3, f) + carlitz_poly(3, g) == carlitz_poly(3, s)


def test_identity_checks():
    assert carlitz_identity_check(2, 0, 5)
    assert carlitz_identity_check(2, 1, 5)
    assert carlitz_identity_check(2, 3, 7)
    assert binomial_support(2, 3, 7) == [0, 1, 2, 3]
    assert binomial_support(2, 4, 3) == [0]


def naive_e(p, i, n):
    return next(j for j in range(1, min(i, n - 1) + 1) if comb(i, j) % p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_e_sequence_against_binomials(p):
    assert e_sequence(p, 199, 400) == [naive_e(p, i, 400) for i in range(1, 200)]


def test_e_values():
    e = e_sequence(2, 7, 7)
    assert e[0] == 1 and e[3] == 4
    assert sum(2**v for v in e) == 32


def test_genus_values():
    assert genus_Kn(2, 7) == 15
    assert genus_Kn(2, 2) == 0
    assert genus_Kn(3, 2) == 0
    for q in (2, 3):
        for n in range(2, 13):
            assert genus_Kn(q, n) >= 0
    with pytest.raises(ValueError):
        genus_Kn(5, 3)


def test_code_params():
    b = cyclotomic_code_params(2, 7)
    assert (b.length, b.dimension, b.m, b.genus) == (16, 8, 3, 15)
    assert b.notes["two_g_minus_two"] == 28 and b.notes["sum_q_pow_e"] == 32
    assert (cyclotomic_code_params(2, 2).length, cyclotomic_code_params(2, 2).dimension) == (2, 1)
    t = cyclotomic_code_params(3, 3)
    assert (t.length, t.dimension) == (12, 6)
    for q in (2, 3):
        for n in range(2, 13):
            c = cyclotomic_code_params(q, n)
            assert c.length == 2 * c.dimension
            assert q ** (c.m - 1) < n <= q**c.m


def test_log_ceil():
    assert [log_ceil(2, n) for n in (2, 3, 4, 5, 8, 9)] == [1, 2, 2, 3, 3, 4]

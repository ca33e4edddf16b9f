import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import GF as SymGF
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from isodual.field import (
    GF,
    DivisionByZero,
    FieldMismatch,
    Felt,
    NotASubfield,
    NotPrime,
    ReducibleModulus,
    additive_roots,
    default_modulus,
    field_from_dict,
    in_subfield,
    make_field,
    prime_power,
    rel_trace,
    vrel_trace,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 243, 729, 4096]


def sympy_mul(F, a, b):
    """Oracle: multiply via sympy's dense polynomial arithmetic over Z/p."""
    dom = SymGF(F.p)
    A = list(reversed(F.digits(a))) or [0]
    B = list(reversed(F.digits(b))) or [0]
    mod = list(reversed(F.modulus))
    r = gf_rem(gf_mul(A, B, F.p, dom), mod, F.p, dom)
    return F.from_digits(reversed([int(c) % F.p for c in r]))


def test_small_products():
    assert GF(8).mul(2, 4) == 3  # a * a^2 = a + 1
    assert GF(9).mul(3, 3) == 2  # (a + 1)^2 = 2a with a^2 = -1
    assert GF(4).mul(2, 2) == 3


def test_default_moduli():
    assert default_modulus(2, 3) == (1, 1, 0, 1)
    assert default_modulus(3, 2) == (1, 0, 1)
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert default_modulus(2, 12) == (1, 0, 0, 1) + (0,) * 8 + (1,)


@pytest.mark.parametrize("order", ORDERS)
def test_modulus_irreducible_per_sympy(order):
    F = GF(order)
    assert gf_irreducible_p(list(reversed(F.modulus)), F.p, SymGF(F.p))


@pytest.mark.parametrize("order", [8, 9, 16, 25, 27, 81, 243])
def test_full_mul_table_matches_sympy(order):
    F = GF(order)
    rng = np.random.default_rng(order)
    for a, b in rng.integers(0, order, size=(300, 2)):
        assert F.mul(int(a), int(b)) == sympy_mul(F, int(a), int(b))


@pytest.mark.parametrize("order", ORDERS)
def test_vector_ops_match_scalar(order):
    F = GF(order)
    rng = np.random.default_rng(1)
    a = rng.integers(0, order, 500)
    b = rng.integers(0, order, 500)
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vsub(a, b).tolist() == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    nz = a[a != 0]
    assert F.vinv(nz).tolist() == [F.inv(int(x)) for x in nz]
    assert F.vpow(a, 5).tolist() == [F.pow(int(x), 5) for x in a]


def test_untabled_field_agrees_with_sympy():
    F = make_field(2, 17)
    assert F._log is None
    rng = np.random.default_rng(2)
    for a, b in rng.integers(1, F.order, size=(50, 2)):
        a, b = int(a), int(b)
        assert F.mul(a, b) == sympy_mul(F, a, b)
        assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(ORDERS[:12]), st.data())
def test_field_axioms(order, data):
    F = GF(order)
    el = st.integers(0, order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, order - 1) == 1
        assert F.pow(a, -3) == F.inv(F.pow(a, 3))
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_errors():
    with pytest.raises(NotPrime):
        GF(6)
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, (1, 0, 1))
    with pytest.raises(DivisionByZero):
        GF(9).inv(0)
    with pytest.raises(FieldMismatch):
        Felt(GF(4), 1) + Felt(GF(8), 1)
    with pytest.raises(NotASubfield):
        rel_trace(GF(16), 3, 8)


def test_felt_operators():
    F = GF(8)
    a = Felt(F, 2)
    assert int(a * a * a) == F.add(2, 1)  # a^3 = a + 1
    assert int(a / a) == 1 and int(a**7) == 1
    assert not Felt(F, 0)


def test_prime_power_and_roundtrip():
    assert prime_power(729) == (3, 6)
    F = GF(81)
    assert field_from_dict(F.to_dict()) == F
    assert F.pretty(F.from_digits([1, 1, 1])) == "a^2+a+1"


def test_relative_trace_and_subfield():
    F = GF(16)
    assert [rel_trace(F, a, 4) for a in range(4)] == [0, 0, 1, 1]
    sub = [a for a in F.elements() if in_subfield(F, a, 4)]
    assert len(sub) == 4
    t = vrel_trace(F, np.arange(16), 4)
    assert all(in_subfield(F, int(v), 4) for v in t)
    assert t.tolist() == [rel_trace(F, a, 4) for a in range(16)]


def test_additive_roots_f8():
    F = GF(8)
    assert additive_roots(F, 2, 1, 0) == [0, 1]
    assert additive_roots(F, 2, 1, 4) == [6, 7]  # T^2 + T = a^2
    assert additive_roots(F, 2, 1, F.pow(5, 3)) == [2, 3]  # T^2 + T = (a^2+1)^3


@given(st.sampled_from([4, 8, 9, 16, 27]), st.data())
def test_additive_roots_are_roots(order, data):
    F = GF(order)
    qp = F.p
    c = data.draw(st.integers(0, order - 1))
    for r in additive_roots(F, qp, 1, c):
        assert F.add(F.pow(r, qp), r) == c

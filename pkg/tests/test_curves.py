import itertools

import numpy as np
import pytest

from isodual.curves import (
    CurveError,
    CurveX,
    ElemAbelian,
    GGSCover,
    Hermitian,
    SuzukiLocus,
    evaluate_monomials,
    genus,
    hermitian_places,
    make_extension_descriptor,
    power_roots,
    suzuki_split_count,
)
from isodual.divisors import riemann_hurwitz
from isodual.field import GF


def brute_points(F, eq):
    """Affine points of eq(x, y) = 0 by a scalar double loop."""
    return [(x, y) for x in F.elements() for y in F.elements() if eq(x, y)]


def test_f8_split_set():
    E = ElemAbelian(GF(8), 2, 1, [0, 0, 0, 1])
    assert E.split_alphas() == [0, 3, 5, 7]  # 0, a+1, a^2+1, a^2+a+1
    assert E.genus == 1 and riemann_hurwitz(E.descriptor()) == 1


@pytest.mark.parametrize(
    "order,qp,mu,f",
    [(8, 2, 1, [0, 0, 0, 1]), (9, 3, 1, [0, 0, 1]), (16, 4, 1, [0, 1, 0, 1]), (27, 3, 2, [1, 0, 1])],
)
def test_eab_points_match_brute_force(order, qp, mu, f):
    F = GF(order)
    E = ElemAbelian(F, qp, mu, f)

    def on(x, y):
        fx = 0
        for c in reversed(f):
            fx = F.add(F.mul(fx, x), c)
        return F.add(F.pow(y, qp), F.mul(mu, y)) == fx

    pts = brute_points(F, on)
    assert sorted(pts) == sorted(E.points_over(range(order)))
    assert riemann_hurwitz(E.descriptor()) == E.genus
    g, N = E.genus, len(pts) + 1
    assert N <= order + 1 + 2 * g * int(np.sqrt(order)) + 1  # Hasse-Weil (loose for non-squares)


def test_eab_rejects_bad_input():
    with pytest.raises(CurveError):
        ElemAbelian(GF(8), 2, 1, [0, 0, 1])  # gcd(2, 2) != 1
    with pytest.raises(CurveError):
        ElemAbelian(GF(8), 3, 1, [0, 1])
    with pytest.raises(CurveError):
        ElemAbelian(GF(27), 3, 1, [0, 1])  # T^3 + T has a single root here


@pytest.mark.parametrize("q", [2, 3, 4])
def test_hermitian_is_maximal(q):
    H = Hermitian(q)
    F = H.F
    pts = brute_points(F, lambda x, y: F.pow(y, q + 1) == F.add(F.pow(x, q), x))
    rep = hermitian_places(q)
    assert len(pts) + 1 == q**3 + 1 == rep.notes["rational_places"]
    assert rep.notes["ramified_affine"] == q and len(H.split_points()) == q**3 - q
    assert riemann_hurwitz(H.descriptor()) == H.genus == q * (q - 1) // 2
    assert H.divisor_of_y().degree == 0


def test_hermitian_canonical_degree():
    H = Hermitian(3)
    assert H.canonical_divisor_dt_over_t().degree == 2 * H.genus - 2


@pytest.mark.parametrize("q", [2, 3])
def test_curveX_census_vs_triple_loop(q):
    X = CurveX(q)
    F = X.F
    tr = lambda t: F.add(F.pow(t, q), t)  # noqa: E731
    count = sum(
        1
        for x, y, z in itertools.product(F.elements(), repeat=3)
        if F.pow(y, q + 1) == tr(x) and F.pow(z, q + 1) == tr(y)
    )
    c = X.census()
    assert c["affine"] == count and c["total"] == q**4 + 1
    assert c["genus_riemann_hurwitz"] == genus(X) == q**3 - q


def test_curveX_odd_q_classification_consistent():
    c = CurveX(3).census()
    assert c["classification_mismatches"] == 0
    assert c["class_counts"] == {"S0": 3, "S1": 3, "S2": 3}


def test_suzuki_and_ggs_counts():
    assert suzuki_split_count(8) == 504
    S = SuzukiLocus(8)
    c = S.census()
    assert c["total"] == c["hasse_weil_max"] == 8**4 + 1 + 2 * 14 * 64
    assert riemann_hurwitz(S.descriptor()) == S.genus == 14
    G = GGSCover(3, 3)
    assert sum(1 for a in G.split_alphas() if a) == 224
    assert riemann_hurwitz(make_extension_descriptor(G)) == G.genus == 24


def test_power_roots_and_monomials():
    F = GF(9)
    for c in F.elements():
        assert all(F.pow(r, 4) == c for r in power_roots(F, 4, c))
    M = evaluate_monomials(F, [(0, 0), (1, 0), (0, -1)], [(2, 3), (5, 1)])
    assert M.tolist() == [[1, 1], [2, 5], [F.inv(3), 1]]

from fractions import Fraction as Q
from math import comb

import pytest
from hypothesis import given, strategies as st

from toric_seshadri import rank_one
from toric_seshadri.rank_one import RankOneData, blowup_cones, dataset, grassmann_degree, grassmannian, solve


def test_projective_space():
    r = solve(rank_one.projective_space(4))
    assert (r.eps_curve, r.mu_curve) == (1, 1)


@pytest.mark.parametrize("k,n,deg", [(1, 4, 1), (2, 4, 2), (2, 5, 5), (2, 6, 14), (3, 6, 42)])
def test_grassmann_degree(k, n, deg):
    assert grassmann_degree(k, n) == deg


def test_grassmann_degree_g2n_is_catalan():
    for n in range(4, 10):
        m = n - 2
        assert grassmann_degree(2, n) == Q(comb(2 * m, m), m + 1)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6), (2, 7), (3, 8), (5, 7)])
def test_grassmann_line(k, n):
    r = solve(grassmannian(k, n))
    assert r.n == k * (n - k)
    assert r.eps_c == Q(1, min(k, n - k))
    assert r.mu_div == min(k, n - k)


def test_g24_dataset():
    assert solve(dataset("G(2,4)")).eps_c == Q(1, 2)
    assert solve(dataset("G(2, 5)")).eps_c == Q(1, 2)
    assert dataset("P3").n == 3


def test_jacobians():
    g3 = solve(dataset("jac-genus3-nonhyp"))
    assert (g3.eps_div, g3.eps_c, g3.mu_div) == (Q(12, 7), Q(3, 2), 2)
    g3h = solve(dataset("jac-genus3-hyp"))
    assert (g3h.eps_div, g3h.eps_c, g3h.mu_div) == (Q(3, 2), Q(3, 2), 2)
    assert blowup_cones(g3)["eff"] == [{"pullback": "0", "exceptional": "1"}, {"pullback": "1", "exceptional": "-2"}]
    assert blowup_cones(g3)["nef"][1] == {"pullback": "1", "exceptional": "-12/7"}
    g2 = solve(dataset("jac-genus2"))
    assert (g2.eps_c, g2.eps_div, g2.mu_div) == (Q(4, 3), Q(4, 3), Q(3, 2))
    # 4/3 < sqrt(2) < 3/2, by squaring
    assert g2.eps_div ** 2 < 2 < g2.mu_div ** 2


def test_inconsistent_data_rejected():
    with pytest.raises(ValueError, match="inconsistent"):
        solve(RankOneData(n=2, deg=2, eps_div=1, mu_curve=1))
    with pytest.raises(ValueError, match="at least one"):
        solve(RankOneData(n=2, deg=2, eps_div=1))
    with pytest.raises(ValueError, match="ordering"):
        solve(RankOneData(n=2, deg=2, eps_div=2, mu_div=1, ordered=True))
    with pytest.raises(ValueError, match="unknown"):
        dataset("nope")
    with pytest.raises(ValueError):
        blowup_cones(RankOneData(n=2, deg=1, eps_div=1))


pos = st.fractions(min_value=Q(1, 20), max_value=20)


@given(st.integers(1, 6), pos, pos, pos)
def test_solve_idempotent_and_round_trip(n, deg, e, m):
    r = solve(RankOneData(n=n, deg=deg, eps_div=e, mu_div=m))
    assert solve(r) == r
    back = solve(RankOneData(n=n, deg=deg, mu_curve=r.mu_curve, eps_curve=r.eps_curve))
    assert back.eps_div == e and back.mu_div == m


@given(st.integers(1, 6), st.integers(1, 12))
def test_grassmann_eps_at_most_one(k, extra):
    n = k + extra
    r = solve(grassmannian(k, n))
    assert r.eps_c <= 1
    assert (r.eps_c == 1) == (min(k, n - k) == 1)


def test_builtin_datasets_solve():
    for d in rank_one.builtin_datasets():
        assert solve(d).complete

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twovalued.families import buchstaber, buchstaber_sigma, homogenize, kontsevich, kontsevich_sigma
from twovalued.mpoly import MultiPoly, from_sigma, substitute, symbols
from twovalued.starinv import (
    FROZEN_KB_SIGN, MobiusMap, SigmaLaurent, cubic_factors, cyclic_maps_cubics,
    determine_kb_sign, fixed_locus_suite, gamma1_preserves_identity, gamma_B, gamma_D,
    hesse_singular_points, hesse_substitution_check, j_difference_numerator, j_routes_agree,
    kb_check, kb_disc_presentation, kontsevich_star_identity, locus_factors,
    matched_buchstaber_params, mobius_match, mobius_pullback, mobius_pushforward,
    parametrization_check, pullback_proportional, singular_at_111, star, transposition_maps_cubics,
    tri_degree,
)

s1, s2, s3 = symbols("sigma1 sigma2 sigma3")
small = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


# -- Buchstaber <-> Kontsevich -----------------------------------------------------

def test_kb_frozen_sign():
    assert FROZEN_KB_SIGN == 1
    assert kb_check(sign=1).passed
    assert determine_kb_sign() == [1]


def test_kb_other_sign_flips_a_and_c():
    r = kb_check(sign=-1)
    assert not r.passed
    assert r.detail["matches_buchstaber_with_(-a,b,-c)"]


@given(small, small, small)
@settings(max_examples=10, deadline=None)
def test_kb_numeric(a, b, c):
    assert kb_check(a, b, c).passed


def test_disc_presentations():
    assert kb_disc_presentation(form="derived").passed
    printed = kb_disc_presentation(form="printed")
    assert not printed.passed
    assert printed.detail["matches_buchstaber_with_(-a,b,-c)"]
    with pytest.raises(ValueError):
        kb_disc_presentation(form="other")


# -- star map ------------------------------------------------------------------------

def test_star_on_generators():
    assert star(SigmaLaurent(s1)) == SigmaLaurent(s2, 1)
    assert star(SigmaLaurent(s2)) == SigmaLaurent(s1, 1)
    assert star(SigmaLaurent(s3)) == SigmaLaurent(MultiPoly.const(1), 1)
    assert star(SigmaLaurent(s1), -1) == SigmaLaurent(-s2, 1)
    assert star(SigmaLaurent(s3), -1) == SigmaLaurent(MultiPoly.const(-1), 1)


@pytest.mark.parametrize("sign", [1, -1])
def test_star_matches_inversion_in_xyz(sign):
    # star(P) written in x, y, z equals P(sign/x, sign/y, sign/z)
    P = SigmaLaurent(s1 ** 2 * s2 + 3 * s3 - s2 * s3 + 1)
    num, den = star(P, sign).to_xyz()
    N, D = substitute(from_sigma(P.poly), {v: (sign, MultiPoly.var(v)) for v in "xyz"})
    assert num * D == N * den


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                          st.integers(-5, 5)), min_size=1, max_size=6),
       st.integers(0, 3), st.sampled_from([1, -1]))
@settings(max_examples=60, deadline=None)
def test_star_is_an_involution(monos, k, sign):
    P = MultiPoly.zero()
    for i, j, l, c in monos:
        P = P + c * s1 ** i * s2 ** j * s3 ** l
    L = SigmaLaurent(P, k)
    assert star(star(L, sign), sign) == L


def test_star_identity_signs():
    assert kontsevich_star_identity(1).passed
    assert not kontsevich_star_identity(-1).passed


def test_star_sign_rejected():
    with pytest.raises(ValueError):
        star(SigmaLaurent(s1), 2)


def test_sigma_forms_are_consistent():
    assert from_sigma(buchstaber_sigma()) == buchstaber()
    assert from_sigma(kontsevich_sigma()) == kontsevich()


# -- Moebius maps ---------------------------------------------------------------------

def test_mobius_normalization():
    g = MobiusMap(2, 0, 0, 2)
    assert g.entries == (1, 0, 0, 1)
    with pytest.raises(ValueError):
        MobiusMap(1, 0, 0, 2)
    with pytest.raises(ValueError):
        MobiusMap(1, 1, 1, 1)


def test_mobius_group_operations():
    rng = random.Random(3)
    for _ in range(5):
        g, h = MobiusMap.random(rng), MobiusMap.random(rng)
        assert g @ g.inverse() == MobiusMap.identity()
        assert (g @ h).inverse() == h.inverse() @ g.inverse()


def test_pullback_is_a_right_action():
    rng = random.Random(5)
    H = homogenize(buchstaber(1, -1, 2))
    g, h = MobiusMap.random(rng, 3), MobiusMap.random(rng, 3)
    assert mobius_pullback(mobius_pullback(H, g), h) == mobius_pullback(H, g @ h)


def test_tri_degree_preserved():
    H = homogenize(kontsevich(1, 2, 3))
    assert tri_degree(H) == (2, 2, 2)
    g = gamma_D(Fraction(3, 2))
    assert tri_degree(mobius_pushforward(H, g)) == (2, 2, 2)


def test_tri_degree_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        tri_degree(MultiPoly.var("x1") + 1)


def test_gamma_matrices():
    assert gamma_B(3).entries == (3, 1, 2, 1)
    assert gamma_D(2).entries == (1, 2, 1, 3)
    # gamma_B sends (0:1) to (1:1); gamma_D sends (1:0) to (1:1)
    assert gamma_B(5)((0, 1)) == (1, 1)
    assert gamma_D(5)((1, 0)) == (1, 1)


def test_matched_params():
    # t^3 + a1 t^2 + a2 t + a3 = -f(-t - s)
    a, b, c, A, B = 1, 2, 3, Fraction(1, 2), 2
    a1, a2, a3 = matched_buchstaber_params(a, b, c, A, B)
    t = MultiPoly.var("t")
    s = Fraction(A) + B
    f = lambda u: u ** 3 + a * u ** 2 + b * u + c
    assert t ** 3 + a1 * t ** 2 + a2 * t + a3 == -f(-t - s)


@given(small, small, small, small, small)
@settings(max_examples=8, deadline=None)
def test_pushforward_match_property(a, b, c, A, B):
    rep = mobius_match(a, b, c, A, B)
    assert rep.proportional and rep.identity_at_one_one


def test_literal_pullback_does_not_match():
    a, b, c, A, B = 1, 2, 3, 2, 1
    params = matched_buchstaber_params(a, b, c, A, B)
    assert not pullback_proportional(a, b, c, A, B, *params)


def test_gamma1_keeps_identity():
    for C in (0, 1, Fraction(-3, 2)):
        assert gamma1_preserves_identity(C).passed


# -- fixed locus of x -> -1/x ------------------------------------------------------------

def test_cubic_factor_parametrization():
    assert parametrization_check()
    assert singular_at_111()
    assert singular_at_111(cubic_factors()[1])


def test_j_routes():
    assert j_routes_agree()


def test_fixed_locus_suite():
    rep = fixed_locus_suite()
    assert rep.passed
    assert rep.divisible == [True] * 5
    assert rep.cofactor_constant and rep.cofactor == MultiPoly.const(1)


def test_j_difference_is_the_locus_product():
    J = j_difference_numerator(-1)
    prod = MultiPoly.const(1)
    for f in locus_factors():
        prod = prod * f
    assert J == prod or J == -prod


def test_j_difference_under_plus_one_inversion():
    # the +1/x inversion does not preserve j identically either
    assert not j_difference_numerator(1).is_zero()


def test_cubic_permutations():
    assert transposition_maps_cubics()
    assert not cyclic_maps_cubics()


def test_fixed_points_lie_on_locus():
    # (1, 1, 1) lies on all five factors
    for f in locus_factors():
        assert f.evaluate({"x": 1, "y": 1, "z": 1}) == 0


# -- Hesse form ---------------------------------------------------------------------------

def test_hesse_all_branches():
    rep = hesse_substitution_check()
    assert len(rep.branches) == 27
    assert rep.passed


def test_hesse_singular_points():
    assert hesse_singular_points()

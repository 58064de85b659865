from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twovalued.families import buchstaber, kontsevich, kontsevich_classical, multiplicative_toy, p_N
from twovalued.grouplaw import (
    INF, associativity_suite, check_associativity, check_identity, check_inverse, check_law,
    check_split, compatibility_pair, cubic_discriminant, cubic_discriminant_closed,
    diagonal_coefficients, eliminants, extendability, match_buchstaber, rescale_split,
    symbolic_extendability_resultant,
)
from twovalued.mpoly import MultiPoly, as_poly, resultant, symbols

x, y, z, t = symbols("x y z t")
small = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


# -- identity and inverse ----------------------------------------------------

def test_buchstaber_strong_identity_symbolic():
    r = check_identity(buchstaber(), 0)
    assert r.passed and r.detail["ratio"] == "1"


def test_kontsevich_identity_at_zero_fails_with_witness():
    r = check_identity(kontsevich(), 0)
    assert not r.passed
    assert r.witness == kontsevich().subs({"y": 0})


def test_kontsevich_identity_at_infinity():
    assert check_identity(kontsevich(), INF).passed
    assert check_identity(kontsevich(1, 2, 3), INF).passed


def test_weierstrass_witness_term():
    # D_{0,-g2/4,-g3/4}(x, 0, z) keeps a constant g2^2/16 term
    g2, g3 = as_poly("g2"), as_poly("g3")
    D = kontsevich(0, -g2 * Fraction(1, 4), -g3 * Fraction(1, 4))
    expected = (x ** 2 * z ** 2 + Fraction(1, 2) * g2 * x * z + g3 * x + g3 * z
                + g2 ** 2 * Fraction(1, 16))
    assert D.subs({"y": 0}) == expected


def test_inverse_checks():
    assert check_inverse(buchstaber(), 0).passed
    assert check_inverse(kontsevich(), INF).passed
    assert not check_inverse(kontsevich(), 0).passed


def test_multiplicative_toy_identity_one():
    assert check_identity(multiplicative_toy(), 1).passed


def test_identity_requires_symmetry():
    with pytest.raises(ValueError):
        check_identity(x ** 2 * y + z, 0)


@given(small, small, small)
@settings(max_examples=20, deadline=None)
def test_identity_property_every_buchstaber(a1, a2, a3):
    B = buchstaber(a1, a2, a3)
    assert check_identity(B, 0).passed
    assert check_inverse(B, 0).passed


# -- associativity ------------------------------------------------------------

def test_associativity_example():
    r = check_associativity(buchstaber(1, 2, 3))
    assert r.passed
    assert r.detail["roots_agree"]


def test_eliminants_shape():
    E1, E2 = eliminants(buchstaber(1, 0, 0))
    assert E1.degree("w") == E2.degree("w") == 4
    assert set(E1.vars) == {"x", "y", "z", "w"}


def test_seeded_suite_all_pass():
    results = associativity_suite(seed=7, n=3)
    assert len(results) == 3 and all(r.passed for _, r in results)


def test_associativity_kontsevich_numeric():
    assert check_associativity(kontsevich(1, -2, 3)).passed


def test_p2_plus_xyz_is_a_buchstaber_law():
    # the perturbation p2 + xyz stays inside the family: it is B_{-1/4, 0, 0}
    F = p_N(2) + x * y * z
    assert F == buchstaber(Fraction(-1, 4), 0, 0)
    assert match_buchstaber(F) == (Fraction(-1, 4), 0, 0)
    assert check_associativity(F).passed


@pytest.mark.parametrize("pert", ["x2y2z2", "xyz_s1"])
def test_genuine_negative_controls(pert):
    s1 = x + y + z
    extra = (x * y * z) ** 2 if pert == "x2y2z2" else x * y * z * s1
    r = check_associativity(p_N(2) + extra)
    assert not r.passed
    assert r.detail["gcd_stripped"]
    assert not r.detail["roots_agree"]


def test_law_report():
    rep = check_law(buchstaber(1, 2, 3))
    assert rep.passed
    js = rep.to_json()
    # f = 3t^4 + 2t^3 + t^2 + t is made monic, so kappa = 16 * 3^2
    assert js["identity"]["passed"] and js["split"]["kappa"] == "144"


# -- discriminant split ---------------------------------------------------------

def test_split_kontsevich_symbolic():
    s = check_split(kontsevich())
    a, b, c = (as_poly(n) for n in "abc")
    assert s.f == t ** 3 + a * t ** 2 + b * t + c
    assert s.kappa == 16
    assert s.strongly_separated


def test_split_buchstaber_quartic():
    s = check_split(buchstaber())
    a1, a2, a3 = (as_poly(n) for n in ("a1", "a2", "a3"))
    assert s.kappa == 16 and s.strongly_separated
    assert s.f == a3 * t ** 4 + a2 * t ** 3 + a1 * t ** 2 + t


def test_split_classical():
    sp = check_split(kontsevich_classical())
    T, S = as_poly("t"), as_poly("s")
    # t is a parameter here, so f is written in s: f(s) = s (s + 1) (s + t)
    assert sp.f == S * (S + 1) * (S + T)
    assert sp.kappa == 16 and sp.strongly_separated


def test_rescale_split():
    s = check_split(kontsevich(1, 2, 3))
    f2, k2 = rescale_split(s, 2)
    assert f2 == 2 * s.f and k2 == Fraction(4)


def test_non_split_polynomial():
    F = (x + y + z) ** 2 + x * y * z
    assert check_split(F) is None


def test_match_buchstaber_roundtrip():
    assert match_buchstaber(buchstaber(2, -1, Fraction(1, 3))) == (2, -1, Fraction(1, 3))
    assert match_buchstaber(kontsevich(1, 2, 3)) is None


# -- extendability ----------------------------------------------------------------

def test_symbolic_extendability_resultant():
    R = symbolic_extendability_resultant()
    assert R == 256 * cubic_discriminant() ** 2


def test_cubic_discriminant_routes():
    assert cubic_discriminant() == cubic_discriminant_closed()
    assert cubic_discriminant(0, -1, 0).constant_value() == 4


def test_derived_pair_is_the_diagonal():
    A, B, C = diagonal_coefficients()
    assert C.is_zero()
    assert compatibility_pair() == (A, B)


def test_printed_cubic_does_not_give_the_square():
    quartic, cubic = compatibility_pair(source="printed")
    R = resultant(quartic, cubic, "k")
    delta = cubic_discriminant()
    assert R != 256 * delta ** 2
    assert R != delta ** 2


def test_corrected_cubic_alone_gives_the_square():
    a1, a2, a3 = (as_poly(n) for n in ("a1", "a2", "a3"))
    k = MultiPoly.var("k")
    quartic, _ = compatibility_pair()
    R = resultant(quartic, 1 + a1 * k + a2 * k ** 2 + a3 * k ** 3, "k", degrees=(4, 3))
    assert R == cubic_discriminant() ** 2


@pytest.mark.parametrize("params,ok", [((0, 0, 0), False), ((1, 0, 0), False),
                                       ((0, -1, 0), True), ((1, 2, 3), True)])
def test_extendability_examples(params, ok):
    e = extendability(*params)
    assert e.extendable is ok
    assert e.R == 256 * e.delta ** 2


def test_extendability_value():
    assert extendability(0, -1, 0).R == 4096

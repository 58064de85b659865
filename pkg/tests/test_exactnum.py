from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twovalued.exactnum import (
    QQ, GF, CyclotomicElement, CyclotomicField, FqElement, count_sqrt,
    cyclotomic_polynomial, cyclotomic_pow_sum, euler_phi, fmt_rational, fq_sqrt,
    is_prime, legendre, parse_domain, parse_rational,
)

PRIMES = [3, 5, 7, 11, 13, 17, 101]
rationals = st.builds(Fraction, st.integers(-10 ** 6, 10 ** 6), st.integers(1, 50))


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    r = a * b + c
    assert r.denominator > 0 and Fraction(r.numerator, r.denominator) == r


@given(rationals)
def test_rational_roundtrip(r):
    assert parse_rational(fmt_rational(r)) == r


def test_fmt_rational_examples():
    assert fmt_rational(Fraction(6, -4)) == "-3/2"
    assert fmt_rational(Fraction(8, 4)) == "2"


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_fq_field_axioms(q, a, b, c):
    A, B, C = FqElement(a, q), FqElement(b, q), FqElement(c, q)
    assert (A + B) + C == A + (B + C)
    assert A * (B + C) == A * B + A * C
    assert A - A == FqElement(0, q)
    if A != 0:
        assert A * A.inverse() == 1
        assert A / A == 1


@given(st.sampled_from(PRIMES), st.integers(min_value=0))
def test_fq_fermat(q, a):
    A = FqElement(a, q)
    assert A ** q == A


def test_fq_mixed_fields_rejected():
    with pytest.raises(TypeError):
        FqElement(1, 5) + FqElement(1, 7)


def test_fq_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        FqElement(0, 7).inverse()


def test_fraction_coerces_into_fq():
    assert FqElement(1, 7) * Fraction(1, 2) == FqElement(4, 7)


@pytest.mark.parametrize("q", PRIMES)
def test_sqrt_counts_against_brute_force(q):
    squares = {}
    for u in range(q):
        squares.setdefault(u * u % q, []).append(u)
    for a in range(q):
        roots = squares.get(a, [])
        assert count_sqrt(FqElement(a, q)) == len(roots)
        r = fq_sqrt(FqElement(a, q))
        if roots:
            assert r == min(roots) and (r * r).residue == a
        else:
            assert r is None


def test_tonelli_shanks_hard_case():
    # 17 = 1 mod 16 exercises the full Tonelli-Shanks loop
    for a in range(1, 17):
        r = fq_sqrt(FqElement(a, 17))
        assert (r is None) == (legendre(a, 17) == -1)
        if r is not None:
            assert r * r == a


def test_small_examples():
    assert count_sqrt(FqElement(0, 13)) == 1
    assert fq_sqrt(FqElement(3, 13)) == 4
    assert legendre(2, 7) == 1 and legendre(3, 7) == -1


def test_gf_rejects_composites_and_two():
    for q in (1, 2, 4, 9, 15):
        with pytest.raises(ValueError):
            GF(q)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_zeta_is_primitive_root(N):
    z = CyclotomicElement.zeta(N, 1)
    assert z ** N == 1
    assert all(z ** k != 1 for k in range(1, N))
    total = sum((z ** k for k in range(N)), CyclotomicElement([0], N))
    assert total == 0


@given(st.integers(2, 6), st.lists(rationals, min_size=1, max_size=5))
@settings(max_examples=40)
def test_cyclotomic_inverse(N, coeffs):
    a = CyclotomicElement(coeffs, N)
    if a != 0:
        assert a * a.inverse() == 1


def test_cyclotomic_power_sum_is_rational():
    # sum_k (1 + zeta^k)^3 = N for N > 3
    assert cyclotomic_pow_sum(5, lambda z: (1 + z) ** 3) == 5
    assert cyclotomic_pow_sum(3, lambda z: (1 + z) ** 3) == 3 + 3


def test_domain_parsing():
    assert parse_domain("QQ") is QQ
    assert parse_domain("GF(13)") == GF(13)
    assert parse_domain("QQ(zeta3)") == CyclotomicField(3)
    with pytest.raises(ValueError):
        parse_domain("ZZ")
    with pytest.raises(ValueError):
        parse_domain("GF(9)")

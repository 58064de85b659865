"""Constructors for the symmetric biquadratic families and toy laws.

Parameters may be given as numbers (rationals or field elements) or as
variable names; a name turns the parameter into an extra polynomial
variable, so identities checked over a symbolic family hold for every
specialization.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QQ, CyclotomicField, Domain
from .mpoly import (
    MultiPoly, as_poly, discriminant, divides, elementary_symmetric, is_symmetric,
    to_sigma, substitute,
)

SYMBOLIC_B = ("a1", "a2", "a3")
SYMBOLIC_D = ("a", "b", "c")


def _vars(domain):
    return tuple(MultiPoly.var(n, domain) for n in ("x", "y", "z"))


def _params(values, domain):
    return tuple(as_poly(v, domain) for v in values)


def _assert_symmetric(p, what):
    if not is_symmetric(p):
        raise AssertionError(f"{what} is not symmetric in x, y, z")
    return p


def buchstaber(a1="a1", a2="a2", a3="a3", domain: Domain = QQ) -> MultiPoly:
    """B = (x+y+z - a2 xyz)^2 - 4 (1 + a3 xyz)(xy+yz+zx + a1 xyz)."""
    A1, A2, A3 = _params((a1, a2, a3), domain)
    s1, s2, s3 = elementary_symmetric(domain)
    B = (s1 - A2 * s3) ** 2 - 4 * (1 + A3 * s3) * (s2 + A1 * s3)
    return _assert_symmetric(B, "Buchstaber polynomial")


def buchstaber_sigma(a1="a1", a2="a2", a3="a3", domain: Domain = QQ) -> MultiPoly:
    """The same polynomial written in sigma1, sigma2, sigma3."""
    A1, A2, A3 = _params((a1, a2, a3), domain)
    s1, s2, s3 = (MultiPoly.var(n, domain) for n in ("sigma1", "sigma2", "sigma3"))
    return (s1 - A2 * s3) ** 2 - 4 * (1 + A3 * s3) * (s2 + A1 * s3)


def kontsevich_sigma(a="a", b="b", c="c", domain: Domain = QQ) -> MultiPoly:
    """(sigma2 - b)^2 - 4 (sigma3 + c)(sigma1 + a)."""
    A, B, C = _params((a, b, c), domain)
    s1, s2, s3 = (MultiPoly.var(n, domain) for n in ("sigma1", "sigma2", "sigma3"))
    return (s2 - B) ** 2 - 4 * (s3 + C) * (s1 + A)


def kontsevich_by_discriminant(a="a", b="b", c="c", domain: Domain = QQ) -> MultiPoly:
    """disc_t of t^3 + a t^2 + b t + c - (t-x)(t-y)(t-z)."""
    A, B, C = _params((a, b, c), domain)
    if any("t" in p.vars for p in (A, B, C)):
        raise ValueError("parameters may not involve t, the discriminant variable")
    x, y, z = _vars(domain)
    t = MultiPoly.var("t", domain)
    lagrange = t ** 3 + A * t ** 2 + B * t + C - (t - x) * (t - y) * (t - z)
    if lagrange.degree("t") < 2:
        raise ValueError("difference polynomial is not quadratic in t")
    return discriminant(lagrange, "t")


def kontsevich_explicit(a="a", b="b", c="c", domain: Domain = QQ) -> MultiPoly:
    """The expanded form collected in z."""
    A, B, C = _params((a, b, c), domain)
    x, y, z = _vars(domain)
    return ((x - y) ** 2 * z ** 2
            - 2 * (2 * A * x * y + (x + y) * (x * y + B) + 2 * C) * z
            + (x * y - B) ** 2 - 4 * C * (x + y + A))


def kontsevich(a="a", b="b", c="c", domain: Domain = QQ) -> MultiPoly:
    """Generalized Kontsevich polynomial D_{a,b,c}(x, y, z).

    Built by the discriminant route and by the explicit formula; the two
    must coincide exactly.
    """
    D1 = kontsevich_by_discriminant(a, b, c, domain)
    D2 = kontsevich_explicit(a, b, c, domain)
    if D1 != D2:
        raise AssertionError("discriminant and explicit constructions disagree")
    return _assert_symmetric(D1, "Kontsevich polynomial")


def kontsevich_classical(t="t", domain: Domain = QQ) -> MultiPoly:
    """P_t = (xy+yz+zx - t)^2 - 4xyz(1 + t + x + y + z)."""
    T = as_poly(t, domain)
    s1, s2, s3 = elementary_symmetric(domain)
    return (s2 - T) ** 2 - 4 * s3 * (1 + T + s1)


@dataclass(frozen=True)
class LawTriple:
    """Coefficients of A z^2 + B z + C = 0 as polynomials in x, y."""

    A: MultiPoly
    B: MultiPoly
    C: MultiPoly

    def quadratic(self) -> MultiPoly:
        z = MultiPoly.var("z", self.A.domain)
        return self.A * z ** 2 + self.B * z + self.C

    def at(self, point):
        """Evaluate (A, B, C) at ``{"x": ..., "y": ...}`` (plus parameters)."""
        return tuple(p.evaluate({k: v for k, v in point.items() if k in p.vars}) if p.vars
                     else p.constant_value() for p in (self.A, self.B, self.C))


def law_triple(a="a", b="b", c="c", domain: Domain = QQ) -> LawTriple:
    """A = (x-y)^2, B = -2[(b+xy)(x+y) + 2(c+axy)], C = (xy-b)^2 - 4c(x+y+a)."""
    A_, B_, C_ = _params((a, b, c), domain)
    x, y, _ = _vars(domain)
    triple = LawTriple(
        (x - y) ** 2,
        -2 * ((B_ + x * y) * (x + y) + 2 * (C_ + A_ * x * y)),
        (x * y - B_) ** 2 - 4 * C_ * (x + y + A_),
    )
    if triple.quadratic() != kontsevich(a, b, c, domain):
        raise AssertionError("law triple does not reproduce the Kontsevich polynomial")
    return triple


def law_triple_of(F: MultiPoly, var="z") -> LawTriple:
    """Collect a biquadratic in ``var`` into its (A, B, C) coefficients."""
    cs = F.coeffs_in(var)
    zero = MultiPoly.zero(F.domain)
    if F.degree(var) > 2:
        raise ValueError("not quadratic in %s" % var)
    return LawTriple(cs.get(2, zero), cs.get(1, zero), cs.get(0, zero))


def p_N(N: int) -> MultiPoly:
    """prod_k (z - (s + zeta^k r)^N) with s^N -> x, r^N -> y.

    The expansion is carried out over Q(zeta_N); every exponent of s and r
    must come out divisible by N and every coefficient rational.
    """
    if not 2 <= N <= 6:
        raise ValueError("p_N is supported for 2 <= N <= 6")
    K = CyclotomicField(N)
    s, r, z = (MultiPoly.var(n, K) for n in ("s", "r", "z"))
    prod = MultiPoly.const(1, K)
    for k in range(N):
        prod = prod * (z - (s + K.zeta(k) * r) ** N)
    terms = {}
    vi = {n: i for i, n in enumerate(prod.vars)}
    for e, c in prod.terms.items():
        es = e[vi["s"]] if "s" in vi else 0
        er = e[vi["r"]] if "r" in vi else 0
        ez = e[vi["z"]] if "z" in vi else 0
        if es % N or er % N:
            raise AssertionError("exponent of s or r not divisible by N")
        if not c.is_rational():
            raise AssertionError("non-rational coefficient in p_N")
        terms[(ez, es // N, er // N)] = c.to_rational()
    return MultiPoly(("z", "x", "y"), terms, QQ)


def multiplicative_toy(domain: Domain = QQ) -> MultiPoly:
    """z^2 - 2xyz + x^2 + y^2 - 1."""
    x, y, z = _vars(domain)
    return z ** 2 - 2 * x * y * z + x ** 2 + y ** 2 - 1


def mordell_toy(domain: Domain = QQ) -> MultiPoly:
    """z^2 - 2(x + y + xy) z + (x - y)^2."""
    x, y, z = _vars(domain)
    return z ** 2 - 2 * (x + y + x * y) * z + (x - y) ** 2


def named_toys(domain: Domain = QQ):
    """Both toy laws, after checking that the unit shift maps one to the other."""
    mult = multiplicative_toy(domain)
    mord = mordell_toy(domain)
    x, y, z = _vars(domain)
    if mult.subs({"x": x + 1, "y": y + 1, "z": z + 1}) != mord:
        raise AssertionError("shift x -> x+1 does not carry the toy law to the Mordell form")
    return {"multiplicative": mult, "mordell": mord}


HOMOG = {"x": ("x1", "x0"), "y": ("y1", "y0"), "z": ("z1", "z0")}


def homogenize(F: MultiPoly, degree=2) -> MultiPoly:
    """Tri-homogenize: x -> x1/x0 etc., times (x0 y0 z0)^degree."""
    for n in ("x", "y", "z"):
        if F.degree(n) > degree:
            raise ValueError(f"degree in {n} exceeds {degree}")
    dom = F.domain
    out = {}
    names = F.vars
    new_vars = tuple(v for n in names for v in (HOMOG[n] if n in HOMOG else (n,)))
    extra = [pair for n, pair in HOMOG.items() if n not in names]
    for e, c in F.terms.items():
        ne = []
        for n, k in zip(names, e):
            if n in HOMOG:
                ne += [k, degree - k]
            else:
                ne.append(k)
        out[tuple(ne)] = c
    H = MultiPoly(new_vars, out, dom)
    for one, zero in extra:
        H = H * MultiPoly.var(zero, dom) ** degree
    return H


def dehomogenize(H: MultiPoly) -> MultiPoly:
    """Set x0 = y0 = z0 = 1 and rename x1 -> x etc."""
    H = H.subs({"x0": 1, "y0": 1, "z0": 1})
    return H.rename({"x1": "x", "y1": "y", "z1": "z"})


def chart_swap(H: MultiPoly) -> MultiPoly:
    """Exchange x1 <-> x0 (and likewise for y, z): the map x -> 1/x."""
    return H.rename({"x1": "x0", "x0": "x1", "y1": "y0", "y0": "y1", "z1": "z0", "z0": "z1"})


def invert_variables(F: MultiPoly, sign=1) -> MultiPoly:
    """(xyz)^2 F(sign/x, sign/y, sign/z), computed by rational substitution."""
    dom = F.domain
    s = {n: (sign, MultiPoly.var(n, dom)) for n in ("x", "y", "z")}
    N, D = substitute(F, s)
    x, y, z = _vars(dom)
    # D = prod n^deg_n(F); rescale to the (xyz)^2 normalization
    target = (x * y * z) ** 2
    q = divides(D, N * target)
    if q is None:
        raise ArithmeticError("inverted polynomial does not clear with (xyz)^2")
    return q

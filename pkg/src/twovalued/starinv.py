"""The star involution, the Buchstaber/Kontsevich correspondence, Moebius
actions on tri-homogeneous laws and the fixed locus of x -> -1/x.

Sign conventions (determined by computation and frozen in the tests):

* ``(xyz)^2 D_{a,b,c}(+1/x, +1/y, +1/z) = B_{a,b,c}``; the -1/x substitution
  gives ``B_{-a,b,-c}`` instead.
* ``B = disc_t[xyz f(t) - (xt - 1)(yt - 1)(zt - 1)]`` with
  f = t^3 + a t^2 + b t + c; the form with (t + 1/x) factors gives
  ``B_{-a,b,-c}``.
* ``B_sigma = sigma3^2 (D_sigma)^star`` with the +1/x star map.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import random

from .exactnum import QQ, CyclotomicField
from .families import (
    buchstaber, buchstaber_sigma, homogenize, dehomogenize, invert_variables,
    kontsevich, kontsevich_sigma,
)
from .grouplaw import CheckResult, check_identity
from .mpoly import (
    MultiPoly, as_poly, discriminant, divides, elementary_symmetric, from_sigma,
    proportional, rational_content, substitute,
)

SIGMA = ("sigma1", "sigma2", "sigma3")
FROZEN_KB_SIGN = 1


# ---------------------------------------------------------------------------
# Laurent polynomials in sigma1, sigma2, sigma3^{+-1}

def _s3_exponent(e, vars):
    return e[vars.index("sigma3")] if "sigma3" in vars else 0


@dataclass(frozen=True)
class SigmaLaurent:
    """poly / sigma3^k, kept reduced (sigma3 does not divide poly when k > 0)."""

    poly: MultiPoly
    k: int = 0

    def __post_init__(self):
        poly, k = self.poly, self.k
        if poly.is_zero():
            object.__setattr__(self, "k", 0)
            return
        if k < 0:
            poly, k = poly * MultiPoly.var("sigma3", poly.domain) ** (-k), 0
        m = min(_s3_exponent(e, poly.vars) for e in poly.terms)
        shift = min(m, k)
        if shift:
            poly = divides(MultiPoly.var("sigma3", poly.domain) ** shift, poly)
            k -= shift
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "k", k)

    def __eq__(self, other):
        return isinstance(other, SigmaLaurent) and self.k == other.k and self.poly == other.poly

    def __hash__(self):
        return hash((self.poly, self.k))

    def times_s3(self, n: int) -> "SigmaLaurent":
        return SigmaLaurent(self.poly, self.k - n)

    def to_xyz(self):
        """(numerator, denominator) in x, y, z."""
        _, _, e3 = elementary_symmetric(self.poly.domain)
        return from_sigma(self.poly), e3 ** self.k

    def __str__(self):
        if self.k == 0:
            return str(self.poly)
        return f"({self.poly}) / sigma3" + (f"^{self.k}" if self.k > 1 else "")


def star(P: SigmaLaurent, sign: int = 1) -> SigmaLaurent:
    """sigma1 -> sign*sigma2/sigma3, sigma2 -> sigma1/sigma3, sigma3 -> sign/sigma3.

    sign = +1 is the map induced by x -> 1/x; sign = -1 by x -> -1/x.  A
    monomial sigma1^i sigma2^j sigma3^l / sigma3^k goes to
    sign^(i+l+k) sigma1^j sigma2^i sigma3^(k-i-j-l).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    poly = P.poly
    vars = poly.vars
    idx = [vars.index(n) if n in vars else None for n in SIGMA]
    other = [i for i, n in enumerate(vars) if n not in SIGMA]
    out_vars = SIGMA + tuple(vars[i] for i in other)
    raw = {}
    for e, c in poly.terms.items():
        i, j, l = (e[p] if p is not None else 0 for p in idx)
        s3 = P.k - i - j - l
        key = (j, i, s3) + tuple(e[p] for p in other)
        raw[key] = raw.get(key, 0) + (c if sign == 1 or (i + l + P.k) % 2 == 0 else -c)
    if not raw:
        return SigmaLaurent(MultiPoly.zero(poly.domain))
    low = min(key[2] for key in raw)
    k = max(0, -low)
    terms = {key[:2] + (key[2] + k,) + key[3:]: c for key, c in raw.items()}
    return SigmaLaurent(MultiPoly(out_vars, terms, poly.domain), k)


def kontsevich_star_identity(sign: int = 1) -> CheckResult:
    """B_sigma(a,b,c) - sigma3^2 (D_sigma(a,b,c))^star, symbolically."""
    D = SigmaLaurent(kontsevich_sigma("a", "b", "c"))
    rhs = star(D, sign).times_s3(2)
    B = SigmaLaurent(buchstaber_sigma("a", "b", "c"))
    diff = B.poly * MultiPoly.var("sigma3") ** rhs.k - rhs.poly
    return CheckResult(f"star identity (sign {sign:+d})", diff.is_zero(),
                       None if diff.is_zero() else diff, {"sign": sign})


# ---------------------------------------------------------------------------
# Buchstaber <-> Kontsevich

def _flip(v):
    p = as_poly(v)
    return -p if not p.is_zero() else p


def kb_check(a="a", b="b", c="c", sign: int = FROZEN_KB_SIGN) -> CheckResult:
    """(xyz)^2 D(a,b,c | sign/x, sign/y, sign/z) == B_{a,b,c}(x,y,z)."""
    lhs = invert_variables(kontsevich(a, b, c), sign)
    rhs = buchstaber(a, b, c)
    diff = lhs - rhs
    detail = {"sign": sign}
    if sign == -1:
        detail["matches_buchstaber_with_(-a,b,-c)"] = lhs == buchstaber(_flip(a), b, _flip(c))
    return CheckResult(f"kontsevich-buchstaber (sign {sign:+d})", diff.is_zero(),
                       None if diff.is_zero() else diff, detail)


def kb_disc_presentation(a="a", b="b", c="c", form="derived") -> CheckResult:
    """B_{a,b,c} as a discriminant in t, computed independently of D.

    ``form="derived"`` uses xyz f(t) - (xt-1)(yt-1)(zt-1); ``form="printed"``
    uses xyz f(t) - xyz (t+1/x)(t+1/y)(t+1/z) = xyz f(t) - (xt+1)(yt+1)(zt+1).
    """
    A, B_, C = (as_poly(v) for v in (a, b, c))
    x, y, z, t = (MultiPoly.var(n) for n in ("x", "y", "z", "t"))
    s = -1 if form == "derived" else 1
    if form not in ("derived", "printed"):
        raise ValueError("form must be 'derived' or 'printed'")
    f = t ** 3 + A * t ** 2 + B_ * t + C
    lag = x * y * z * f - (x * t + s) * (y * t + s) * (z * t + s)
    disc = discriminant(lag, "t")
    target = buchstaber(a, b, c)
    diff = disc - target
    detail = {"form": form}
    if form == "printed":
        detail["matches_buchstaber_with_(-a,b,-c)"] = disc == buchstaber(_flip(a), b, _flip(c))
    return CheckResult(f"discriminant presentation ({form})", diff.is_zero(),
                       None if diff.is_zero() else diff, detail)


def determine_kb_sign(a="a", b="b", c="c"):
    """Run both signs and return the ones that satisfy the identity."""
    return [s for s in (1, -1) if kb_check(a, b, c, s).passed]


# ---------------------------------------------------------------------------
# Moebius maps

def _rational_sqrt(r: Fraction):
    r = Fraction(r)
    if r < 0:
        return None
    n, d = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if n * n == r.numerator and d * d == r.denominator:
        return Fraction(n, d)
    return None


class MobiusMap:
    """[X : X0] -> [A X + B X0 : C X + D X0] with AD - BC = 1.

    The constructor rescales a matrix whose determinant is a nonzero rational
    square; other determinants are rejected because the rescaling would leave
    the rationals.
    """

    def __init__(self, A, B, C, D):
        A, B, C, D = (Fraction(v) for v in (A, B, C, D))
        det = A * D - B * C
        if det == 0:
            raise ValueError("singular Moebius matrix")
        r = _rational_sqrt(det)
        if r is None:
            raise ValueError(f"determinant {det} is not a rational square")
        self.A, self.B, self.C, self.D = A / r, B / r, C / r, D / r

    @property
    def entries(self):
        return (self.A, self.B, self.C, self.D)

    def __matmul__(self, other):
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        return MobiusMap(self.D, -self.B, -self.C, self.A)

    def __eq__(self, other):
        # equality in SL_2, not PSL_2
        return isinstance(other, MobiusMap) and self.entries == other.entries

    def __call__(self, point):
        X, X0 = point
        return (self.A * X + self.B * X0, self.C * X + self.D * X0)

    def __repr__(self):
        return "MobiusMap(%s, %s; %s, %s)" % tuple(str(v) for v in self.entries)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def random(cls, rng: random.Random, span=5):
        """Product of elementary unipotents: always determinant 1."""
        g = cls.identity()
        for _ in range(3):
            s = Fraction(rng.randint(-span, span), rng.randint(1, span))
            g = g @ (cls(1, s, 0, 1) if rng.random() < 0.5 else cls(1, 0, s, 1))
        return g


PAIRS = (("x1", "x0"), ("y1", "y0"), ("z1", "z0"))


def tri_degree(H: MultiPoly):
    """(deg_x, deg_y, deg_z) when H is tri-homogeneous, else ValueError."""
    degs = []
    for one, zero in PAIRS:
        i1 = H.vars.index(one) if one in H.vars else None
        i0 = H.vars.index(zero) if zero in H.vars else None
        tot = {(e[i1] if i1 is not None else 0) + (e[i0] if i0 is not None else 0)
               for e in H.terms}
        if len(tot) > 1:
            raise ValueError(f"not homogeneous in ({one}, {zero})")
        degs.append(tot.pop() if tot else 0)
    return tuple(degs)


def mobius_pullback(H: MultiPoly, g: MobiusMap) -> MultiPoly:
    """H o g: substitute (X, X0) -> (A X + B X0, C X + D X0) in all three pairs.

    This is a right action: pullback by g1, then by g2, equals pullback by
    g1 @ g2.
    """
    before = tri_degree(H)
    A, B, C, D = g.entries
    mapping = {}
    for one, zero in PAIRS:
        X, X0 = MultiPoly.var(one, H.domain), MultiPoly.var(zero, H.domain)
        mapping[one] = A * X + B * X0
        mapping[zero] = C * X + D * X0
    out = H.subs(mapping)
    if not out.is_zero() and tri_degree(out) != before:
        raise AssertionError("tri-degree changed under a Moebius substitution")
    return out


def mobius_pushforward(H: MultiPoly, g: MobiusMap) -> MultiPoly:
    """H o g^{-1}; moves the identity element e to g(e)."""
    return mobius_pullback(H, g.inverse())


def gamma_B(A) -> MobiusMap:
    return MobiusMap(A, 1, Fraction(A) - 1, 1)


def gamma_D(B) -> MobiusMap:
    return MobiusMap(1, B, 1, Fraction(B) + 1)


def matched_buchstaber_params(a, b, c, A, B):
    """(a1, a2, a3) with t^3 + a1 t^2 + a2 t + a3 = -f(-t - (A + B)).

    With this matching, gamma_B pushes B_{a1,a2,a3} and gamma_D pushes
    D_{a,b,c} to proportional laws with identity (1:1), for every A and B.
    """
    a, b, c, s = (Fraction(v) for v in (a, b, c, Fraction(A) + Fraction(B)))
    # -f(-t - s) expanded: f(u) = u^3 + a u^2 + b u + c with u = -(t + s)
    a1 = 3 * s - a
    a2 = 3 * s * s - 2 * a * s + b
    a3 = s ** 3 - a * s * s + b * s - c
    return a1, a2, a3


@dataclass
class MobiusReport:
    a: tuple
    A: Fraction
    B: Fraction
    buchstaber_params: tuple
    proportional: bool
    identity_at_one_one: bool

    def to_json(self):
        return {"abc": [str(v) for v in self.a], "A": str(self.A), "B": str(self.B),
                "buchstaber_params": [str(v) for v in self.buchstaber_params],
                "proportional": self.proportional,
                "identity_at_one_one": self.identity_at_one_one}


def _identity_at_one_one(H: MultiPoly) -> bool:
    """F(x, (1:1), z) proportional to (x1 z0 - x0 z1)^2."""
    G = H.subs({"y1": 1, "y0": 1})
    x1, x0, z1, z0 = (MultiPoly.var(n) for n in ("x1", "x0", "z1", "z0"))
    return proportional(G, (x1 * z0 - x0 * z1) ** 2)


def mobius_match(a, b, c, A, B) -> MobiusReport:
    """Push B and D to the (1:1) orbit and compare up to a nonzero scalar."""
    params = matched_buchstaber_params(a, b, c, A, B)
    PB = mobius_pushforward(homogenize(buchstaber(*params)), gamma_B(A))
    PD = mobius_pushforward(homogenize(kontsevich(a, b, c)), gamma_D(B))
    return MobiusReport((a, b, c), Fraction(A), Fraction(B), params, proportional(PB, PD),
                        _identity_at_one_one(PB) and _identity_at_one_one(PD))


def pullback_proportional(a, b, c, A, B, a1, a2, a3) -> bool:
    """Literal pullback reading: B o gamma_B versus D o gamma_D."""
    PB = mobius_pullback(homogenize(buchstaber(a1, a2, a3)), gamma_B(A))
    PD = mobius_pullback(homogenize(kontsevich(a, b, c)), gamma_D(B))
    return proportional(PB, PD)


def gamma1_preserves_identity(C, a1=1, a2=2, a3=3) -> CheckResult:
    """gamma_1(C) = (1, 0; C, 1) fixes (0:1); B o gamma_1(C) keeps identity 0."""
    H = mobius_pullback(homogenize(buchstaber(a1, a2, a3)), MobiusMap(1, 0, C, 1))
    r = check_identity(dehomogenize(H), 0)
    return CheckResult("gamma_1 keeps the identity (0:1)", r.passed, r.witness, {"C": str(C)})


# ---------------------------------------------------------------------------
# fixed locus of x -> -1/x

def cubic_factors():
    x, y, z = (MultiPoly.var(n) for n in ("x", "y", "z"))
    first = x ** 2 * y + z ** 2 * x + y ** 2 * z - 3 * x * y * z
    second = x ** 2 * z + y ** 2 * x + y * z ** 2 - 3 * x * y * z
    return first, second


def locus_factors():
    x, y, z = (MultiPoly.var(n) for n in ("x", "y", "z"))
    first, second = cubic_factors()
    return [x * z - y ** 2, x * y - z ** 2, x ** 2 - y * z, first, second]


def j_invariant_depressed():
    """j of y^2 = (t-x)(t-y)(t-z) through t -> t + sigma1/3.

    The shifted cubic is t^3 + p t + q; with g2 = -4p, g3 = -4q,
    j = 1728 g2^3 / (g2^3 - 27 g3^2).  Returned as (numerator, denominator).
    """
    s1, s2, s3 = elementary_symmetric()
    p = s2 - s1 ** 2 * Fraction(1, 3)
    q = -Fraction(2, 27) * s1 ** 3 + s1 * s2 * Fraction(1, 3) - s3
    g2, g3 = -4 * p, -4 * q
    return 1728 * g2 ** 3, g2 ** 3 - 27 * g3 ** 2


def j_invariant_sigma():
    """256 (sigma1^2 - 3 sigma2)^3 / Delta with Delta the root discriminant."""
    x, y, z = (MultiPoly.var(n) for n in ("x", "y", "z"))
    s1, s2, _ = elementary_symmetric()
    return 256 * (s1 ** 2 - 3 * s2) ** 3, ((x - y) * (y - z) * (z - x)) ** 2


def _invert_fraction(num, den, sign):
    """(num, den) evaluated at sign/x, cleared by a common power of xyz."""
    xyz = MultiPoly.var("x") * MultiPoly.var("y") * MultiPoly.var("z")
    k = max(max(p.degree(v) for v in ("x", "y", "z")) for p in (num, den))
    out = []
    for p in (num, den):
        s = {n: (sign, MultiPoly.var(n)) for n in ("x", "y", "z")}
        N, D = substitute(p, s)
        out.append(divides(D, N * xyz ** k))
    return tuple(out)


def j_difference_numerator(sign=-1, route="depressed"):
    """Numerator of j(x,y,z) - j(sign/x, sign/y, sign/z), content-normalized.

    The common denominator factor Delta is cancelled exactly when the inverted
    denominator is a multiple of the original one.
    """
    num, den = j_invariant_depressed() if route == "depressed" else j_invariant_sigma()
    num2, den2 = _invert_fraction(num, den, sign)
    ratio = divides(den, den2)
    if ratio is not None:
        J = num * ratio - num2
    else:
        J = num * den2 - num2 * den
    return J.scale(1 / rational_content(J)) if not J.is_zero() else J


@dataclass
class FixedLocusReport:
    parametrization: bool
    singular_at_111: bool
    j_routes_agree: bool
    divisible: list
    cofactor: MultiPoly
    cofactor_constant: bool

    @property
    def passed(self):
        return (self.parametrization and self.singular_at_111 and self.j_routes_agree
                and all(self.divisible))

    def to_json(self):
        return {"passed": self.passed, "parametrization": self.parametrization,
                "singular_at_111": self.singular_at_111, "j_routes_agree": self.j_routes_agree,
                "divisible": self.divisible, "cofactor": self.cofactor.to_json(),
                "cofactor_constant": self.cofactor_constant}


def parametrization_check() -> bool:
    u, v = MultiPoly.var("u"), MultiPoly.var("v")
    first, _ = cubic_factors()
    sub = first.subs({"x": (u + v) ** 2 * v, "y": -(u ** 2) * (u + v), "z": v ** 2 * u})
    return sub.is_zero()


def singular_at_111(F=None) -> bool:
    F = cubic_factors()[0] if F is None else F
    pt = {"x": 1, "y": 1, "z": 1}
    return F.evaluate(pt) == 0 and all(F.diff(v).evaluate(pt) == 0 for v in ("x", "y", "z"))


def j_routes_agree() -> bool:
    n1, d1 = j_invariant_depressed()
    n2, d2 = j_invariant_sigma()
    return (n1 * d2 - n2 * d1).is_zero()


def fixed_locus_suite(sign=-1) -> FixedLocusReport:
    J = j_difference_numerator(sign)
    factors = locus_factors()
    divisible = [divides(f, J) is not None for f in factors]
    prod = MultiPoly.const(1)
    for f in factors:
        prod = prod * f
    cof = divides(prod, J)
    cof = cof if cof is not None else MultiPoly.zero()
    return FixedLocusReport(parametrization_check(), singular_at_111(), j_routes_agree(),
                            divisible, cof, cof.is_constant() and not cof.is_zero())


def transposition_maps_cubics() -> bool:
    """x <-> z carries the first cubic factor to the second."""
    first, second = cubic_factors()
    return first.rename({"x": "z", "z": "x"}) == second


def cyclic_maps_cubics() -> bool:
    """x -> y -> z -> x; recorded for comparison with the transposition."""
    first, second = cubic_factors()
    return first.rename({"x": "y", "y": "z", "z": "x"}) == second


# ---------------------------------------------------------------------------
# Hesse form

@dataclass
class HesseReport:
    branches: list
    singular_points: bool

    @property
    def passed(self):
        return all(b["holds"] for b in self.branches) and self.singular_points

    def to_json(self):
        return {"passed": self.passed, "branches": self.branches,
                "singular_points": self.singular_points}


def hesse_substitution_check() -> HesseReport:
    """x = X^3, y = Y^3, z = Z^3 and v = z^j1 X^2 Y, w = z^j2 Y^2 Z, r = z^j3 Z^2 X.

    Then v^3 = x^2 y, w^3 = y^2 z, r^3 = z^2 x, and the first cubic factor
    equals v^3 + w^3 + r^3 - 3 chi v w r exactly when
    chi = zeta^-(j1 + j2 + j3).  Every branch is checked over Q(zeta_3).
    """
    K = CyclotomicField(3)
    X, Y, Z = (MultiPoly.var(n, K) for n in ("X", "Y", "Z"))
    first, _ = cubic_factors()
    lhs = first.to_domain(K).subs({"x": X ** 3, "y": Y ** 3, "z": Z ** 3})
    branches = []
    for j1 in range(3):
        for j2 in range(3):
            for j3 in range(3):
                v = K.zeta(j1) * X ** 2 * Y
                w = K.zeta(j2) * Y ** 2 * Z
                r = K.zeta(j3) * Z ** 2 * X
                i = (-(j1 + j2 + j3)) % 3
                chi = K.zeta(i)
                rhs = v ** 3 + w ** 3 + r ** 3 - 3 * chi * v * w * r
                branches.append({"branch": [j1, j2, j3], "chi_power": i, "holds": lhs == rhs})
    return HesseReport(branches, hesse_singular_points())


def hesse_singular_points() -> bool:
    """[zeta_j^2 xi : zeta_j xi : 1] is singular on v^3+w^3+r^3-3 xi v w r."""
    K = CyclotomicField(3)
    v, w, r = (MultiPoly.var(n, K) for n in ("v", "w", "r"))
    for i in range(3):
        xi = K.zeta(i)
        H = v ** 3 + w ** 3 + r ** 3 - 3 * xi * v * w * r
        grads = [H.diff(n) for n in ("v", "w", "r")]
        for j in range(3):
            zj = K.zeta(j)
            pt = {"v": zj * zj * xi, "w": zj * xi, "r": K.coerce(1)}
            if H.evaluate(pt) != 0 or any(g.evaluate(pt) != 0 for g in grads):
                return False
    return True

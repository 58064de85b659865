"""Elliptic curves y^2 = alpha t^3 + a t^2 + b t + c over Q or F_q.

Two presentations are supported: the monic root form ``t^3 + a t^2 + b t + c``
and the Weierstrass form ``4 t^3 - g2 t - g3``.  Points are ``(t, w)`` pairs
or the point at infinity ``O``; the projection to the base line sends ``O``
to the symbol ``INF``.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
import random

from .exactnum import QQ, GF, FqElement, fq_sqrt

INF = "inf"


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "O"

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("O")


O = _Infinity()


@dataclass(frozen=True)
class CurvePoint:
    t: object
    w: object

    def __iter__(self):
        return iter((self.t, self.w))


class EllipticCurve:
    """y^2 = alpha t^3 + a t^2 + b t + c over a field (QQ or GF(q))."""

    def __init__(self, a, b, c, field=QQ, alpha=1):
        if isinstance(field, int):
            field = GF(field)
        self.field = field
        self.alpha = field.coerce(alpha)
        self.a, self.b, self.c = (field.coerce(v) for v in (a, b, c))
        self.form = "monic" if self.alpha == 1 else "general"

    @classmethod
    def weierstrass(cls, g2, g3, field=QQ):
        """y^2 = 4 t^3 - g2 t - g3."""
        if isinstance(field, int):
            field = GF(field)
        E = cls(0, -field.coerce(g2), -field.coerce(g3), field, alpha=4)
        E.form = "weierstrass"
        return E

    def __repr__(self):
        return f"EllipticCurve(alpha={self.alpha}, a={self.a}, b={self.b}, c={self.c}, field={self.field})"

    def __eq__(self, other):
        return (isinstance(other, EllipticCurve) and self.field == other.field
                and (self.alpha, self.a, self.b, self.c) == (other.alpha, other.a, other.b, other.c))

    def __hash__(self):
        return hash((self.field, self.alpha, self.a, self.b, self.c))

    def cubic(self, t):
        t = self.field.coerce(t)
        return ((self.alpha * t + self.a) * t + self.b) * t + self.c

    def discriminant(self):
        """Discriminant of the cubic alpha t^3 + a t^2 + b t + c."""
        A, a, b, c = self.alpha, self.a, self.b, self.c
        return (a * a * b * b - 4 * A * b ** 3 - 4 * a ** 3 * c
                + 18 * A * a * b * c - 27 * A * A * c * c)

    @property
    def degenerate(self):
        return self.discriminant() == 0

    def contains(self, P) -> bool:
        if P == O:
            return True
        return P.w * P.w == self.cubic(P.t)

    def point(self, t, w):
        P = CurvePoint(self.field.coerce(t), self.field.coerce(w))
        if not self.contains(P):
            raise ValueError(f"{P} is not on {self}")
        return P

    def neg(self, P):
        if P == O:
            return O
        return CurvePoint(P.t, -P.w)

    def add(self, P, Q):
        """Chord-and-tangent sum: P + Q + R = O for collinear P, Q, R."""
        if self.degenerate:
            raise ValueError("group law requested on a degenerate curve")
        if P == O:
            return Q
        if Q == O:
            return P
        if P.t == Q.t:
            if P.w != Q.w or P.w == 0:
                return O
            lam = (3 * self.alpha * P.t * P.t + 2 * self.a * P.t + self.b) / (2 * P.w)
        else:
            lam = (Q.w - P.w) / (Q.t - P.t)
        nu = P.w - lam * P.t
        t3 = (lam * lam - self.a) / self.alpha - P.t - Q.t
        return CurvePoint(t3, -(lam * t3 + nu))

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        R, base = O, P
        while n:
            if n & 1:
                R = self.add(R, base)
            base = self.add(base, base)
            n >>= 1
        return R

    def lift(self, x):
        """All points with first coordinate x (0, 1 or 2 of them)."""
        x = self.field.coerce(x)
        v = self.cubic(x)
        if v == 0:
            return [CurvePoint(x, self.field.coerce(0))]
        r = _sqrt(v, self.field)
        if r is None:
            return []
        return [CurvePoint(x, r), CurvePoint(x, -r)]

    def points(self):
        """Every point of the curve over F_q (O first)."""
        if not isinstance(self.field, GF):
            raise ValueError("point enumeration needs a finite field")
        pts = [O]
        for t in self.field.elements():
            pts.extend(self.lift(t))
        return pts


def _sqrt(v, field):
    if isinstance(field, GF):
        return fq_sqrt(v)
    v = Fraction(v)
    if v < 0:
        return None
    n, d = math.isqrt(v.numerator), math.isqrt(v.denominator)
    if n * n == v.numerator and d * d == v.denominator:
        return Fraction(n, d)
    return None


def project(P):
    return INF if P == O else P.t


def _sort_key(v):
    if isinstance(v, str) and v == INF:
        return (1, 0)
    return (0, int(v) if isinstance(v, FqElement) else v)


def multiset(values):
    return tuple(sorted(values, key=_sort_key))


def coset_mul(E: EllipticCurve, x, y):
    """Projections of x+ + y+ and x+ + y- (a multiset on P^1).

    ``x`` and ``y`` may be base values (lifted over F_q) or curve points;
    the base value ``INF`` lifts to O.
    """
    P = _as_point(E, x)
    Q = _as_point(E, y)
    return multiset([project(E.add(P, Q)), project(E.add(P, E.neg(Q)))])


def _as_point(E, x):
    if isinstance(x, (CurvePoint, _Infinity)):
        return x
    if isinstance(x, str) and x == INF:
        return O
    pts = E.lift(x)
    if not pts:
        raise ValueError(f"{x} has no lift to the curve")
    return pts[0]


def quadratic_roots_p1(A, B, C, field):
    """Root multiset on P^1 of A z^2 + B z z0 + C z0^2, or None if irreducible."""
    if A == 0 and B == 0 and C == 0:
        raise ValueError("identically zero quadratic")
    if A == 0:
        if B == 0:
            return multiset([INF, INF])
        return multiset([-C / B, INF])
    if isinstance(field, GF):
        roots = [z for z in field.elements() if (A * z + B) * z + C == 0]
        if not roots:
            return None
        if len(roots) == 1:
            roots = roots * 2
        return multiset(roots)
    r = _sqrt(B * B - 4 * A * C, field)
    if r is None:
        return None
    return multiset([(-B + r) / (2 * A), (-B - r) / (2 * A)])


def kontsevich_roots(E: EllipticCurve, x, y):
    """Roots in z of A z^2 + B z + C for the curve's (a, b, c)."""
    if E.alpha != 1:
        raise ValueError("the Kontsevich quadratic needs a monic cubic")
    F = E.field
    x, y = F.coerce(x), F.coerce(y)
    a, b, c = E.a, E.b, E.c
    A = (x - y) * (x - y)
    B = -2 * ((b + x * y) * (x + y) + 2 * (c + a * x * y))
    C = (x * y - b) ** 2 - 4 * c * (x + y + a)
    return quadratic_roots_p1(A, B, C, F)


def burnside_det(P1, P2, P3):
    """det [[1, t_i, w_i]]: zero iff the three affine points are collinear."""
    (t1, w1), (t2, w2), (t3, w3) = P1, P2, P3
    return (t2 * w3 - t3 * w2) - t1 * (w3 - w2) + w1 * (t3 - t2)


@dataclass
class ChordReport:
    passed: bool
    A: object
    B: object
    roots: tuple
    sigma: tuple
    viete: dict
    plus_sign_holds: bool = False


def chord_cubic_check(E: EllipticCurve, P1, P2) -> ChordReport:
    """Roots of 4 xi^3 - g2 xi - g3 - (A xi + B)^2 are t(P1), t(P2), t(-(P1+P2)).

    Also checks the Viete relations of that cubic.  Expanding
    4 (xi - r1)(xi - r2)(xi - r3) gives sigma2 + g2/4 = -AB/2; whether the
    "+AB/2" reading holds is recorded in ``plus_sign_holds``.
    """
    if E.form != "weierstrass":
        raise ValueError("chord cubic check is stated for y^2 = 4t^3 - g2 t - g3")
    if P1.t == P2.t:
        raise ValueError("coincident first coordinates")
    g2, g3 = -E.b, -E.c
    A = (P1.w - P2.w) / (P1.t - P2.t)
    B = (P1.t * P2.w - P2.t * P1.w) / (P1.t - P2.t)
    P3 = E.neg(E.add(P1, P2))
    if P3 == O:
        raise ValueError("P1 + P2 = O: no third affine root")
    roots = (P1.t, P2.t, P3.t)

    def cubic(xi):
        return 4 * xi ** 3 - g2 * xi - g3 - (A * xi + B) ** 2

    on_cubic = all(cubic(r) == 0 for r in roots)
    s1 = roots[0] + roots[1] + roots[2]
    s2 = roots[0] * roots[1] + roots[1] * roots[2] + roots[0] * roots[2]
    s3 = roots[0] * roots[1] * roots[2]
    viete = {
        "sigma1 = A^2/4": s1 == A * A / 4,
        "sigma2 + g2/4 = -AB/2": s2 + g2 / 4 == -A * B / 2,
        "sigma3 - g3/4 = B^2/4": s3 - g3 / 4 == B * B / 4,
        "(sigma2 + g2/4)^2 = 4 (sigma3 - g3/4) sigma1": (s2 + g2 / 4) ** 2 == 4 * (s3 - g3 / 4) * s1,
    }
    return ChordReport(on_cubic and all(viete.values()), A, B, roots, (s1, s2, s3), viete,
                       plus_sign_holds=(s2 + g2 / 4 == A * B / 2))


def intersection_count(E: EllipticCurve, x, y, z):
    """Affine intersection points of u^2 = f(t) and u^2 = (t-x)(t-y)(t-z).

    Returns ``(count, roots)``: ``count`` is the number of distinct (t, u)
    pairs and ``roots`` the t-values solving the difference quadratic.
    Returns ``("identical", None)`` when the two cubics coincide.
    """
    if E.alpha != 1:
        raise ValueError("needs a monic cubic")
    F = E.field
    x, y, z = F.coerce(x), F.coerce(y), F.coerce(z)
    s1, s2, s3 = x + y + z, x * y + y * z + z * x, x * y * z
    qa, qb, qc = E.a + s1, E.b - s2, E.c + s3
    if qa == 0 and qb == 0 and qc == 0:
        return "identical", None
    if qa == 0:
        ts = [] if qb == 0 else [-qc / qb]
    elif isinstance(F, GF):
        ts = [t for t in F.elements() if (qa * t + qb) * t + qc == 0]
    else:
        r = _sqrt(qb * qb - 4 * qa * qc, F)
        ts = [] if r is None else sorted({(-qb + r) / (2 * qa), (-qb - r) / (2 * qa)})
    count = sum(len(E.lift(t)) for t in ts)
    return count, ts


def random_curve(q: int, rng: random.Random):
    """A seeded random nondegenerate monic curve over F_q."""
    F = GF(q)
    while True:
        E = EllipticCurve(rng.randrange(q), rng.randrange(q), rng.randrange(q), F)
        if not E.degenerate:
            return E


def check_group_axioms(E: EllipticCurve):
    """Exhaustive closure, identity, inverse, commutativity and associativity."""
    pts = E.points()
    ptset = set(pts)
    report = {"points": len(pts), "closure": True, "identity": True, "inverse": True,
              "commutative": True, "associative": True}
    table = {}
    for P in pts:
        for Q in pts:
            R = E.add(P, Q)
            table[P, Q] = R
            if R not in ptset:
                report["closure"] = False
    for P in pts:
        if table[P, O] != P or table[O, P] != P:
            report["identity"] = False
        if table[P, E.neg(P)] != O:
            report["inverse"] = False
        for Q in pts:
            if table[P, Q] != table[Q, P]:
                report["commutative"] = False
    for P in pts:
        for Q in pts:
            PQ = table[P, Q]
            for R in pts:
                if table[PQ, R] != table[P, table[Q, R]]:
                    report["associative"] = False
                    return report
    return report

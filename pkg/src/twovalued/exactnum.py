"""Exact scalars: rationals, prime fields and cyclotomic fields.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
cyclotomic elements are small immutable classes defined here.  Each
coefficient domain is described by a ``Domain`` object (``QQ``, ``GF(q)``,
``CyclotomicField(N)``) which knows how to coerce Python integers and
rationals into it; the polynomial engine relies on that.
"""

from fractions import Fraction
from functools import lru_cache
import math

Rational = Fraction


def fmt_rational(r) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when q = 1)."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(s) -> Fraction:
    return Fraction(str(s).strip())


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# prime fields

class FqElement:
    """Residue class modulo an odd prime q."""

    __slots__ = ("residue", "q")

    def __init__(self, residue: int, q: int):
        self.residue = int(residue) % q
        self.q = q

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.q != self.q:
                raise TypeError(f"mixed prime fields F_{self.q} and F_{other.q}")
            return other.residue
        if isinstance(other, int):
            return other % self.q
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.q) % self.q
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.residue + o, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.residue - o, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(o - self.residue, self.q)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.residue * o, self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return FqElement(-self.residue, self.q)

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.q)
        return FqElement(pow(self.residue, -1, self.q), self.q)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FqElement(o, self.q).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(o, self.q) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FqElement(pow(self.residue, n, self.q), self.q)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.residue == o

    def __hash__(self):
        return hash((self.residue, self.q))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"FqElement({self.residue}, {self.q})"

    def __str__(self):
        return str(self.residue)


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) via Euler's criterion."""
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def count_sqrt(a) -> int:
    """Number of u in F_q with u^2 = a (0, 1 or 2)."""
    a_res, q = int(a.residue), a.q
    return 1 + legendre(a_res, q)


def _tonelli_shanks(n: int, p: int) -> int:
    # p odd prime, n a nonzero quadratic residue
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    s, m = 0, p - 1
    while m % 2 == 0:
        s += 1
        m //= 2
    z = 2
    while legendre(z, p) != -1:
        z += 1
    c = pow(z, m, p)
    r = pow(n, (m + 1) // 2, p)
    t = pow(n, m, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (s - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        s = i
    return r


def fq_sqrt(a):
    """Canonical square root of ``a`` (the smaller residue) or None."""
    q = a.q
    n = a.residue
    if n == 0:
        return FqElement(0, q)
    if legendre(n, q) != 1:
        return None
    r = _tonelli_shanks(n, q)
    return FqElement(min(r, q - r), q)


# ---------------------------------------------------------------------------
# univariate helpers over Q (dense coefficient lists, lowest degree first)

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, d):
    p = [Fraction(c) for c in _trim(p)]
    d = _trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(d) + 1, 0)
    lc = Fraction(d[-1])
    while len(p) >= len(d) and p:
        k = len(p) - len(d)
        c = p[-1] / lc
        quo[k] = c
        for i, b in enumerate(d):
            p[i + k] -= c * b
        p = _trim(p)
    return _trim(quo), p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (N - 1) + [Fraction(1)]
    for d in range(1, N):
        if N % d == 0:
            num, rem = _pdivmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


class CyclotomicElement:
    """Element of Q(zeta_N) stored modulo Phi_N in the power basis."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs, N: int):
        if N < 1:
            raise ValueError("cyclotomic order must be positive")
        phi = cyclotomic_polynomial(N)
        deg = len(phi) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > deg:
            _, c = _pdivmod(c, list(phi))
        c = c + [Fraction(0)] * (deg - len(c))
        self.coeffs = tuple(c)
        self.N = N

    @classmethod
    def zeta(cls, N: int, k: int = 1):
        """zeta_N ** k."""
        k %= N
        return cls([0] * k + [1], N)

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.N != self.N:
                raise TypeError(f"mixed cyclotomic fields Q(zeta_{self.N}) and Q(zeta_{other.N})")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement([other], self.N)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicElement([a + b for a, b in zip(self.coeffs, o.coeffs)], self.N)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement([-a for a in self.coeffs], self.N)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicElement(_pmul(list(self.coeffs), list(o.coeffs)), self.N)

    __rmul__ = __mul__

    def inverse(self):
        # extended Euclid in Q[w] against Phi_N
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of 0 in a cyclotomic field")
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.N)], _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim([a - b for a, b in _zip_longest(s0, _pmul(quo, s1))])
        inv = [c / r1[0] for c in s1]
        return CyclotomicElement(inv, self.N)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = CyclotomicElement([1], self.N), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return False
        if o is NotImplemented:
            return False
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.coeffs, self.N))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicElement({[fmt_rational(c) for c in self.coeffs]}, {self.N})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(fmt_rational(c) + ("" if k == 0 else f"*zeta{self.N}^{k}"))
        return "(" + " + ".join(parts) + ")" if parts else "0"


def _zip_longest(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return zip(p, q)


def cyclotomic_pow_sum(N: int, expr):
    """Sum ``expr(zeta_N**k)`` over k = 0..N-1 in Q(zeta_N).

    ``expr`` is a callable taking a CyclotomicElement.  When the sum lies in
    Q (which is the case for every expression symmetric under the Galois
    action, e.g. power sums), it is returned as a Fraction.
    """
    if N < 1:
        raise ValueError("N must be positive")
    total = CyclotomicElement([0], N)
    for k in range(N):
        total = total + expr(CyclotomicElement.zeta(N, k))
    if isinstance(total, CyclotomicElement) and total.is_rational():
        return total.to_rational()
    return total


# ---------------------------------------------------------------------------
# coefficient domains

class Domain:
    """A coefficient field; ``key`` identifies it, ``coerce`` maps scalars in."""

    key = None

    def coerce(self, c):
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def __eq__(self, other):
        return isinstance(other, Domain) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name


class _Rationals(Domain):
    key = ("QQ",)
    name = "QQ"

    def coerce(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        if isinstance(c, str):
            return parse_rational(c)
        raise TypeError(f"cannot coerce {c!r} into QQ")

    def fmt(self, c):
        return fmt_rational(c)

    def parse(self, s):
        return parse_rational(s)


QQ = _Rationals()


class GF(Domain):
    def __init__(self, q: int):
        if q % 2 == 0 or not is_prime(q):
            raise ValueError(f"q = {q} is not an odd prime (prime powers are unsupported)")
        self.q = q
        self.key = ("GF", q)
        self.name = f"GF({q})"

    def coerce(self, c):
        if isinstance(c, FqElement):
            if c.q != self.q:
                raise TypeError(f"cannot coerce an element of F_{c.q} into F_{self.q}")
            return c
        if isinstance(c, int):
            return FqElement(c, self.q)
        if isinstance(c, Fraction):
            return FqElement(c.numerator, self.q) / c.denominator
        raise TypeError(f"cannot coerce {c!r} into {self.name}")

    def fmt(self, c):
        return str(c.residue)

    def parse(self, s):
        return FqElement(int(s), self.q)

    def elements(self):
        return [FqElement(i, self.q) for i in range(self.q)]


class CyclotomicField(Domain):
    def __init__(self, N: int):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.key = ("CF", N)
        self.name = f"QQ(zeta{N})"

    def coerce(self, c):
        if isinstance(c, CyclotomicElement):
            if c.N != self.N:
                raise TypeError("mixed cyclotomic fields")
            return c
        if isinstance(c, (int, Fraction)):
            return CyclotomicElement([c], self.N)
        raise TypeError(f"cannot coerce {c!r} into {self.name}")

    def zeta(self, k=1):
        return CyclotomicElement.zeta(self.N, k)

    def fmt(self, c):
        return [fmt_rational(x) for x in c.coeffs]

    def parse(self, s):
        return CyclotomicElement([parse_rational(x) for x in s], self.N)


def domain_from_key(key) -> Domain:
    if key[0] == "QQ":
        return QQ
    if key[0] == "GF":
        return GF(key[1])
    return CyclotomicField(key[1])


def domain_name(d: Domain) -> str:
    return d.name


def parse_domain(name: str) -> Domain:
    if name == "QQ":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    if name.startswith("QQ(zeta") and name.endswith(")"):
        return CyclotomicField(int(name[7:-1]))
    raise ValueError(f"unknown domain {name!r}")

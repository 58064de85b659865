"""Sparse multivariate polynomials over exact coefficient fields.

A :class:`MultiPoly` is an immutable map from exponent vectors to nonzero
coefficients.  Variable order follows a fixed registry (``x, y, z, w, ...``)
so that printing, serialization and leading-term choices are stable; names
outside the registry sort after it alphabetically.

The module also provides the elimination tools the rest of the package is
built on: Sylvester resultants, discriminants, exact division, gcd, rational
substitution and rewriting of symmetric polynomials in elementary symmetric
functions.
"""

from fractions import Fraction
from itertools import permutations
import math

from .exactnum import QQ, Domain, parse_domain

SCHEMA = "twovalued.poly/1"

REGISTRY = (
    "x", "y", "z", "w", "u", "v", "t",
    "x0", "x1", "y0", "y1", "z0", "z1",
    "a1", "a2", "a3", "a", "b", "c", "g2", "g3",
    "sigma1", "sigma2", "sigma3",
)
_REG_INDEX = {name: i for i, name in enumerate(REGISTRY)}


def var_key(name: str):
    return (_REG_INDEX.get(name, len(REGISTRY)), name)


def sort_vars(names):
    return tuple(sorted(set(names), key=var_key))


_SCALAR_TYPES = (int, Fraction)


def _is_scalar(obj):
    from .exactnum import FqElement, CyclotomicElement
    return isinstance(obj, (int, Fraction, FqElement, CyclotomicElement))


class MultiPoly:
    """Immutable sparse polynomial.

    ``vars`` holds only the variables that actually occur, in registry order,
    so two equal polynomials always have identical representations.
    """

    __slots__ = ("vars", "terms", "domain", "_hash")

    def __init__(self, vars, terms, domain: Domain = QQ, _trusted=False):
        self.domain = domain
        if _trusted:
            self.vars = vars
            self.terms = terms
            self._hash = None
            return
        vars = tuple(vars)
        clean = {}
        for exps, c in terms.items():
            c = domain.coerce(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if exps in clean:
                c = clean[exps] + c
                if c == 0:
                    del clean[exps]
                    continue
            clean[exps] = c
        self._set(vars, clean)

    def _set(self, vars, clean):
        used = [any(e[i] for e in clean) for i in range(len(vars))]
        if not all(used) or tuple(vars) != sort_vars(vars):
            keep = sorted((i for i in range(len(vars)) if used[i]), key=lambda i: var_key(vars[i]))
            vars = tuple(vars[i] for i in keep)
            clean = {tuple(e[i] for i in keep): c for e, c in clean.items()}
        self.vars = tuple(vars)
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def var(cls, name: str, domain: Domain = QQ):
        return cls((name,), {(1,): 1}, domain)

    @classmethod
    def const(cls, c, domain: Domain = QQ):
        return cls((), {(): c}, domain)

    @classmethod
    def zero(cls, domain: Domain = QQ):
        return cls((), {}, domain)

    @classmethod
    def monomial(cls, exps: dict, c=1, domain: Domain = QQ):
        names = tuple(exps)
        return cls(names, {tuple(exps[n] for n in names): c}, domain)

    # -- basic queries -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.vars

    def constant_value(self):
        """Coefficient of the constant term (domain zero if absent)."""
        if not self.vars:
            return self.terms.get((), self.domain.zero())
        return self.terms.get((0,) * len(self.vars), self.domain.zero())

    def __len__(self):
        return len(self.terms)

    def degree(self, var=None):
        """Degree in ``var``; total degree when ``var`` is None; -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self):
        return self.degree()

    # -- alignment helpers -------------------------------------------------
    def _embed(self, vars):
        if vars == self.vars:
            return self.terms
        idx = [vars.index(v) for v in self.vars]
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            full = [0] * n
            for i, k in zip(idx, e):
                full[i] = k
            out[tuple(full)] = c
        return out

    def _coerce_other(self, other):
        if isinstance(other, MultiPoly):
            if other.domain != self.domain:
                raise TypeError(f"mixed coefficient domains {self.domain} and {other.domain}")
            return other
        if _is_scalar(other):
            return MultiPoly.const(self.domain.coerce(other), self.domain)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        vars = sort_vars(self.vars + other.vars)
        out = dict(self._embed(vars))
        for e, c in other._embed(vars).items():
            if e in out:
                s = out[e] + c
                if s == 0:
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        res = MultiPoly.__new__(MultiPoly)
        res.domain = self.domain
        res._set(vars, out)
        return res

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, self.domain, _trusted=True)

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = self.domain.coerce(other)
            if c == 0:
                return MultiPoly.zero(self.domain)
            return MultiPoly(self.vars, {e: v * c for e, v in self.terms.items()}, self.domain, _trusted=True)
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        vars = sort_vars(self.vars + other.vars)
        a = self._embed(vars)
        b = other._embed(vars)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        n = len(vars)
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(ea[i] + eb[i] for i in range(n)) if n else ()
                if e in out:
                    out[e] = out[e] + ca * cb
                else:
                    out[e] = ca * cb
        out = {e: c for e, c in out.items() if c != 0}
        res = MultiPoly.__new__(MultiPoly)
        res.domain = self.domain
        res._set(vars, out)
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.const(1, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    def __truediv__(self, other):
        """Division by a scalar or exact division by a polynomial."""
        if _is_scalar(other):
            c = self.domain.coerce(other)
            return MultiPoly(self.vars, {e: v / c for e, v in self.terms.items()}, self.domain, _trusted=True)
        q = divides(other, self)
        if q is None:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __eq__(self, other):
        if _is_scalar(other):
            other = MultiPoly.const(self.domain.coerce(other), self.domain)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.domain == other.domain and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items()), self.domain))
        return self._hash

    # -- structure ---------------------------------------------------------
    def coeffs_in(self, var):
        """Map k -> coefficient of var**k (a MultiPoly in the other variables)."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly(rest, t, self.domain) for k, t in buckets.items()}

    def coeff_list(self, var):
        """Dense list of coefficients in ``var``, lowest degree first."""
        cs = self.coeffs_in(var)
        d = self.degree(var)
        zero = MultiPoly.zero(self.domain)
        return [cs.get(k, zero) for k in range(d + 1)]

    def lc(self, var):
        return self.coeffs_in(var)[self.degree(var)]

    def diff(self, var):
        if var not in self.vars:
            return MultiPoly.zero(self.domain)
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return MultiPoly(self.vars, out, self.domain)

    def subs(self, mapping):
        """Simultaneous polynomial substitution ``{name: scalar or MultiPoly}``."""
        mapping = {k: v for k, v in mapping.items() if k in self.vars}
        if not mapping:
            return self
        one = MultiPoly.const(1, self.domain)
        values = []
        for name in self.vars:
            if name in mapping:
                val = mapping[name]
                if not isinstance(val, MultiPoly):
                    val = MultiPoly.const(self.domain.coerce(val), self.domain)
                elif val.domain != self.domain:
                    raise TypeError("substitution value in a different domain")
                values.append(val)
            else:
                values.append(MultiPoly.var(name, self.domain))
        caches = [[one] for _ in self.vars]

        def power(i, k):
            cache = caches[i]
            while len(cache) <= k:
                cache.append(cache[-1] * values[i])
            return cache[k]

        # group terms by the substituted part to limit multiplications
        sub_idx = [i for i, n in enumerate(self.vars) if n in mapping]
        keep_idx = [i for i, n in enumerate(self.vars) if n not in mapping]
        keep_vars = tuple(self.vars[i] for i in keep_idx)
        groups = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in sub_idx)
            groups.setdefault(key, {})[tuple(e[i] for i in keep_idx)] = c
        total = MultiPoly.zero(self.domain)
        for key, rest in groups.items():
            term = MultiPoly(keep_vars, rest, self.domain)
            for i, k in zip(sub_idx, key):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, point):
        """Evaluate at a full assignment and return a scalar."""
        missing = set(self.vars) - set(point)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        vals = [self.domain.coerce(point[n]) for n in self.vars]
        total = self.domain.zero()
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    def rename(self, mapping):
        """Rename variables (``mapping`` may permute names)."""
        new = tuple(mapping.get(n, n) for n in self.vars)
        if len(set(new)) != len(new):
            raise ValueError("renaming merges variables")
        return MultiPoly(new, dict(self.terms), self.domain)

    def map_coeffs(self, fn, domain: Domain):
        """Apply ``fn`` to every coefficient, landing in ``domain``."""
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()}, domain)

    def to_domain(self, domain: Domain):
        return self.map_coeffs(domain.coerce, domain)

    def leading_term(self, order="lex"):
        """(exponent-vector, coefficient) of the lex or graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order == "lex":
            e = max(self.terms)
        else:
            e = max(self.terms, key=lambda k: (sum(k), k))
        return e, self.terms[e]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    # -- display -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        from .exactnum import FqElement
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.vars, e) if k)
            if isinstance(c, Fraction):
                neg = c < 0
                a = -c if neg else c
                cs = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            else:
                neg, cs = False, str(c)
            if mono:
                if cs == "1":
                    body = mono
                else:
                    body = f"{cs}*{mono}"
            else:
                body = cs
            pieces.append(("-" if neg else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"

    # -- serialization -----------------------------------------------------
    def to_json(self):
        return {
            "schema": SCHEMA,
            "domain": self.domain.name,
            "vars": list(self.vars),
            "terms": [{"coeff": self.domain.fmt(c), "exps": list(e)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        domain = parse_domain(data.get("domain", "QQ"))
        vars = tuple(data["vars"])
        terms = {}
        for t in data["terms"]:
            if len(t["exps"]) != len(vars):
                raise ValueError("exponent vector length does not match vars")
            terms[tuple(t["exps"])] = domain.parse(t["coeff"])
        return cls(vars, terms, domain)


def symbols(names, domain: Domain = QQ):
    """``symbols("x y z")`` -> tuple of variable polynomials."""
    return tuple(MultiPoly.var(n, domain) for n in names.split())


def as_poly(value, domain: Domain = QQ):
    """Promote a scalar, a variable name or a MultiPoly to a MultiPoly."""
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, str):
        try:
            return MultiPoly.const(domain.coerce(Fraction(value)), domain)
        except ValueError:
            return MultiPoly.var(value, domain)
    return MultiPoly.const(domain.coerce(value), domain)


# ---------------------------------------------------------------------------
# exact division, content, gcd

def divides(d: MultiPoly, p: MultiPoly):
    """Quotient p/d when d divides p exactly, otherwise None.

    Multivariate division by lex leading terms: in an exact division the
    leading term of the dividend is always the product of leading terms, so a
    non-divisible leading term proves that d does not divide p.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.domain)
    if d.domain != p.domain:
        raise TypeError("mixed coefficient domains")
    vars = sort_vars(p.vars + d.vars)
    n = len(vars)
    rem = dict(p._embed(vars))
    dt = d._embed(vars)
    dlead = max(dt)
    dlc = dt[dlead]
    rest = [(e, c) for e, c in dt.items() if e != dlead]
    quo = {}
    while rem:
        lead = max(rem)
        if any(lead[i] < dlead[i] for i in range(n)):
            return None
        shift = tuple(lead[i] - dlead[i] for i in range(n))
        c = rem.pop(lead) / dlc
        quo[shift] = c
        for e, dc in rest:
            ne = tuple(e[i] + shift[i] for i in range(n))
            v = rem.get(ne)
            v = -c * dc if v is None else v - c * dc
            if v == 0:
                rem.pop(ne, None)
            else:
                rem[ne] = v
    return MultiPoly(vars, quo, p.domain)


def divide_exact(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    q = divides(d, p)
    if q is None:
        raise ArithmeticError("non-exact polynomial division (internal consistency fault)")
    return q


def rational_content(p: MultiPoly) -> Fraction:
    """gcd of numerators over lcm of denominators (QQ coefficients only)."""
    num = 0
    den = 1
    for c in p.terms.values():
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def content_normalize(p: MultiPoly) -> MultiPoly:
    """Canonical representative of the line through p.

    Over QQ: divide by the rational content and make the graded-lex leading
    coefficient positive.  Over other fields: make that coefficient 1.
    """
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    _, lc = p.leading_term("grlex")
    if p.domain == QQ:
        c = rational_content(p)
        if lc < 0:
            c = -c
        return p * (1 / c)
    return p * (1 / lc)


def proportional(p: MultiPoly, q: MultiPoly) -> bool:
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return content_normalize(p) == content_normalize(q)


def _main_var(p, q):
    vars = sort_vars(p.vars + q.vars)
    return vars[-1] if vars else None


def _content_in(p: MultiPoly, var):
    g = None
    for c in p.coeffs_in(var).values():
        g = c if g is None else gcd(g, c)
        if g.is_constant():
            break
    return g


def _prem(a: MultiPoly, b: MultiPoly, var):
    """Pseudo-remainder of a by b in ``var``."""
    db = b.degree(var)
    lb = b.lc(var)
    x = MultiPoly.var(var, a.domain)
    r = a
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        r = r * lb - b * r.lc(var) * x ** (dr - db)
    return r


_PRIME = 2 ** 61 - 1


def _mod_image(p: MultiPoly, var, point, prime=_PRIME):
    """Univariate image of p in ``var`` modulo ``prime`` at integer ``point``.

    Returns dense coefficients (lowest first) or None if a denominator
    vanishes modulo the prime.
    """
    d = p.degree(var)
    out = [0] * (d + 1)
    vi = p.vars.index(var) if var in p.vars else None
    for e, c in p.terms.items():
        if c.denominator % prime == 0:
            return None
        val = c.numerator % prime * pow(c.denominator, -1, prime) % prime
        for n, k in zip(p.vars, e):
            if k and n != var:
                val = val * pow(point[n], k, prime) % prime
        out[e[vi] if vi is not None else 0] = (out[e[vi] if vi is not None else 0] + val) % prime
    return out


def _mod_gcd_degree(a, b, prime=_PRIME):
    def trim(f):
        while f and f[-1] == 0:
            f.pop()
        return f

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = pow(b[-1], -1, prime)
        while len(a) >= len(b):
            c = a[-1] * inv % prime
            k = len(a) - len(b)
            for i, bc in enumerate(b):
                a[i + k] = (a[i + k] - c * bc) % prime
            a = trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def gcd_degree_bounds(p: MultiPoly, q: MultiPoly, seed=0):
    """Upper bounds on deg_v gcd(p, q) for every variable v (QQ only).

    Each bound is the degree of the gcd of univariate images modulo a large
    prime at a random point where both leading coefficients survive; the
    image of the true gcd divides both images, so the bound is sound.
    """
    import random
    rng = random.Random(seed)
    vars = sort_vars(p.vars + q.vars)
    bounds = {}
    for v in vars:
        if v not in p.vars or v not in q.vars:
            bounds[v] = 0
            continue
        for _ in range(10):
            point = {n: rng.randrange(1, _PRIME) for n in vars}
            ia, ib = _mod_image(p, v, point), _mod_image(q, v, point)
            if ia is None or ib is None or ia[-1] == 0 or ib[-1] == 0:
                continue
            bounds[v] = _mod_gcd_degree(ia, ib)
            break
        else:
            bounds[v] = min(p.degree(v), q.degree(v))
    return bounds


def gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor via recursive primitive pseudo-remainders.

    The result is content-normalized (so unique); gcd(0, 0) is 0.
    """
    if p.is_zero():
        return content_normalize(q) if not q.is_zero() else q
    if q.is_zero():
        return content_normalize(p)
    one = MultiPoly.const(1, p.domain)
    if p.is_constant() or q.is_constant():
        return one
    if p.domain == QQ and not any(gcd_degree_bounds(p, q).values()):
        return one
    var = _main_var(p, q)
    if var not in p.vars:
        return gcd(p, _content_in(q, var))
    if var not in q.vars:
        return gcd(_content_in(p, var), q)
    cp, cq = _content_in(p, var), _content_in(q, var)
    a, b = divide_exact(p, cp), divide_exact(q, cq)
    c = gcd(cp, cq)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while True:
        r = _prem(a, b, var)
        if r.is_zero():
            g = b
            break
        if r.degree(var) == 0:
            g = one
            break
        a, b = b, divide_exact(r, _content_in(r, var))
    if var in g.vars:
        g = divide_exact(g, _content_in(g, var))
    return content_normalize(c * g)


# ---------------------------------------------------------------------------
# resultants and discriminants

def sylvester_matrix(p: MultiPoly, q: MultiPoly, var, degrees=None):
    """Sylvester matrix of p and q in ``var`` (entries are MultiPolys).

    ``degrees`` may supply formal degrees (m, n) at least the true ones; this
    is how a resultant is specialized when leading coefficients vanish.
    """
    m = p.degree(var) if degrees is None else degrees[0]
    n = q.degree(var) if degrees is None else degrees[1]
    if m < p.degree(var) or n < q.degree(var):
        raise ValueError("formal degree below the actual degree")
    zero = MultiPoly.zero(p.domain)
    pc = p.coeff_list(var) + [zero] * (m + 1 - len(p.coeff_list(var)))
    qc = q.coeff_list(var) + [zero] * (n + 1 - len(q.coeff_list(var)))
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = pc[m - k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = qc[n - k]
        rows.append(row)
    return rows


def det_laplace(M):
    """Determinant by row expansion with memoization on used columns."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    domain = M[0][0].domain
    memo = {}

    def rec(row, used):
        if row == n:
            return MultiPoly.const(1, domain)
        key = used
        if key in memo:
            return memo[key]
        total = MultiPoly.zero(domain)
        sign = 1
        for j in range(n):
            if used >> j & 1:
                continue
            entry = M[row][j]
            if not entry.is_zero():
                minor = rec(row + 1, used | (1 << j))
                if not minor.is_zero():
                    term = entry * minor
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return rec(0, 0)


def det_bareiss(M):
    """Fraction-free Bareiss elimination with exact polynomial division."""
    n = len(M)
    A = [list(r) for r in M]
    domain = A[0][0].domain
    sign = 1
    prev = MultiPoly.const(1, domain)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(domain)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divide_exact(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    return A[n - 1][n - 1] * sign


def resultant(p: MultiPoly, q: MultiPoly, var, method="laplace", degrees=None):
    """Res_var(p, q) as the Sylvester determinant."""
    if degrees is None and (p.degree(var) < 1 or q.degree(var) < 1):
        raise ValueError(f"both polynomials need positive degree in {var}")
    M = sylvester_matrix(p, q, var, degrees)
    if method == "laplace":
        return det_laplace(M)
    if method == "bareiss":
        return det_bareiss(M)
    raise ValueError(f"unknown determinant method {method!r}")


def discriminant(p: MultiPoly, var, method="laplace"):
    """disc_var(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p)."""
    d = p.degree(var)
    if d < 2:
        raise ValueError(f"discriminant needs degree >= 2 in {var}")
    r = resultant(p, p.diff(var), var, method=method)
    if (d * (d - 1) // 2) % 2:
        r = -r
    return divide_exact(r, p.lc(var))


# ---------------------------------------------------------------------------
# rational substitution

def substitute(p: MultiPoly, s):
    """Apply a rational substitution ``{name: (numerator, denominator)}``.

    Returns (N, D) with p(s) = N / D where D is the product over substituted
    variables of denominator ** deg_var(p).  No cancellation is attempted.
    """
    dom = p.domain
    num_map, den_parts = {}, []
    mul_terms = {}
    for name, pair in s.items():
        if name not in p.vars:
            continue
        n, d = (as_poly(pair[0], dom), as_poly(pair[1], dom))
        if d.is_zero():
            raise ZeroDivisionError(f"zero denominator for {name}")
        num_map[name] = (n, d, p.degree(name))
    if not num_map:
        return p, MultiPoly.const(1, dom)
    names = list(num_map)
    idx = [p.vars.index(nm) for nm in names]
    caches = {nm: ([MultiPoly.const(1, dom)], [MultiPoly.const(1, dom)]) for nm in names}

    def pw(nm, which, k):
        cache = caches[nm][which]
        base = num_map[nm][which]
        while len(cache) <= k:
            cache.append(cache[-1] * base)
        return cache[k]

    other = [i for i in range(len(p.vars)) if i not in idx]
    other_vars = tuple(p.vars[i] for i in other)
    groups = {}
    for e, c in p.terms.items():
        groups.setdefault(tuple(e[i] for i in idx), {})[tuple(e[i] for i in other)] = c
    N = MultiPoly.zero(dom)
    for key, rest in groups.items():
        term = MultiPoly(other_vars, rest, dom)
        for nm, k in zip(names, key):
            deg = num_map[nm][2]
            term = term * pw(nm, 0, k) * pw(nm, 1, deg - k)
        N = N + term
    D = MultiPoly.const(1, dom)
    for nm in names:
        D = D * pw(nm, 1, num_map[nm][2])
    return N, D


# ---------------------------------------------------------------------------
# symmetric functions

def elementary_symmetric(domain: Domain = QQ, names=("x", "y", "z")):
    x, y, z = (MultiPoly.var(n, domain) for n in names)
    return x + y + z, x * y + y * z + z * x, x * y * z


def is_symmetric(p: MultiPoly, names=("x", "y", "z")) -> bool:
    """Check invariance under all six permutations of the named variables."""
    for perm in permutations(names):
        if p.rename(dict(zip(names, perm))) != p:
            return False
    return True


def to_sigma(p: MultiPoly, names=("x", "y", "z")):
    """Rewrite a symmetric polynomial in sigma1, sigma2, sigma3.

    Other variables (parameters) ride along in the coefficients.  Uses the
    classical leading-term elimination.
    """
    if not is_symmetric(p, names):
        raise ValueError("polynomial is not symmetric in %s" % (names,))
    dom = p.domain
    e1, e2, e3 = elementary_symmetric(dom, names)
    s1, s2, s3 = (MultiPoly.var(n, dom) for n in ("sigma1", "sigma2", "sigma3"))
    ecache = {}

    def epow(i, j, k):
        key = (i, j, k)
        if key not in ecache:
            ecache[key] = e1 ** i * e2 ** j * e3 ** k
        return ecache[key]

    result = MultiPoly.zero(dom)
    r = p
    while True:
        pos = [r.vars.index(n) if n in r.vars else None for n in names]
        if all(i is None for i in pos):
            break

        def xyz(e):
            return tuple(e[i] if i is not None else 0 for i in pos)

        lead = max(xyz(e) for e in r.terms)
        a, b, c = lead
        if not (a >= b >= c):
            raise ArithmeticError("leading term inconsistent with symmetry")
        coeff_terms = {}
        other = [i for i in range(len(r.vars)) if i not in pos]
        other_vars = tuple(r.vars[i] for i in other)
        for e, cf in r.terms.items():
            if xyz(e) == lead:
                coeff_terms[tuple(e[i] for i in other)] = cf
        C = MultiPoly(other_vars, coeff_terms, dom)
        r = r - C * epow(a - b, b - c, c)
        result = result + C * s1 ** (a - b) * s2 ** (b - c) * s3 ** c
    return result + r


def from_sigma(p: MultiPoly, names=("x", "y", "z")):
    e1, e2, e3 = elementary_symmetric(p.domain, names)
    return p.subs({"sigma1": e1, "sigma2": e2, "sigma3": e3})

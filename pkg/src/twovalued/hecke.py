"""Hecke-operator matrices over P^1(F_q) built from P_t(x, y, z).

For x in F_q the matrix T_x is indexed by P^1(F_q) in the order
0, 1, ..., q-1, inf (index q stands for inf).  Entries:

* generic (x, y) with disc_z P_t(x, y, .) != 0:
  2 - #{u : u^2 = P_t(x, y, z)} for finite z, and 2 - delta(x, y) at z = inf;
* degenerate (x, y): 1 - q at the double root z* of P_t(x, y, .), 2 elsewhere
  (z* = inf when the quadratic drops degree);
* y = inf: by default filled from the column z = inf (symmetric extension);
  ``yinf="degenerate"`` instead treats it as a degenerate row with z* = x.

The algebra check compares T_x T_y with sum_z C_xyz T_z, C_xyz = (T_x)_yz,
under two conventions: ``"p1"`` keeps the (q+1)x(q+1) matrices and sums over
z in F_q; ``"affine"`` restricts everything to the q x q block on F_q.
"""

from dataclasses import dataclass, field
import itertools
import time

import numpy as np

from .exactnum import is_prime

YINF_RULES = ("symmetric", "degenerate")
CONVENTIONS = ("p1", "affine")


def square_counts(q: int):
    """counts[a] = #{u in F_q : u^2 = a}."""
    counts = np.zeros(q, dtype=np.int64)
    for u in range(q):
        counts[u * u % q] += 1
    return counts


@dataclass
class HeckeSystem:
    q: int
    t: int
    yinf: str = "symmetric"
    matrices: dict = field(default_factory=dict)
    degenerate_pairs: list = field(default_factory=list)

    @property
    def size(self):
        return self.q + 1

    def index_labels(self):
        return [str(i) for i in range(self.q)] + ["inf"]

    def to_json(self):
        return {
            "q": self.q, "t": self.t, "yinf": self.yinf,
            "index": self.index_labels(),
            "matrices": {str(x): M.tolist() for x, M in self.matrices.items()},
            "degenerate_pairs": len(self.degenerate_pairs),
        }

    def to_csv(self, x):
        return "\n".join(",".join(str(v) for v in row) for row in self.matrices[x])


def _check_params(q, t):
    if q % 2 == 0 or not is_prime(q):
        raise ValueError(f"q = {q} must be an odd prime")
    t %= q
    if t in (0, 1):
        raise ValueError("t must avoid 0 and 1")
    return t


def p_coeffs(q, t, x, y):
    """(A, B, C) of P_t(x, y, z) = A z^2 + B z + C modulo q."""
    A = (x - y) ** 2 % q
    B = (2 * (x * y - t) * (x + y) - 4 * x * y * (1 + t + x + y)) % q
    C = (x * y - t) ** 2 % q
    return A, B, C


def p_value(q, t, x, y, z):
    s1, s2, s3 = x + y + z, x * y + y * z + z * x, x * y * z
    return ((s2 - t) ** 2 - 4 * s3 * (1 + t + s1)) % q


def is_degenerate(q, t, x, y):
    """disc_z P_t(x, y, .) = 16 f(x) f(y) = 0 with f(s) = s (s+1) (s+t)."""
    A, B, C = p_coeffs(q, t, x, y)
    return (B * B - 4 * A * C) % q == 0


def double_root(q, t, x, y):
    """z* = -B / (2A), or inf (index q) when A = 0."""
    A, B, _ = p_coeffs(q, t, x, y)
    if A == 0:
        return q
    return (-B) * pow(2 * A, -1, q) % q


def entry(q, t, x, y, z, yinf="symmetric", _sq=None):
    """(T_x)_{yz} with y, z in 0..q (q meaning inf)."""
    t = _check_params(q, t)
    if not 0 <= x < q:
        raise ValueError("T_x is defined only for x in F_q")
    INF = q
    if y == INF:
        if yinf == "symmetric":
            # (T_x)_{inf z} := (T_x)_{z inf}; at z = inf the column formula
            # 2 - delta_{x, inf} gives 2
            return 2 if z == INF else entry(q, t, x, z, INF, yinf, _sq)
        if yinf == "degenerate":
            return 1 - q if z == x else 2
        raise ValueError(f"unknown y = inf rule {yinf!r}")
    if is_degenerate(q, t, x, y):
        return 1 - q if z == double_root(q, t, x, y) else 2
    if z == INF:
        return 2 - (1 if x == y else 0)
    sq = _sq if _sq is not None else square_counts(q)
    return int(2 - sq[p_value(q, t, x, y, z)])


def build_T(q, t, x, yinf="symmetric"):
    """Dense (q+1)x(q+1) integer matrix T_x."""
    t = _check_params(q, t)
    n, INF = q + 1, q
    sq = square_counts(q)
    M = np.zeros((n, n), dtype=np.int64)
    z = np.arange(q)
    for y in range(q):
        if is_degenerate(q, t, x, y):
            M[y, :] = 2
            M[y, double_root(q, t, x, y)] = 1 - q
            continue
        A, B, C = p_coeffs(q, t, x, y)
        vals = (A * z * z + B * z + C) % q
        M[y, :q] = 2 - sq[vals]
        M[y, INF] = 2 - (1 if x == y else 0)
    if yinf == "symmetric":
        M[INF, :] = M[:, INF]
        M[INF, INF] = 2
    elif yinf == "degenerate":
        M[INF, :] = 2
        M[INF, x] = 1 - q
    else:
        raise ValueError(f"unknown y = inf rule {yinf!r}")
    return M


def build_all(q, t, yinf="symmetric") -> HeckeSystem:
    t = _check_params(q, t)
    S = HeckeSystem(q, t, yinf)
    for x in range(q):
        S.matrices[x] = build_T(q, t, x, yinf)
        S.degenerate_pairs += [(x, y) for y in range(q) if is_degenerate(q, t, x, y)]
    return S


def commutator_failures(S: HeckeSystem):
    """Pairs (x, y) with T_x T_y != T_y T_x."""
    bad = []
    for x, y in itertools.combinations(sorted(S.matrices), 2):
        A, B = S.matrices[x], S.matrices[y]
        if not np.array_equal(A @ B, B @ A):
            bad.append((x, y))
    return bad


def verify_commute(S: HeckeSystem) -> bool:
    return not commutator_failures(S)


def algebra_failures(S: HeckeSystem, convention="p1"):
    """Pairs (x, y) where T_x T_y != sum_{z in F_q} (T_x)_{yz} T_z."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    q = S.q
    keys = sorted(S.matrices)
    if convention == "affine":
        mats = {x: S.matrices[x][:q, :q] for x in keys}
    else:
        mats = S.matrices
    stack = np.stack([mats[z] for z in keys])
    bad = []
    for x in keys:
        for y in keys:
            lhs = mats[x] @ mats[y]
            coeffs = S.matrices[x][y, :q]
            rhs = np.tensordot(coeffs, stack, axes=1)
            if not np.array_equal(lhs, rhs):
                bad.append((x, y))
    return bad


def verify_algebra(S: HeckeSystem):
    """Check the structure-constant identity under both conventions.

    Returns ``(passed, per_convention)``; passes when either convention holds
    for every pair (x, y).
    """
    results = {c: not algebra_failures(S, c) for c in CONVENTIONS}
    return any(results.values()), results


def structure_constants_associative(S: HeckeSystem) -> bool:
    """sum_w C_xyw C_wzv = sum_w C_yzw C_xwv over w in F_q (affine indices)."""
    q = S.q
    C = np.stack([S.matrices[x][:q, :q] for x in range(q)])
    left = np.einsum("xyw,wzv->xyzv", C, C)
    right = np.einsum("yzw,xwv->xyzv", C, C)
    return bool(np.array_equal(left, right))


def row_sums(S: HeckeSystem):
    return {x: S.matrices[x].sum(axis=1).tolist() for x in S.matrices}


def degenerate_rows_ok(S: HeckeSystem) -> bool:
    """Each degenerate row carries exactly one 1-q entry, all others 2."""
    q = S.q
    for x, y in S.degenerate_pairs:
        row = S.matrices[x][y]
        if (row == 1 - q).sum() != 1 or (row == 2).sum() != q:
            return False
    return True


def mutate(S: HeckeSystem, x=0, y=0, z=0, delta=1) -> HeckeSystem:
    """Copy of S with a single entry changed (negative control)."""
    M = {k: v.copy() for k, v in S.matrices.items()}
    M[x][y, z] += delta
    return HeckeSystem(S.q, S.t, S.yinf, M, list(S.degenerate_pairs))


@dataclass
class HeckeReport:
    q: int
    t: int
    yinf: str
    commute: bool
    commute_failures: int
    algebra: bool
    algebra_by_convention: dict
    degenerate_pairs: int
    degenerate_rows_ok: bool
    seconds: float

    def to_json(self):
        return dict(self.__dict__)


def hecke_report(q, t, yinf="symmetric") -> HeckeReport:
    t0 = time.perf_counter()
    S = build_all(q, t, yinf)
    cf = commutator_failures(S)
    alg, by = verify_algebra(S)
    return HeckeReport(q, S.t, yinf, not cf, len(cf), alg, by, len(S.degenerate_pairs),
                       degenerate_rows_ok(S), round(time.perf_counter() - t0, 4))


def sweep(qs=(3, 5, 7, 11, 13), yinf="symmetric"):
    """Reports for every admissible t at each q."""
    return [hecke_report(q, t, yinf) for q in qs for t in range(2, q)]

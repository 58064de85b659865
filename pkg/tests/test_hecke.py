import json

import numpy as np
import pytest

from twovalued.exactnum import FqElement, count_sqrt
from twovalued.families import kontsevich_classical
from twovalued.hecke import (
    CONVENTIONS, build_T, build_all, commutator_failures, degenerate_rows_ok,
    double_root, entry, hecke_report, is_degenerate, mutate, p_coeffs, p_value, row_sums,
    square_counts, structure_constants_associative, verify_algebra, verify_commute,
)
from twovalued.mpoly import discriminant

# frozen from build_all(3, 2): every pair (x, y) is degenerate at q = 3, t = 2
GOLDEN_Q3 = {
    0: [[2, 2, 2, -2], [2, 2, -2, 2], [2, -2, 2, 2], [-2, 2, 2, 2]],
    1: [[2, 2, -2, 2], [2, 2, 2, -2], [-2, 2, 2, 2], [2, -2, 2, 2]],
    2: [[2, -2, 2, 2], [-2, 2, 2, 2], [2, 2, 2, -2], [2, 2, -2, 2]],
}


def test_square_counts():
    assert square_counts(7).tolist() == [1, 2, 2, 0, 2, 0, 0]


@pytest.mark.parametrize("q,t", [(5, 2), (7, 3), (11, 5)])
def test_p_value_matches_polynomial(q, t):
    P = kontsevich_classical(t)
    for x in range(q):
        for y in range(q):
            A, B, C = p_coeffs(q, t, x, y)
            for z in range(q):
                val = P.evaluate({"x": x, "y": y, "z": z})
                assert p_value(q, t, x, y, z) == val.numerator * pow(val.denominator, -1, q) % q
                assert (A * z * z + B * z + C - p_value(q, t, x, y, z)) % q == 0


def test_degeneracy_is_f_x_f_y():
    # disc_z P_t(x, y, .) = 16 f(x) f(y), f(s) = s (s + 1) (s + t)
    P = kontsevich_classical()
    d = discriminant(P, "z")
    x, y, t = (P.var(n) for n in ("x", "y", "t"))
    f = lambda s: s * (s + 1) * (s + t)
    assert d == 16 * f(x) * f(y)
    q, tv = 7, 3
    for xv in range(q):
        for yv in range(q):
            fx = xv * (xv + 1) * (xv + tv) % q
            fy = yv * (yv + 1) * (yv + tv) % q
            assert is_degenerate(q, tv, xv, yv) == (fx * fy % q == 0)


def test_double_root_is_a_root():
    q, t = 11, 4
    for x in range(q):
        for y in range(q):
            if is_degenerate(q, t, x, y):
                z = double_root(q, t, x, y)
                if z != q:
                    assert p_value(q, t, x, y, z) == 0


def test_entries_from_definition():
    q, t = 7, 3
    for x in range(q):
        for y in range(q):
            if is_degenerate(q, t, x, y):
                continue
            for z in range(q):
                want = 2 - count_sqrt(FqElement(p_value(q, t, x, y, z), q))
                assert entry(q, t, x, y, z) == want
            assert entry(q, t, x, y, q) == 2 - (x == y)


def test_origin_entry_is_degenerate():
    # x = y = 0 has f(0) = 0, so z = inf is the double root and the entry is 1 - q
    assert is_degenerate(3, 2, 0, 0)
    assert entry(3, 2, 0, 0, 3) == -2


@pytest.mark.parametrize("yinf", ["symmetric", "degenerate"])
def test_build_matches_entry_pointwise(yinf):
    q, t = 7, 2
    S = build_all(q, t, yinf)
    for x in range(q):
        M = S.matrices[x]
        assert M.shape == (q + 1, q + 1) and M.dtype == np.int64
        for y in range(q + 1):
            for z in range(q + 1):
                assert M[y, z] == entry(q, t, x, y, z, yinf)


def test_symmetric_extension():
    S = build_all(5, 3)
    for M in S.matrices.values():
        assert np.array_equal(M[5, :5], M[:5, 5])
        assert M[5, 5] == 2


def test_golden_q3():
    S = build_all(3, 2)
    assert {x: M.tolist() for x, M in S.matrices.items()} == GOLDEN_Q3
    assert len(S.degenerate_pairs) == 9


def test_degenerate_rows_well_formed():
    for q, t in [(5, 2), (7, 3), (11, 6)]:
        assert degenerate_rows_ok(build_all(q, t))


def test_zero_matrix_never_appears():
    for q, t in [(3, 2), (5, 2), (7, 4)]:
        S = build_all(q, t)
        assert all(M.any() for M in S.matrices.values())


def test_row_sums_recorded():
    # recorded values: constant at q = 3, not constant at q = 5
    assert row_sums(build_all(3, 2)) == {x: [4, 4, 4, 4] for x in range(3)}
    rs = row_sums(build_all(5, 2))
    assert rs[0] == [6] * 6
    assert rs[1] == [6, 6, 8, 6, 6, 11]


def test_q3_commutes():
    assert verify_commute(build_all(3, 2))


def test_commutativity_status_q5_recorded():
    # the literal formulas do not commute at q = 5 under either y = inf rule
    for yinf in ("symmetric", "degenerate"):
        S = build_all(5, 2, yinf)
        assert len(commutator_failures(S)) > 0


def test_algebra_reports_both_conventions():
    S = build_all(5, 2)
    passed, by = verify_algebra(S)
    assert set(by) == set(CONVENTIONS)
    assert passed == any(by.values())


def test_mutation_breaks_commutativity():
    S = build_all(3, 2)
    assert verify_commute(S)
    assert not verify_commute(mutate(S, 0, 0, 1))


def test_structure_constant_check_runs():
    assert isinstance(structure_constants_associative(build_all(5, 2)), bool)


def test_export_formats():
    S = build_all(5, 2)
    data = json.loads(json.dumps(S.to_json()))
    assert data["index"][-1] == "inf" and len(data["matrices"]) == 5
    rows = S.to_csv(0).splitlines()
    assert len(rows) == 6 and all(len(r.split(",")) == 6 for r in rows)


def test_report_fields():
    r = hecke_report(5, 2).to_json()
    assert r["q"] == 5 and r["degenerate_pairs"] == 21 and r["degenerate_rows_ok"]


@pytest.mark.parametrize("q,t", [(4, 2), (9, 2), (5, 0), (5, 1), (5, 6)])
def test_bad_parameters(q, t):
    with pytest.raises(ValueError):
        build_T(q, t, 0)


def test_x_infinity_rejected():
    with pytest.raises(ValueError):
        entry(5, 2, 5, 0, 0)

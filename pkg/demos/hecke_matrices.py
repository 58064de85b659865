"""Build the Hecke matrices T_x over P^1(F_q) and look at commutativity.

At q = 3 with t = 2 every pair (x, y) is degenerate and the matrices commute.
From q = 5 on the literal entry rule produces non-commuting matrices; the
script prints how many pairs fail for each t.

Run with ``python demos/hecke_matrices.py``.
"""

from twovalued.hecke import build_all, commutator_failures, row_sums


def main():
    S = build_all(3, 2)
    for x, M in S.matrices.items():
        print(f"T_{x} =\n{M}")
    print("row sums:", row_sums(S))
    print("commutator failures at q=3:", commutator_failures(S))
    for q in (5, 7):
        for t in range(2, q):
            fails = commutator_failures(build_all(q, t))
            print(f"q={q} t={t}: {len(fails)} non-commuting pairs")


if __name__ == "__main__":
    main()

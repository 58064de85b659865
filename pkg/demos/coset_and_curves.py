"""Compare the coset construction on an elliptic curve over F_101 with the
roots of the Kontsevich quadratic A z^2 + B z + C.

Run with ``python demos/coset_and_curves.py``.
"""

import random

from twovalued.elliptic import check_group_axioms, coset_mul, kontsevich_roots, random_curve
from twovalued.exactnum import GF


def main(seed=7):
    rng = random.Random(seed)
    E = random_curve(101, rng)
    print("curve:", E)
    print("group axioms:", check_group_axioms(E))
    xs = [v for v in GF(101).elements() if E.lift(v)]
    for _ in range(5):
        x, y = rng.choice(xs), rng.choice(xs)
        got = [str(v) for v in coset_mul(E, x, y)]
        want = [str(v) for v in kontsevich_roots(E, x, y)]
        print(f"x={x} y={y}  coset={got}  roots={want}  match={got == want}")


if __name__ == "__main__":
    main()

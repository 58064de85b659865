"""Build the two law families, check their axioms and relate them by inversion.

Run with ``python demos/laws_and_correspondence.py``.
"""

from twovalued.families import buchstaber, invert_variables, kontsevich
from twovalued.grouplaw import INF, check_identity, check_law, check_split, extendability
from twovalued.starinv import determine_kb_sign, kontsevich_star_identity


def main():
    B = buchstaber(1, 2, 3)
    print("B_{1,2,3} =", B)
    rep = check_law(B)
    print("identity, inverse, associativity, split:", rep.passed)
    print("extends to P^1:", extendability(1, 2, 3).extendable)

    D = kontsevich(1, 2, 3)
    print("\nD_{1,2,3} =", D)
    print("identity 0 works for D:", check_identity(D, 0).passed)
    print("identity inf works for D:", check_identity(D, INF).passed)
    sp = check_split(kontsevich())
    print(f"disc_z D = {sp.kappa} f(x) f(y) with f = {sp.f}")

    print("\nsign s with (xyz)^2 D(s/x, s/y, s/z) = B:", determine_kb_sign())
    print("(xyz)^2 D(1/x, 1/y, 1/z) == B_{1,2,3}:", invert_variables(D, 1) == B)
    print("star identity B_sigma = sigma3^2 D^star:", kontsevich_star_identity(1).passed)


if __name__ == "__main__":
    main()

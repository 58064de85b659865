"""The locus where j(x,y,z) = j(-1/x,-1/y,-1/z) and its Hesse-form factors.

Run with ``python demos/fixed_locus.py``.
"""

from twovalued.starinv import fixed_locus_suite, hesse_substitution_check, locus_factors


def main():
    rep = fixed_locus_suite()
    print("factors:")
    for f in locus_factors():
        print("  ", f)
    print("each factor divides the j-difference numerator:", rep.divisible)
    print("cofactor after dividing by their product:", rep.cofactor)
    h = hesse_substitution_check()
    print("Hesse substitution holds on all 27 branches:", h.passed)


if __name__ == "__main__":
    main()

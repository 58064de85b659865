"""Exact computer algebra for symmetric biquadratic 2-valued group laws.

Modules: exactnum (rationals, F_q, cyclotomic fields), mpoly (sparse
multivariate polynomials, resultants), families (Buchstaber and Kontsevich
polynomials), grouplaw (axiom checks), elliptic (coset construction),
hecke (Hecke matrices over F_q), starinv (star involution, Moebius maps,
fixed locus) and cli.
"""

__version__ = "0.1.0"

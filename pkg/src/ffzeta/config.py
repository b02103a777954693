"""Resource limits.

Every cap lives here and is overridable per call (and from the CLI via
flags); nothing reads the environment.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    # hard cap on the number of terms a fully expanded power may reach
    max_terms: int = 10 ** 7
    # enumeration budget for brute-force point counting (points, not ops)
    max_enum: int = 10 ** 9
    # cap on q^D for the irreducible-polynomial sieve
    max_sieve: int = 10 ** 7
    # largest field order accepted by the Berlekamp-style factorizer,
    # which loops over all elements of F_q when splitting
    max_factor_q: int = 64
    # largest monomial basis a hypersurface operator matrix may use
    max_basis: int = 10 ** 5
    # most variables accepted by the hypersurface routines
    max_nvars: int = 6

    def but(self, **kw):
        return replace(self, **kw)


DEFAULT_LIMITS = Limits()

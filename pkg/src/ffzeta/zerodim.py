"""Zeta functions of zero-dimensional affine varieties V(f), f univariate
over F_q.

The coordinate ring R = F_q[x]/(f) has basis 1, x, ..., x^(d-1).  Three
semilinear/linear operators on R tie the arithmetic of f to linear algebra:

  * Frobenius        h -> h^q
  * Niederreiter     h -> psi_q(hasse_{q-1}(f^(q-1) * h))
  * PsiMul           h -> psi_q(f^(q-1) * h), needs f(0) != 0

Each has det(I - M*T) congruent mod p to 1/Z(V(f), T), and the fixed space
of Frobenius (equivalently of the others) has dimension equal to the number
of distinct irreducible factors.  Counting fixed points of Frobenius powers
pins down the whole degree profile of f, hence the exact zeta function,
without ever factoring f.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (CoefficientOutsidePrimeField, ConstantInput,
                     MultivariateInput, NotMonic, RingNotField,
                     ZeroConstantTerm)
from .linalg import SquareMatrix, charpoly_reverse, kernel_basis, solve_integer
from .poly import (SparsePoly, _binom_mod_p, dense_mod, dense_mul, dense_trim)


class OperatorKind(enum.Enum):
    FROBENIUS = "frobenius"
    NIEDERREITER = "niederreiter"
    PSI_MUL = "psi"


def _check_zerodim_input(f):
    if f.nvars != 1:
        raise MultivariateInput(
            "zero-dimensional routines need univariate input")
    if f.ctx.m != 1:
        raise RingNotField("zero-dimensional routines need a field")
    if f.degree() < 1:
        raise ConstantInput("f must be nonconstant")
    if not f.is_monic_uni():
        raise NotMonic("f must be monic")


def _dense_psi(h, q):
    return h[::q]


def _dense_hasse(ctx, h, r):
    out = []
    for u in range(r, len(h)):
        b = _binom_mod_p(u, r, ctx.p)
        out.append(ctx.mul(h[u], b) if b else 0)
    return dense_trim(out)


def op_matrix(f, kind):
    """Matrix of the chosen operator on R = F_q[x]/(f) in the power basis;
    column j is the image of x^j."""
    _check_zerodim_input(f)
    ctx = f.ctx
    q = ctx.q
    fd = f.to_dense()
    d = len(fd) - 1
    if kind == OperatorKind.PSI_MUL and fd[0] == 0:
        raise ZeroConstantTerm("psi-multiplication operator needs f(0) != 0")
    cols = []
    if kind == OperatorKind.FROBENIUS:
        from .poly import dense_powmod
        for j in range(d):
            col = dense_powmod(ctx, [0] * j + [1], q, fd)
            cols.append(col + [0] * (d - len(col)))
    else:
        fq1 = [1]
        for _ in range(q - 1):
            fq1 = dense_mul(ctx, fq1, fd)
        for j in range(d):
            h = [0] * j + fq1
            if kind == OperatorKind.NIEDERREITER:
                h = _dense_hasse(ctx, h, q - 1)
            h = _dense_psi(h, q)
            h = dense_mod(ctx, h, fd)
            cols.append(h + [0] * (d - len(h)))
    return SquareMatrix.from_columns(ctx, cols)


def multiplication_matrix(f, g):
    """Matrix of multiplication by g on F_q[x]/(f)."""
    _check_zerodim_input(f)
    ctx = f.ctx
    fd = f.to_dense()
    d = len(fd) - 1
    gd = dense_mod(ctx, g.to_dense(), fd)
    cols = []
    for j in range(d):
        h = dense_mod(ctx, [0] * j + gd, fd)
        cols.append(h + [0] * (d - len(h)))
    return SquareMatrix.from_columns(ctx, cols)


def distinct_factor_count(f, kind=OperatorKind.FROBENIUS):
    """Dimension of the fixed space of the operator, which equals the
    number of distinct monic irreducible factors of f."""
    M = op_matrix(f, kind)
    return len(kernel_basis(M - SquareMatrix.identity(f.ctx, M.n)))


def gcd_matrix(d):
    """The d x d integer matrix with entries gcd(i, j); invertible."""
    return [[math.gcd(i, j) for j in range(1, d + 1)] for i in range(1, d + 1)]


def degree_profile(f):
    """Vector s with s[i-1] = number of distinct irreducible factors of
    degree i, recovered from fixed-space dimensions of Frobenius powers."""
    _check_zerodim_input(f)
    ctx = f.ctx
    M = op_matrix(f, OperatorKind.FROBENIUS)
    d = M.n
    ident = SquareMatrix.identity(ctx, d)
    ks = []
    P = ident
    for _ in range(d):
        P = P @ M
        ks.append(len(kernel_basis(P - ident)))
    s = solve_integer(gcd_matrix(d), ks)
    assert all(v >= 0 for v in s)
    assert sum((i + 1) * v for i, v in enumerate(s)) <= d
    return tuple(s)


@dataclass(frozen=True)
class FactoredZeta:
    """Zeta function of V(f) as a finite product of (1 - T^i)^e factors;
    e = -s_i < 0, one factor per irreducible degree present in f."""

    factors: tuple

    def expand(self, B):
        """Exact integer series coefficients c_0..c_B."""
        out = [0] * (B + 1)
        out[0] = 1
        for period, expo in self.factors:
            for _ in range(-expo):
                # divide by (1 - T^period): prefix sums with stride
                for k in range(period, B + 1):
                    out[k] += out[k - period]
            for _ in range(max(expo, 0)):
                for k in range(B, period - 1, -1):
                    out[k] -= out[k - period]
        return out

    def __str__(self):
        if not self.factors:
            return "1"
        parts = []
        for period, expo in self.factors:
            base = "1-T" if period == 1 else "1-T^%d" % period
            e = -expo
            parts.append("(%s)" % base if e == 1 else "(%s)^%d" % (base, e))
        return "1/(%s)" % "".join(parts)


def zerodim_zeta(f):
    """Exact zeta function of V(f) from the degree profile: one pole factor
    1/(1-T^i)^(s_i) per degree i with s_i > 0."""
    s = degree_profile(f)
    return FactoredZeta(tuple((i + 1, -v) for i, v in enumerate(s) if v))


def congruence_charpoly(f, kind):
    """det(I - M*T) for the chosen operator; the coefficients provably lie
    in the prime field, and that containment is asserted."""
    M = op_matrix(f, kind)
    coeffs = charpoly_reverse(M)
    p = f.ctx.p
    for c in coeffs:
        if c >= p:
            raise CoefficientOutsidePrimeField(
                "charpoly coefficient code %d outside F_%d" % (c, p))
    return coeffs

"""Zeta series of hypersurfaces from operator determinants.

Two closely related constructions.  Mod p: the map h -> psi_q(f^{q-1} h)
is stable on the span of monomials of degree <= d that every variable
divides, and det(I - MT) on that span gives Z(X,T)^{(+-1)} for the affine
hypersurface f = 0.  Mod p^m: lift f to the Galois ring, raise it to
(q-1)p^{m-1}, act on all monomials of degree <= d p^{m-1}, and an
alternating product of det(I - q^i M T) gives the zeta function of the
part of the hypersurface with all coordinates nonzero, relative to the
zeta function of the full torus.

Both determinants provably land in the prime subring even though the
matrices live over F_q or its Galois-ring extension; that containment is
asserted, never assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .config import DEFAULT_LIMITS
from .errors import (CoefficientOutsidePrimeField, EmptyBasis, RingNotField,
                     SizeLimit, StabilityViolation)
from .fq import make_galois_ring
from .linalg import charpoly_reverse, SquareMatrix
from .poly import poly_pow


# ---------------------------------------------------------------------------
# truncated power series over Z/p^m


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_B of a power series mod a fixed integer."""

    modulus: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(c % self.modulus for c in self.coeffs))

    @classmethod
    def from_list(cls, modulus, coeffs, order):
        c = list(coeffs[:order + 1])
        c += [0] * (order + 1 - len(c))
        return cls(modulus, tuple(c))

    @classmethod
    def one(cls, modulus, order):
        return cls.from_list(modulus, [1], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def _compat(self, other):
        if self.modulus != other.modulus or self.order != other.order:
            raise ValueError("series moduli or truncation orders differ")

    def __mul__(self, other):
        self._compat(other)
        B = self.order
        mod = self.modulus
        out = [0] * (B + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(B + 1 - i):
                out[i + j] = (out[i + j] + a * other.coeffs[j]) % mod
        return TruncatedSeries(mod, tuple(out))

    def inverse(self):
        mod = self.modulus
        B = self.order
        a = self.coeffs
        b0 = pow(a[0], -1, mod)
        out = [b0] + [0] * B
        for k in range(1, B + 1):
            s = 0
            for j in range(1, k + 1):
                s += a[j] * out[k - j]
            out[k] = (-b0 * s) % mod
        return TruncatedSeries(mod, tuple(out))

    def pow(self, k):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = TruncatedSeries.one(self.modulus, self.order)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if k and not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("T" if c == 1 else "%d*T" % c)
            else:
                parts.append("T^%d" % k if c == 1 else "%d*T^%d" % (c, k))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# monomial bases


@dataclass(frozen=True)
class MonomialBasis:
    """Graded-lex list of exponent vectors, optionally restricted to
    monomials every variable divides."""

    nvars: int
    bound: int
    divisible: bool
    vectors: tuple

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def index_map(self):
        return {u: i for i, u in enumerate(self.vectors)}


def _graded_lex(vectors):
    return sorted(vectors, key=lambda u: (sum(u), tuple(-x for x in u)))


def _basis_caps(n, size, limits):
    lim = limits or DEFAULT_LIMITS
    if n > lim.max_nvars:
        raise SizeLimit("%d variables exceeds the cap %d" % (n, lim.max_nvars))
    if size > lim.max_basis:
        raise SizeLimit("basis of size %d exceeds the cap %d"
                        % (size, lim.max_basis))


def rd_basis(n, d, limits=None):
    """Monomials x^u with all u_i >= 1 and total degree <= d; there are
    C(d, n) of them."""
    if n < 1:
        raise ValueError("need at least one variable")
    if d < n:
        raise EmptyBasis("no monomial of degree <= %d is divisible by all "
                         "%d variables" % (d, n))
    _basis_caps(n, math.comb(d, n), limits)
    vecs = []
    # partial sums of a qualifying exponent vector are n distinct values
    # in 1..d, and every such choice arises exactly once
    for stops in itertools.combinations(range(1, d + 1), n):
        u = [stops[0]]
        for a, b in zip(stops, stops[1:]):
            u.append(b - a)
        vecs.append(tuple(u))
    basis = MonomialBasis(n, d, True, tuple(_graded_lex(vecs)))
    assert len(basis) == math.comb(d, n)
    return basis


def rmd_basis(n, d, p, m, limits=None):
    """All monomials of total degree <= d*p^(m-1); there are
    C(d*p^(m-1) + n, n) of them."""
    if n < 1:
        raise ValueError("need at least one variable")
    if m < 1:
        raise ValueError("precision m must be >= 1")
    bound = d * p ** (m - 1)
    if bound < 0:
        raise EmptyBasis("negative degree bound")
    _basis_caps(n, math.comb(bound + n, n), limits)
    vecs = []
    for stops in itertools.combinations(range(1, bound + n + 1), n):
        u = [stops[0] - 1]
        for a, b in zip(stops, stops[1:]):
            u.append(b - a - 1)
        vecs.append(tuple(u))
    basis = MonomialBasis(n, bound, False, tuple(_graded_lex(vecs)))
    assert len(basis) == math.comb(bound + n, n)
    return basis


# ---------------------------------------------------------------------------
# operator matrices


def _operator_matrix(ctx, power, basis, limits):
    """Matrix of h -> psi_q(power * h) on the basis, column convention."""
    q = ctx.q
    index = basis.index_map()
    cols = []
    for u in basis.vectors:
        g = power.mul_monomial(u)
        col = [0] * len(basis)
        for v, c in g.terms.items():
            if any(x % q for x in v):
                continue
            w = tuple(x // q for x in v)
            at = index.get(w)
            if at is None:
                raise StabilityViolation(
                    "image monomial %r escaped the span" % (w,))
            col[at] = c
        cols.append(col)
    return SquareMatrix.from_columns(ctx, cols)


def hyper_matrix_mod_p(f, n=None, d=None, limits=None):
    """Matrix of h -> psi_q(f^{q-1} h) on the all-variables-divide basis
    of degree <= d, over F_q."""
    ctx = f.ctx
    if ctx.m != 1:
        raise RingNotField("the mod-p operator works over a field")
    if n is None:
        n = f.nvars
    elif n != f.nvars:
        raise ValueError("polynomial has %d variables, not %d"
                         % (f.nvars, n))
    deg = f.degree()
    if d is None:
        d = deg
    if d < deg:
        raise ValueError("degree bound %d is below deg f = %d" % (d, deg))
    basis = rd_basis(n, d, limits)
    power = poly_pow(f, ctx.q - 1, limits)
    return _operator_matrix(ctx, power, basis, limits)


def hyper_matrix_mod_pm(f_lift, n=None, d=None, m=None, limits=None):
    """Matrix of h -> psi_q(f_lift^{(q-1)p^{m-1}} h) on all monomials of
    degree <= d*p^{m-1}, over the Galois ring Z_p^m extension."""
    ctx = f_lift.ctx
    if m is None:
        m = ctx.m
    elif m != ctx.m:
        raise ValueError("lift lives mod p^%d, not p^%d" % (ctx.m, m))
    if n is None:
        n = f_lift.nvars
    elif n != f_lift.nvars:
        raise ValueError("polynomial has %d variables, not %d"
                         % (f_lift.nvars, n))
    deg = f_lift.degree()
    if d is None:
        d = deg
    if d < deg:
        raise ValueError("degree bound %d is below deg f = %d" % (d, deg))
    if d < 0:
        raise EmptyBasis("cannot build a basis for the zero polynomial")
    basis = rmd_basis(n, d, ctx.p, m, limits)
    power = poly_pow(f_lift, (ctx.q - 1) * ctx.p ** (m - 1), limits)
    return _operator_matrix(ctx, power, basis, limits)


# ---------------------------------------------------------------------------
# series arithmetic over Galois-ring codes (internal)


def _rs_mul(ctx, a, b):
    B = len(a) - 1
    out = [0] * (B + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(B + 1 - i):
            y = b[j]
            if y:
                out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return out


def _rs_inv(ctx, a):
    B = len(a) - 1
    b0 = ctx.inv(a[0])
    out = [b0] + [0] * B
    for k in range(1, B + 1):
        s = 0
        for j in range(1, k + 1):
            if a[j] and out[k - j]:
                s = ctx.add(s, ctx.mul(a[j], out[k - j]))
        out[k] = ctx.neg(ctx.mul(b0, s))
    return out


def _rs_pow(ctx, a, k):
    base = a if k >= 0 else _rs_inv(ctx, a)
    k = abs(k)
    out = [1] + [0] * (len(a) - 1)
    while k:
        if k & 1:
            out = _rs_mul(ctx, out, base)
        base = _rs_mul(ctx, base, base)
        k >>= 1
    return out


def _prime_subring_values(ctx, codes, what):
    """Codes of constants in a Galois ring are exactly the residues mod
    p^m; anything else means the congruence guarantee was violated."""
    vals = []
    for c in codes:
        if not 0 <= c < ctx.pm:
            raise CoefficientOutsidePrimeField(
                "%s coefficient %d is not in the prime subring" % (what, c))
        vals.append(c)
    return vals


# ---------------------------------------------------------------------------
# zeta series


def zeta_mod_p(f, n=None, B=None, d=None, limits=None):
    """Zeta function of the affine hypersurface f = 0, reduced mod p and
    truncated at order B."""
    M = hyper_matrix_mod_p(f, n, d, limits)
    if n is None:
        n = f.nvars
    P = charpoly_reverse(M)
    vals = _prime_subring_values(f.ctx, P, "determinant")
    if B is None:
        B = M.n
    if B < 1:
        raise ValueError("truncation order must be >= 1")
    p = f.ctx.p
    series = TruncatedSeries.from_list(p, vals, B)
    return series if n % 2 == 0 else series.inverse()


def torus_zeta(n, q, B, pm):
    """Zeta function of the n-torus (all coordinates nonzero), mod pm,
    truncated at order B: prod_{i=0..n} (1 - q^i T)^{(-1)^(n-i+1) C(n,i)}.

    n = 0 returns the constant series 1 (empty product convention)."""
    if B < 1:
        raise ValueError("truncation order must be >= 1")
    if n < 0:
        raise ValueError("torus dimension must be >= 0")
    out = TruncatedSeries.one(pm, B)
    if n == 0:
        return out
    for i in range(n + 1):
        expo = math.comb(n, i) * (-1) ** (n - i + 1)
        base = TruncatedSeries.from_list(pm, [1, -pow(q, i, pm)], B)
        out = out * base.pow(expo)
    return out


def zeta_mod_pm(f, m=None, B=None, d=None, limits=None):
    """Zeta function of the part of the hypersurface f = 0 with all
    coordinates nonzero, computed mod p^m and truncated at order B.

    f may live over F_q (it is then lifted coefficient-wise) or over a
    Galois ring, in which case it is itself taken as the lift and m must
    agree with the ring precision.
    """
    ctx = f.ctx
    if m is None:
        m = ctx.m
    if ctx.m == m:
        ring = ctx
        flift = f
    elif ctx.m == 1:
        ring = make_galois_ring(ctx, m)
        flift = f.lift_to(ring)
    else:
        raise ValueError("polynomial precision p^%d does not match m=%d"
                         % (ctx.m, m))
    n = f.nvars
    M = hyper_matrix_mod_pm(flift, n, d, m, limits)
    if B is None:
        B = M.n
    if B < 1:
        raise ValueError("truncation order must be >= 1")
    pm = ring.pm
    q = ring.q
    acc = [1] + [0] * B
    for i in range(n + 1):
        qi = pow(q, i, pm)
        P = charpoly_reverse(M.scale(qi))
        det = (P + [0] * (B + 1))[:B + 1]
        expo = math.comb(n, i) * (-1) ** i
        acc = _rs_mul(ring, acc, _rs_pow(ring, det, expo))
    if n % 2:
        acc = _rs_inv(ring, acc)
    vals = _prime_subring_values(ring, acc, "zeta")
    relative = TruncatedSeries.from_list(pm, vals, B)
    return torus_zeta(n, q, B, pm) * relative

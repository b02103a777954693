"""Univariate factorization over F_q by fixed-space splitting.

Each of the three operators built in `zerodim` fixes a subspace of
F_q[x]/(f) whose dimension is the number of distinct irreducible factors
of f, and any two independent fixed vectors separate at least two of those
factors through gcds.  The worklist here refines f into primary components
(prime powers) using such gcds, then strips multiplicities with one
squarefree pass per component.

The gcd of f with a fixed vector need not be a clean cut when f has
repeated factors: for the differential operators every bucket gcd picks up
stray copies of the repeated primes.  `_coprime_split` repairs that by
saturating, so a successful refinement always cuts the component into two
exactly complementary monic pieces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS
from .errors import DependentPair, InternalCheckError, QTooLarge
from .linalg import SquareMatrix, kernel_basis
from .poly import (SparsePoly, dense_divmod, dense_gcd, dense_mod, dense_mul,
                   render_poly, squarefree_part)
from .zerodim import OperatorKind, op_matrix


@dataclass(frozen=True)
class Factorization:
    """Unit times a product of powers of distinct monic irreducibles."""

    unit: int
    factors: tuple

    def __post_init__(self):
        for g, mult in self.factors:
            if mult < 1:
                raise ValueError("multiplicity %d < 1" % mult)
            if not g.is_monic_uni():
                raise ValueError("factor %r is not monic" % g)

    def expand(self):
        if not self.factors:
            raise ValueError("empty factorization has no context")
        ctx = self.factors[0][0].ctx
        out = SparsePoly.constant(ctx, 1, 1)
        for g, mult in self.factors:
            out = out * g ** mult
        return out.scale(self.unit)

    @property
    def degree(self):
        return sum(mult * g.degree() for g, mult in self.factors)

    def distinct_degrees(self):
        """Degree of each distinct irreducible factor, multiplicities
        ignored; this is what the operator characteristic polynomials
        see."""
        return tuple(g.degree() for g, _ in self.factors)

    def __str__(self):
        if not self.factors:
            return str(self.unit)
        parts = []
        if self.unit != 1:
            parts.append(str(self.unit))
        for g, mult in self.factors:
            text = "(%s)" % render_poly(g)
            parts.append(text if mult == 1 else "%s^%d" % (text, mult))
        return " * ".join(parts)


def factor_sort_key(item):
    dense = item[0].to_dense()
    return (len(dense), tuple(reversed(dense)))


def admissible_basis(f, kind=OperatorKind.FROBENIUS):
    """Polynomials of degree < deg f spanning the fixed space of the
    chosen operator on F_q[x]/(f)."""
    M = op_matrix(f, kind)
    fixed = M - SquareMatrix.identity(f.ctx, M.n)
    return [SparsePoly.from_dense(f.ctx, v) for v in kernel_basis(fixed)]


def _dependent(ctx, a, b):
    """Whether dense vectors a, b are F_q-linearly dependent."""
    if not a or not b:
        return True
    if len(a) != len(b):
        return False
    lam = ctx.mul(a[-1], ctx.inv(b[-1]))
    return all(x == ctx.mul(lam, y) for x, y in zip(a, b))


def _dense_sub_scaled(ctx, a, b, c):
    """a - c*b on dense lists."""
    out = list(a) + [0] * max(0, len(b) - len(a))
    if c:
        for i, y in enumerate(b):
            if y:
                out[i] = ctx.sub(out[i], ctx.mul(c, y))
    while out and out[-1] == 0:
        out.pop()
    return out


def split(g, h1, h2, q=None):
    """One round of gcd splitting: gcd(g, h1 - c*h2) for every scalar c,
    plus gcd(g, h2) to catch components on which h2 vanishes.  Trivial
    entries are dropped; the pieces need not be coprime when g has
    repeated factors."""
    ctx = g.ctx
    if q is not None and q != ctx.q:
        raise ValueError("scalar count %d does not match the field" % q)
    gd = g.to_dense()
    a = dense_mod(ctx, h1.to_dense(), gd)
    b = dense_mod(ctx, h2.to_dense(), gd)
    if _dependent(ctx, a, b):
        raise DependentPair("splitting pair is linearly dependent")
    out = []
    for c in range(ctx.q):
        w = dense_gcd(ctx, gd, _dense_sub_scaled(ctx, a, b, c))
        if len(w) > 1:
            out.append(SparsePoly.from_dense(ctx, w))
    w = dense_gcd(ctx, gd, b)
    if len(w) > 1:
        out.append(SparsePoly.from_dense(ctx, w))
    return out


def _coprime_split(ctx, g, h):
    """Split monic g as s * t where t collects exactly the primary parts
    of g that divide h and s the rest; None when the cut is trivial."""
    w = dense_gcd(ctx, g, h)
    if len(w) <= 1 or len(w) == len(g):
        return None
    u, _ = dense_divmod(ctx, g, w)
    # pull out of g the full power of every irreducible dividing u; what
    # is left is the product of the primary parts contained in h
    rem = list(g)
    s = [1]
    w = dense_gcd(ctx, rem, u)
    while len(w) > 1:
        rem, r = dense_divmod(ctx, rem, w)
        assert not r
        s = dense_mul(ctx, s, w)
        w = dense_gcd(ctx, rem, w)
    if len(s) <= 1 or len(rem) <= 1:
        return None
    return s, rem


def _refine(ctx, g, basis):
    """First successful coprime cut of g from pairs (b_1, b_j) of the
    basis, restrictions taken mod g; None when every pair stalls."""
    rests = [dense_mod(ctx, h, g) for h in basis]
    h1 = rests[0] if rests else []
    for h2 in rests[1:]:
        if _dependent(ctx, h1, h2):
            continue
        for c in range(ctx.q):
            cut = _coprime_split(ctx, g, _dense_sub_scaled(ctx, h1, h2, c))
            if cut:
                return cut
        cut = _coprime_split(ctx, g, h2)
        if cut:
            return cut
    return None


def factorize(f, kind=OperatorKind.FROBENIUS, limits=None):
    """Complete factorization of monic univariate f into irreducibles,
    driven by the fixed space of the chosen operator.

    Components carry a basis inherited from an ancestor as long as its
    pairs keep cutting; a component that stalls gets its own fixed space
    computed, which either certifies it as a prime power (dimension one)
    or is guaranteed to cut it further.
    """
    lim = limits or DEFAULT_LIMITS
    ctx = f.ctx
    if ctx.q > lim.max_factor_q:
        raise QTooLarge("scalar enumeration over %d elements exceeds the "
                        "cap %d" % (ctx.q, lim.max_factor_q))
    basis = [h.to_dense() for h in admissible_basis(f, kind)]
    queue = [(f.to_dense(), basis, True)]
    terminal = []
    while queue:
        g, basis, owned = queue.pop()
        if owned and len(basis) == 1:
            terminal.append(g)
            continue
        cut = _refine(ctx, g, basis)
        if cut is None:
            if owned:
                raise InternalCheckError(
                    "component with several factors resisted every "
                    "splitting pair from its own fixed space")
            gp = SparsePoly.from_dense(ctx, g)
            basis = [h.to_dense() for h in admissible_basis(gp, kind)]
            queue.append((g, basis, True))
            continue
        s, t = cut
        queue.append((s, basis, False))
        queue.append((t, basis, False))
    factors = []
    for g in terminal:
        root = squarefree_part(SparsePoly.from_dense(ctx, g))
        mult, r = divmod(len(g) - 1, root.degree())
        assert r == 0
        factors.append((root, mult))
    factors.sort(key=factor_sort_key)
    return Factorization(1, tuple(factors))

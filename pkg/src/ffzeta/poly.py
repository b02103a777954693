"""Sparse multivariate polynomials with coefficients in a field or Galois
ring context.

Terms are a dict mapping exponent tuples to nonzero coefficient codes, so a
polynomial in n variables over F_q costs O(#terms) regardless of degree.
All the operator-level primitives live here as free functions: the halving
map psi_q, Hasse derivatives, powering with full expansion, univariate gcd,
squarefree parts and modular Frobenius.
"""

from __future__ import annotations

import math

from .config import DEFAULT_LIMITS
from .errors import (ConstantInput, MultivariateInput, SizeLimit)


class SparsePoly:
    __slots__ = ("ctx", "nvars", "terms")

    def __init__(self, ctx, nvars, terms=None):
        self.ctx = ctx
        self.nvars = nvars
        if terms:
            self.terms = {u: c for u, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx, nvars=1):
        return cls(ctx, nvars)

    @classmethod
    def constant(cls, ctx, c, nvars=1):
        return cls(ctx, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ctx, nvars=1):
        return cls.constant(ctx, 1, nvars)

    @classmethod
    def variable(cls, ctx, i=0, nvars=1):
        u = [0] * nvars
        u[i] = 1
        return cls(ctx, nvars, {tuple(u): 1})

    @classmethod
    def monomial(cls, ctx, exps, coeff=1):
        return cls(ctx, len(exps), {tuple(exps): coeff})

    @classmethod
    def from_dense(cls, ctx, coeffs):
        """Univariate polynomial from a little-endian coefficient list."""
        return cls(ctx, 1, {(i,): c for i, c in enumerate(coeffs) if c})

    # -- shape -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(u) for u in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self):
        return self.degree() <= 0

    def to_dense(self):
        if self.nvars != 1:
            raise MultivariateInput("dense form needs a univariate input")
        d = self.degree()
        out = [0] * (d + 1) if d >= 0 else []
        for (i,), c in self.terms.items():
            out[i] = c
        return out

    def lead_uni(self):
        """Leading coefficient of a univariate polynomial."""
        dense = self.to_dense()
        return dense[-1] if dense else 0

    def is_monic_uni(self):
        return self.lead_uni() == 1

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ctx != other.ctx or self.nvars != other.nvars:
            raise ValueError("mixed polynomial contexts")

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        terms = dict(self.terms)
        for u, c in other.terms.items():
            v = ctx.add(terms.get(u, 0), c)
            if v:
                terms[u] = v
            else:
                terms.pop(u, None)
        out = SparsePoly(self.ctx, self.nvars)
        out.terms = terms
        return out

    def __neg__(self):
        neg = self.ctx.neg
        out = SparsePoly(self.ctx, self.nvars)
        out.terms = {u: neg(c) for u, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ctx = self.ctx
        mul, add = ctx.mul, ctx.add
        terms = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                s = add(terms.get(w, 0), mul(cu, cv))
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        out = SparsePoly(self.ctx, self.nvars)
        out.terms = terms
        return out

    def scale(self, c):
        mul = self.ctx.mul
        out = SparsePoly(self.ctx, self.nvars)
        out.terms = {u: v for u, v in
                     ((u, mul(cv, c)) for u, cv in self.terms.items()) if v}
        return out

    def mul_monomial(self, exps):
        out = SparsePoly(self.ctx, self.nvars)
        out.terms = {tuple(a + b for a, b in zip(u, exps)): c
                     for u, c in self.terms.items()}
        return out

    def __pow__(self, k):
        return poly_pow(self, k)

    def __eq__(self, other):
        return (isinstance(other, SparsePoly) and self.ctx == other.ctx
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return "<poly %s>" % render_poly(self)

    def evaluate(self, point):
        ctx = self.ctx
        acc = 0
        for u, c in self.terms.items():
            v = c
            for xi, ui in zip(point, u):
                if ui:
                    v = ctx.mul(v, ctx.pow(xi, ui))
            acc = ctx.add(acc, v)
        return acc

    # -- context changes ---------------------------------------------------

    def lift_to(self, ring):
        """Trivial coefficient-wise lift of a polynomial over ring.field."""
        out = SparsePoly(ring, self.nvars)
        out.terms = {u: ring.from_field(c) for u, c in self.terms.items()}
        return out

    def reduce_mod_p(self):
        """Reduce a polynomial over a Galois ring to the residue field."""
        ctx = self.ctx
        out = SparsePoly(ctx.field, self.nvars)
        for u, c in self.terms.items():
            v = ctx.to_field(c)
            if v:
                out.terms[u] = v
        return out


# ---------------------------------------------------------------------------
# rendering (kept next to the data type; the CLI parser is its inverse)


def var_names(nvars):
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return ["x%d" % (i + 1) for i in range(nvars)]


def _render_coeff(ctx, code):
    """Text of one coefficient; (needs_parens, text)."""
    if ctx.digits == 1:
        return False, str(code)
    cs = ctx.coeffs(code)
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else "%d*" % c
            parts.append(head + ("t" if i == 1 else "t^%d" % i))
    if not parts:
        return False, "0"
    return (len(parts) > 1 or "t" in parts[0]), "+".join(parts)


def render_poly(f):
    if f.is_zero():
        return "0"
    names = var_names(f.nvars)
    keys = sorted(f.terms, key=lambda u: (sum(u),) + u, reverse=True)
    out = []
    for u in keys:
        mono = "*".join(
            n if ui == 1 else "%s^%d" % (n, ui)
            for n, ui in zip(names, u) if ui)
        parens, ctext = _render_coeff(f.ctx, f.terms[u])
        if not mono:
            piece = "(%s)" % ctext if parens else ctext
        elif f.terms[u] == 1:
            piece = mono
        else:
            head = "(%s)" % ctext if parens else ctext
            piece = head + "*" + mono
        out.append(piece)
    return " + ".join(out)


# ---------------------------------------------------------------------------
# dense univariate kernels (little-endian code lists); these carry the hot
# paths of the factorization and zero-dimensional suites


def dense_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def dense_mul(ctx, a, b):
    if not a or not b:
        return []
    mul, add = ctx.mul, ctx.add
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return dense_trim(out)


def dense_divmod(ctx, a, b):
    """Quotient and remainder; b nonzero, coefficients in a field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], dense_trim(a)
    inv_lead = ctx.inv(b[-1])
    mul, sub = ctx.mul, ctx.sub
    q = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        c = a[i]
        if not c:
            continue
        coef = mul(c, inv_lead)
        q[i - db] = coef
        for j in range(db + 1):
            a[i - db + j] = sub(a[i - db + j], mul(coef, b[j]))
    return q, dense_trim(a[:db])


def dense_mod(ctx, a, b):
    return dense_divmod(ctx, a, b)[1]


def dense_monic(ctx, a):
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    inv = ctx.inv(a[-1])
    return [ctx.mul(c, inv) for c in a]


def dense_gcd(ctx, a, b):
    a, b = dense_trim(list(a)), dense_trim(list(b))
    while b:
        a, b = b, dense_mod(ctx, a, b)
    return dense_monic(ctx, a)


def dense_deriv(ctx, a):
    # the integer i embeds as the degree-0 code i mod base
    out = [ctx.mul(a[i], i % ctx.base) for i in range(1, len(a))]
    return dense_trim(out)


def dense_mulmod(ctx, a, b, f):
    return dense_mod(ctx, dense_mul(ctx, a, b), f)


def dense_powmod(ctx, a, n, f):
    r = [1]
    a = dense_mod(ctx, a, f)
    while n:
        if n & 1:
            r = dense_mulmod(ctx, r, a, f)
        a = dense_mulmod(ctx, a, a, f)
        n >>= 1
    return r


def dense_eval(ctx, a, x):
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def dense_translate(ctx, a, c):
    """Coefficients of f(x + c)."""
    out = []
    for coef in reversed(a):
        # out <- out * (x + c) + coef
        shifted = [0] + out
        for i in range(len(out)):
            shifted[i] = ctx.add(shifted[i], ctx.mul(out[i], c))
        out = shifted
        if out:
            out[0] = ctx.add(out[0], coef)
        elif coef:
            out = [coef]
    return dense_trim(out)


# ---------------------------------------------------------------------------
# operator-level primitives


def _require_uni(f, who):
    if f.nvars != 1:
        raise MultivariateInput("%s needs a univariate input" % who)


def psi_q(h, q=None):
    """Halving operator: keeps terms whose exponent vector is divisible by q
    componentwise and divides the exponents by q.  One-sided inverse of the
    q-power map."""
    ctx = h.ctx
    if q is None:
        q = ctx.q
    elif q != ctx.q:
        raise ValueError("psi_q order %d does not match the context" % q)
    out = SparsePoly(ctx, h.nvars)
    for u, c in h.terms.items():
        if all(ui % q == 0 for ui in u):
            out.terms[tuple(ui // q for ui in u)] = c
    return out


def _binom_mod_p(n, k, p):
    """Binomial coefficient mod p by the base-p digit product rule."""
    r = 1
    while k:
        r = r * math.comb(n % p, k % p) % p
        if not r:
            return 0
        n //= p
        k //= p
    return r


def hasse_derivative(h, r):
    """r-th Hasse derivative of a univariate polynomial: x^u maps to
    C(u, r) x^(u-r)."""
    _require_uni(h, "hasse_derivative")
    ctx = h.ctx
    out = SparsePoly(ctx, 1)
    for (u,), c in h.terms.items():
        if u < r:
            continue
        if ctx.m == 1:
            b = _binom_mod_p(u, r, ctx.p)
        else:
            b = math.comb(u, r) % ctx.pm
        if not b:
            continue
        scaled = ctx.mul(c, b % ctx.base)
        if scaled:
            out.terms[(u - r,)] = scaled
    return out


def poly_pow(f, k, limits=None):
    """f**k by repeated squaring with full expansion; SizeLimit guards the
    term count."""
    if k < 0:
        raise ValueError("negative power of a polynomial")
    lim = (limits or DEFAULT_LIMITS).max_terms
    out = SparsePoly.one(f.ctx, f.nvars)
    base = f
    while k:
        if k & 1:
            out = out * base
            if len(out.terms) > lim:
                raise SizeLimit("expansion exceeds %d terms" % lim)
        k >>= 1
        if k:
            base = base * base
            if len(base.terms) > lim:
                raise SizeLimit("expansion exceeds %d terms" % lim)
    return out


def gcd_uni(a, b):
    """Monic gcd of univariate polynomials over a field."""
    _require_uni(a, "gcd_uni")
    _require_uni(b, "gcd_uni")
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return SparsePoly.from_dense(
        a.ctx, dense_gcd(a.ctx, a.to_dense(), b.to_dense()))


def _dense_pth_root(ctx, a):
    """Exact p-th root of a dense polynomial whose derivative vanishes."""
    p = ctx.p
    root = [0] * ((len(a) - 1) // p + 1)
    for i in range(0, len(a), p):
        root[i // p] = ctx.pth_root(a[i])
    return root


def _dense_squarefree(ctx, f):
    deriv = dense_deriv(ctx, f)
    if not deriv:
        return _dense_squarefree(ctx, _dense_pth_root(ctx, f))
    g = dense_gcd(ctx, f, deriv)
    if len(g) == 1:
        return dense_monic(ctx, f)
    w, rem = dense_divmod(ctx, f, g)
    assert not rem
    # w carries the factors of multiplicity prime to p exactly once; strip
    # them from g, whose leftover is a p-th power
    c = g
    while True:
        h = dense_gcd(ctx, c, w)
        if len(h) == 1:
            break
        c, rem = dense_divmod(ctx, c, h)
        assert not rem
    if len(c) == 1:
        return dense_monic(ctx, w)
    return dense_mul(ctx, dense_monic(ctx, w),
                     _dense_squarefree(ctx, _dense_pth_root(ctx, c)))


def squarefree_part(f):
    """Product of the distinct monic irreducible factors of f."""
    _require_uni(f, "squarefree_part")
    if f.is_constant():
        raise ConstantInput("squarefree part of a constant")
    return SparsePoly.from_dense(
        f.ctx, _dense_squarefree(f.ctx, f.to_dense()))


def frobenius_mod(h, f):
    """h^q mod f by repeated squaring with reduction after each step."""
    _require_uni(h, "frobenius_mod")
    _require_uni(f, "frobenius_mod")
    h._check(f)
    ctx = h.ctx
    return SparsePoly.from_dense(
        ctx, dense_powmod(ctx, h.to_dense(), ctx.q, f.to_dense()))

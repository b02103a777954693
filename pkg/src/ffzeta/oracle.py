"""Ground truth by brute force.

Everything the congruence machinery claims is checked against this module:
points are counted by enumerating every candidate tuple over F_{q^k}, exact
zeta series coefficients come from the exp-of-power-sums recurrence run in
exact integer arithmetic, and univariate factorizations come from a sieve
of irreducibles plus trial division.  None of it shares code with the
operator path beyond basic field arithmetic.

Enumeration is vectorized when the extension field is small enough to carry
log/antilog tables; otherwise a plain odometer loop runs.  Either way the
work is q^(k*n) point evaluations, capped by Limits.max_enum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import NonIntegralCoefficient, TooLarge
from .factor import Factorization, factor_sort_key
from .fq import make_field, split_prime_power
from .poly import SparsePoly, dense_divmod, dense_monic, dense_trim

_EMBED_CACHE = {}
_SIEVE_CACHE = {}


# ---------------------------------------------------------------------------
# embeddings F_q -> F_{q^k}


def _find_root(big, int_coeffs):
    """Least root in `big` of a polynomial with prime-subfield coefficients."""
    kit = big.vector_kit()
    if kit is not None and big.q > (1 << 14):
        xs = np.arange(big.q, dtype=np.int64)
        y = np.full(big.q, int_coeffs[-1], dtype=np.int64)
        xlog = kit.log[xs]
        xzero = xs == 0
        for c in reversed(int_coeffs[:-1]):
            prod = kit.exp[(kit.log[y] + xlog) % (big.q - 1)]
            y = np.where((y == 0) | xzero, 0, prod)
            if c:
                y = kit.add_vec_scalar(y, c)
        roots = np.nonzero(y == 0)[0]
        if len(roots):
            return int(roots[0])
    else:
        for x in big.elements():
            acc = 0
            for c in reversed(int_coeffs):
                acc = big.add(big.mul(acc, x), c)
            if acc == 0:
                return x
    raise ValueError("modulus has no root in the extension")


def _embedding(small, big):
    """Powers of the image of t under the least-root embedding, or None when
    coefficient codes carry over unchanged (prime base field)."""
    if small.e == 1 or big is small:
        return None
    key = (small, big)
    hit = _EMBED_CACHE.get(key)
    if hit is None:
        root = _find_root(big, [int(c) for c in small.modulus])
        hit = [1]
        for _ in range(small.e - 1):
            hit.append(big.mul(hit[-1], root))
        _EMBED_CACHE[key] = hit
    return hit


def _embed_coeff(small, big, rpows, a):
    if rpows is None:
        return a
    acc = 0
    for dgt, rp in zip(small.coeffs(a), rpows):
        if dgt:
            acc = big.add(acc, big.mul(dgt, rp))
    return acc


# ---------------------------------------------------------------------------
# point counting


@dataclass(frozen=True)
class CountVector:
    """N_1..N_K for one polynomial and one domain (affine or torus)."""

    q: int
    nvars: int
    domain: str
    counts: tuple

    def __post_init__(self):
        for k, nk in enumerate(self.counts, 1):
            qk = self.q ** k
            bound = qk ** self.nvars if self.domain == "affine" \
                else (qk - 1) ** self.nvars
            if not 0 <= nk <= bound:
                raise ValueError("impossible count N_%d = %d" % (k, nk))


def _group_terms(terms, n):
    """Split off the last variable: list of (outer exponents, dense-in-last
    coefficient list)."""
    groups = {}
    for u, c in terms.items():
        outer, last = u[:n - 1], u[n - 1]
        groups.setdefault(outer, {})[last] = c
    out = []
    for outer, m in groups.items():
        dense = [0] * (max(m) + 1)
        for j, c in m.items():
            dense[j] = c
        out.append((outer, dense))
    return out


def _horner_vec(kit, dense, xs, xlog, xzero):
    if not dense:
        return np.zeros(len(xs), dtype=np.int64)
    y = np.full(len(xs), dense[-1], dtype=np.int64)
    qm1 = kit.q - 1
    for c in reversed(dense[:-1]):
        prod = kit.exp[(kit.log[y] + xlog) % qm1]
        y = np.where((y == 0) | xzero, 0, prod)
        if c:
            y = kit.add_vec_scalar(y, c)
    return y


def count_points(f, k=1, domain="affine", limits=None):
    """Number of F_{q^k}-rational points of {f = 0}, by enumeration over the
    affine space or the torus (all coordinates nonzero)."""
    if domain not in ("affine", "torus"):
        raise ValueError("domain must be 'affine' or 'torus'")
    ctx = f.ctx
    if ctx.m != 1:
        raise ValueError("point counting needs field coefficients")
    lim = limits or DEFAULT_LIMITS
    n = f.nvars
    if ctx.q ** (k * n) > lim.max_enum:
        raise TooLarge("q^(k*n) = %d exceeds the enumeration cap"
                       % ctx.q ** (k * n))
    big = ctx if k == 1 else make_field(ctx.p, ctx.e * k)
    rpows = _embedding(ctx, big)
    terms = {u: _embed_coeff(ctx, big, rpows, c) for u, c in f.terms.items()}
    if not terms:
        # the zero polynomial vanishes everywhere
        total = big.q ** n if domain == "affine" else (big.q - 1) ** n
        return total
    kit = big.vector_kit()
    if kit is not None:
        return _count_vectorized(big, kit, terms, n, domain)
    return _count_scalar(big, terms, n, domain)


def _count_vectorized(big, kit, terms, n, domain):
    Q = big.q
    lo = 0 if domain == "affine" else 1
    xs = np.arange(lo, Q, dtype=np.int64)
    xlog = kit.log[xs]
    xzero = xs == 0
    if n == 1:
        dense = [0] * (max(u[0] for u in terms) + 1)
        for (u,), c in terms.items():
            dense[u] = c
        y = _horner_vec(kit, dense, xs, xlog, xzero)
        return int(np.count_nonzero(y == 0))
    groups = _group_terms(terms, n)
    maxdeg = [0] * (n - 1)
    for outer, _ in groups:
        for i, e in enumerate(outer):
            maxdeg[i] = max(maxdeg[i], e)
    count = 0
    mul = big.mul
    add = big.add
    for point in itertools.product(range(lo, Q), repeat=n - 1):
        pows = []
        for i, v in enumerate(point):
            row = [1] * (maxdeg[i] + 1)
            for j in range(1, maxdeg[i] + 1):
                row[j] = mul(row[j - 1], v)
            pows.append(row)
        dense = [0] * (max(len(d) for _, d in groups))
        for outer, dvec in groups:
            w = 1
            for i, e in enumerate(outer):
                if e:
                    w = mul(w, pows[i][e])
                    if not w:
                        break
            if not w:
                continue
            for j, c in enumerate(dvec):
                if c:
                    dense[j] = add(dense[j], mul(w, c))
        y = _horner_vec(kit, dense_trim(dense), xs, xlog, xzero)
        count += int(np.count_nonzero(y == 0))
    return count


def _count_scalar(big, terms, n, domain):
    Q = big.q
    lo = 0 if domain == "affine" else 1
    count = 0
    mul = big.mul
    add = big.add
    groups = _group_terms(terms, n) if n > 1 else None
    if n == 1:
        dense = [0] * (max(u[0] for u in terms) + 1)
        for (u,), c in terms.items():
            dense[u] = c
        for x in range(lo, Q):
            acc = 0
            for c in reversed(dense):
                acc = add(mul(acc, x), c)
            if acc == 0:
                count += 1
        return count
    for point in itertools.product(range(lo, Q), repeat=n - 1):
        dense = {}
        for outer, dvec in groups:
            w = 1
            for i, e in enumerate(outer):
                for _ in range(e):
                    w = mul(w, point[i])
            if not w:
                continue
            for j, c in enumerate(dvec):
                if c:
                    dense[j] = add(dense.get(j, 0), mul(w, c))
        dvals = [dense.get(j, 0) for j in range(max(dense, default=0) + 1)]
        for x in range(lo, Q):
            acc = 0
            for c in reversed(dvals):
                acc = add(mul(acc, x), c)
            if acc == 0:
                count += 1
    return count


def count_vector(f, K, domain="affine", limits=None):
    counts = tuple(count_points(f, k, domain, limits) for k in range(1, K + 1))
    return CountVector(f.ctx.q, f.nvars, domain, counts)


def zeta_coeffs_exact(counts, B):
    """Series coefficients of exp(sum N_k T^k / k) through T^B, computed
    exactly; the result provably has nonnegative integer entries and that
    is asserted."""
    if isinstance(counts, CountVector):
        counts = counts.counts
    if len(counts) < B:
        raise ValueError("need counts through N_%d" % B)
    c = [1]
    for m in range(1, B + 1):
        s = 0
        for k in range(1, m + 1):
            s += counts[k - 1] * c[m - k]
        v, r = divmod(s, m)
        if r or v < 0:
            raise NonIntegralCoefficient(
                "coefficient %d of the zeta series is %s/%d" % (m, s, m))
        c.append(v)
    return c


# ---------------------------------------------------------------------------
# irreducibles by sieve, factorization by trial division


def _monic_digit_rows(q, d):
    """(q^d, d+1) array: all monic degree-d coefficient rows, little-endian."""
    idx = np.arange(q ** d, dtype=np.int64)
    rows = np.empty((q ** d, d + 1), dtype=np.int64)
    for i in range(d):
        rows[:, i] = (idx // q ** i) % q
    rows[:, d] = 1
    return rows


def _batch_mul_fixed(ctx, rows, fixed):
    """Product of every row polynomial with one fixed dense polynomial."""
    np_mul = ctx.np_mul
    p2 = ctx.p == 2
    np_add = None if p2 else ctx.np_add
    n, la = rows.shape
    out = np.zeros((n, la + len(fixed) - 1), dtype=np.int64)
    for j, c in enumerate(fixed):
        if not c:
            continue
        prod = np_mul[c, rows]
        if p2:
            out[:, j:j + la] ^= prod
        else:
            seg = out[:, j:j + la]
            out[:, j:j + la] = np_add[seg, prod]
    return out


def _row_indices(q, rows, d):
    """Little-endian index of each monic degree-d row."""
    acc = np.zeros(len(rows), dtype=np.int64)
    for i in range(d - 1, -1, -1):
        acc = acc * q + rows[:, i]
    return acc


def _bigend_keys(q, rows, d):
    # sort key weights c_{d-1} most, matching tuple order (c_{d-1}, ..., c_0)
    acc = np.zeros(len(rows), dtype=np.int64)
    for i in range(d - 1, -1, -1):
        acc = acc * q + rows[:, i]
    return acc


def _sieve(ctx, D):
    """Per-degree sorted irreducible coefficient rows, up to degree D."""
    key = ctx
    built, data = _SIEVE_CACHE.get(key, (0, {}))
    if built >= D:
        return data
    q = ctx.q
    for d in range(1, D + 1):
        if d in data:
            continue
        comp = np.zeros(q ** d, dtype=bool)
        for ell in range(1, d // 2 + 1):
            irr = data[ell]
            r = d - ell
            monics = _monic_digit_rows(q, r)
            if len(irr) <= q ** r:
                for row in irr:
                    prod = _batch_mul_fixed(ctx, monics, [int(v) for v in row])
                    comp[_row_indices(q, prod, d)] = True
            else:
                for mrow in monics:
                    prod = _batch_mul_fixed(ctx, irr, [int(v) for v in mrow])
                    comp[_row_indices(q, prod, d)] = True
        rows = _monic_digit_rows(q, d)[~comp]
        order = np.argsort(_bigend_keys(q, rows, d), kind="stable")
        data[d] = rows[order]
    _SIEVE_CACHE[key] = (max(built, D), data)
    return data


def irreducibles_up_to(field, D, limits=None):
    """All monic irreducibles of degree <= D over the field, sorted by
    degree then by coefficient tuple (c_{d-1}, ..., c_0)."""
    ctx = field if not isinstance(field, int) else _field_from_order(field)
    lim = limits or DEFAULT_LIMITS
    if ctx.q ** D > lim.max_sieve:
        raise TooLarge("sieve size q^D = %d over cap" % ctx.q ** D)
    data = _sieve(ctx, D)
    out = []
    for d in range(1, D + 1):
        for row in data[d]:
            out.append(SparsePoly.from_dense(ctx, [int(v) for v in row]))
    return out


def _field_from_order(q):
    return make_field(*split_prime_power(q))


def _batch_remainders(ctx, a, rows, ell):
    """Remainder of the fixed polynomial `a` modulo every monic row of
    degree ell; returns a divisibility mask."""
    np_mul = ctx.np_mul
    p2 = ctx.p == 2
    if not p2:
        np_add = ctx.np_add
        np_neg = ctx.np_neg
    n = len(rows)
    rem = np.tile(np.array(a, dtype=np.int64), (n, 1))
    divs = rows[:, :ell]
    for i in range(len(a) - 1, ell - 1, -1):
        lead = rem[:, i]
        prod = np_mul[lead[:, None], divs]
        if p2:
            rem[:, i - ell:i] ^= prod
        else:
            seg = rem[:, i - ell:i]
            rem[:, i - ell:i] = np_add[seg, np_neg[prod]]
        rem[:, i] = 0
    return np.all(rem[:, :ell] == 0, axis=1)


def trial_factorize(f, limits=None):
    """Factor a univariate polynomial by dividing out sieve irreducibles in
    increasing order.  Independent of the operator machinery."""
    if f.nvars != 1:
        raise ValueError("trial factorization needs univariate input")
    if f.ctx.m != 1:
        raise ValueError("trial factorization needs a field")
    ctx = f.ctx
    dense = f.to_dense()
    if len(dense) <= 1:
        raise ValueError("cannot factor a constant")
    unit = dense[-1]
    rem = dense_monic(ctx, dense)
    lim = limits or DEFAULT_LIMITS
    half = (len(rem) - 1) // 2
    if half >= 1 and ctx.q ** half > lim.max_sieve:
        raise TooLarge("degree %d needs a sieve past the cap" % (len(rem) - 1))
    data = _sieve(ctx, max(half, 1))
    factors = []
    for ell in range(1, half + 1):
        if 2 * ell > len(rem) - 1:
            break
        mask = _batch_remainders(ctx, rem, data[ell], ell)
        if not mask.any():
            continue
        for row in data[ell][mask]:
            div = [int(v) for v in row]
            mult = 0
            while True:
                quo, r = dense_divmod(ctx, rem, div)
                if r:
                    break
                rem = quo
                mult += 1
            if mult:
                factors.append((SparsePoly.from_dense(ctx, div), mult))
    if len(rem) > 1:
        factors.append((SparsePoly.from_dense(ctx, rem), 1))
    factors.sort(key=factor_sort_key)
    return Factorization(unit, tuple(factors))

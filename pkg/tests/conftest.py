"""Shared corpus generators; every test seeds its own RNG for reproducibility."""

import random
from itertools import product

from ffzeta import make_field, split_prime_power
from ffzeta.poly import SparsePoly


def field(q):
    return make_field(*split_prime_power(q))


def rand_monic(ctx, rng, d, nonzero_const=False):
    """Random monic univariate of degree d over ctx."""
    coeffs = [rng.randrange(ctx.q) for _ in range(d)] + [1]
    if nonzero_const:
        coeffs[0] = rng.randrange(1, ctx.q)
    return SparsePoly.from_dense(ctx, coeffs)


def rand_poly_uni(ctx, rng, d):
    """Random nonzero univariate of degree <= d (not necessarily monic)."""
    while True:
        coeffs = [rng.randrange(ctx.q) for _ in range(d + 1)]
        if any(coeffs):
            return SparsePoly.from_dense(ctx, coeffs)


def rand_poly_mv(ctx, rng, nvars, d, density=0.6):
    """Random nonzero polynomial in nvars variables, total degree <= d."""
    while True:
        terms = {}
        for u in product(range(d + 1), repeat=nvars):
            if sum(u) <= d and rng.random() < density:
                c = rng.randrange(ctx.q)
                if c:
                    terms[u] = c
        if terms:
            return SparsePoly(ctx, nvars, terms)


def count_scalar_reference(f, k, domain="affine"):
    """Independent point count: plain nested loops, scalar arithmetic only.

    Deliberately shares no code with the library's vectorized counter."""
    ctx = f.ctx
    big = make_field(ctx.p, ctx.e * k) if ctx.e * k > 1 else ctx
    if ctx.q == big.q or ctx.e == 1:
        # prime-subfield constants keep their integer codes
        embed = {a: a for a in range(ctx.q)}
    else:
        # the library's subfield embedding is trusted here only as a map;
        # recompute it from first principles: t_small -> generator power
        # such that the small modulus vanishes
        embed = {0: 0}
        mod = [c % ctx.p for c in ctx.modulus]
        for cand in range(big.q):
            acc = 0
            for c in reversed(mod):
                acc = big.add(big.mul(acc, cand), c % big.p)
            if acc == 0:
                break
        else:
            raise AssertionError("no embedding root found")
        for a in range(ctx.q):
            code = 0
            for i, c in enumerate(ctx.coeffs(a)):
                term = c % big.p
                for _ in range(i):
                    term = big.mul(term, cand)
                code = big.add(code, term)
            embed[a] = code
    points = range(1, big.q) if domain == "torus" else range(big.q)
    total = 0
    for pt in product(points, repeat=f.nvars):
        acc = 0
        for u, c in f.terms.items():
            val = embed[c]
            for x, e in zip(pt, u):
                for _ in range(e):
                    val = big.mul(val, x)
            acc = big.add(acc, val)
        if acc == 0:
            total += 1
    return total

import math
import random

import pytest

from conftest import field, rand_monic, rand_poly_mv, rand_poly_uni
from ffzeta import SizeLimit, make_galois_ring
from ffzeta.config import DEFAULT_LIMITS
from ffzeta.poly import (SparsePoly, dense_eval, dense_divmod,
                         dense_translate, frobenius_mod, gcd_uni,
                         hasse_derivative, poly_pow, psi_q, squarefree_part)
from ffzeta.poly import _binom_mod_p


def test_canonical_form_no_zero_terms():
    ctx = field(3)
    rng = random.Random(0)
    for _ in range(100):
        f = rand_poly_mv(ctx, rng, 2, 3)
        g = rand_poly_mv(ctx, rng, 2, 3)
        for h in (f + g, f - g, f * g, f + (-g)):
            assert all(c != 0 for c in h.terms.values())
    f = SparsePoly(ctx, 1, {(1,): 1})
    assert (f - f).terms == {}
    assert (f - f).is_zero()


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_degree_multiplicative_over_field(q):
    ctx = field(q)
    rng = random.Random(q)
    for _ in range(60):
        f = rand_poly_mv(ctx, rng, 2, rng.randrange(1, 4))
        g = rand_poly_mv(ctx, rng, 2, rng.randrange(1, 4))
        assert (f * g).degree() == f.degree() + g.degree()


def test_ring_arithmetic_small_identities():
    ctx = field(5)
    rng = random.Random(5)
    for _ in range(60):
        f = rand_poly_mv(ctx, rng, 2, 2)
        g = rand_poly_mv(ctx, rng, 2, 2)
        h = rand_poly_mv(ctx, rng, 2, 2)
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert f * (g * h) == (f * g) * h


def test_evaluate_matches_dense_eval():
    ctx = field(9)
    rng = random.Random(9)
    for _ in range(40):
        f = rand_poly_uni(ctx, rng, 5)
        x = rng.randrange(9)
        assert f.evaluate((x,)) == dense_eval(ctx, f.to_dense(), x)


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_psi_inverts_frobenius(q):
    ctx = field(q)
    rng = random.Random(q + 17)
    for _ in range(40):
        h = rand_poly_mv(ctx, rng, rng.randrange(1, 3), 3)
        assert psi_q(h ** q) == h


@pytest.mark.parametrize("q", [2, 3, 4])
def test_psi_commutes_past_qth_powers(q):
    ctx = field(q)
    rng = random.Random(q + 29)
    for _ in range(30):
        f = rand_poly_uni(ctx, rng, 2)
        h = rand_poly_uni(ctx, rng, 2 * q)
        assert psi_q(f ** q * h) == f * psi_q(h)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_hasse_commutes_past_qth_powers(q):
    ctx = field(q)
    rng = random.Random(q + 43)
    for _ in range(30):
        f = rand_poly_uni(ctx, rng, 2)
        h = rand_poly_uni(ctx, rng, 2 * q)
        fq = f ** q
        assert hasse_derivative(fq * h, q - 1) == fq * hasse_derivative(
            h, q - 1)


def test_hasse_derivative_monomials():
    ctx = field(3)
    # H^(2)(x^4) = C(4,2) x^2 = 6 x^2 = 0 mod 3
    x4 = SparsePoly.monomial(ctx, (4,))
    assert hasse_derivative(x4, 2) == SparsePoly.zero(ctx)
    # H^(2)(x^5) = C(5,2) x^3 = 10 x^3 = x^3 mod 3
    x5 = SparsePoly.monomial(ctx, (5,))
    assert hasse_derivative(x5, 2) == SparsePoly.monomial(ctx, (3,))


def test_binomials_match_integer_binomials():
    for p in (2, 3, 5):
        for n in range(20):
            for k in range(n + 1):
                assert _binom_mod_p(n, k, p) == math.comb(n, k) % p


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_squarefree_reconstruction(q):
    # peeling the radical off f repeatedly must multiply back to f
    ctx = field(q)
    rng = random.Random(q + 3)
    for _ in range(60):
        f = rand_monic(ctx, rng, rng.randrange(2, 9))
        rem = f.to_dense()
        prod = SparsePoly.one(ctx)
        while len(rem) > 1:
            rad = squarefree_part(SparsePoly.from_dense(ctx, rem))
            assert rad.is_monic_uni()
            prod = prod * rad
            rem, r = dense_divmod(ctx, rem, rad.to_dense())
            assert r == []
        assert prod == f


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_gcd_divides_and_lcm_identity(q):
    ctx = field(q)
    rng = random.Random(q + 11)
    for _ in range(60):
        a = rand_poly_uni(ctx, rng, 6)
        b = rand_poly_uni(ctx, rng, 6)
        g = gcd_uni(a, b)
        assert g.is_monic_uni()
        ga, ra = dense_divmod(ctx, a.to_dense(), g.to_dense())
        gb, rb = dense_divmod(ctx, b.to_dense(), g.to_dense())
        assert ra == [] and rb == []
        # (a*b)/g is a common multiple of both arguments
        lcm, r = dense_divmod(ctx, (a * b).to_dense(), g.to_dense())
        for h in (a, b):
            _, rem = dense_divmod(ctx, lcm, h.to_dense())
            assert rem == []


def test_frobenius_mod_worked_cases():
    ctx2 = field(2)
    f = SparsePoly.from_dense(ctx2, [1, 1, 1])
    x = SparsePoly.variable(ctx2)
    assert frobenius_mod(x, f) == SparsePoly.from_dense(ctx2, [1, 1])
    ctx3 = field(3)
    f3 = SparsePoly.from_dense(ctx3, [2, 0, 1])  # x^2 - 1
    x3 = SparsePoly.variable(ctx3)
    assert frobenius_mod(x3, f3) == x3
    one = SparsePoly.one(ctx3)
    assert frobenius_mod(one, f3) == one


def test_dense_translate_round_trip_and_evaluation():
    ctx = field(9)
    rng = random.Random(99)
    for _ in range(40):
        f = rand_poly_uni(ctx, rng, 6)
        c = rng.randrange(9)
        shifted = dense_translate(ctx, f.to_dense(), c)
        back = dense_translate(ctx, shifted, ctx.neg(c))
        assert back == f.to_dense()
        x = rng.randrange(9)
        assert dense_eval(ctx, shifted, x) == dense_eval(
            ctx, f.to_dense(), ctx.add(x, c))


def test_poly_pow_term_cap():
    ctx = field(2)
    f = rand_poly_mv(ctx, random.Random(1), 3, 3, density=1.0)
    with pytest.raises(SizeLimit):
        poly_pow(f, 40, DEFAULT_LIMITS.but(max_terms=50))


def test_lift_and_reduce_round_trip():
    ctx = field(4)
    ring = make_galois_ring(ctx, 2)
    rng = random.Random(4)
    for _ in range(30):
        f = rand_poly_mv(ctx, rng, 2, 3)
        lifted = f.lift_to(ring)
        assert lifted.reduce_mod_p() == f
    # products reduce compatibly
    f = rand_poly_mv(ctx, rng, 2, 2)
    g = rand_poly_mv(ctx, rng, 2, 2)
    assert (f.lift_to(ring) * g.lift_to(ring)).reduce_mod_p() == f * g


def test_degree_of_zero_poly():
    ctx = field(2)
    assert SparsePoly.zero(ctx).degree() == -1
    assert SparsePoly.one(ctx).degree() == 0

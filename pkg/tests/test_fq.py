import random

import pytest

from ffzeta import (CompositeP, ReducibleModulus, irreducibles_up_to,
                    make_field, make_galois_ring, split_prime_power)


def test_split_prime_power():
    assert split_prime_power(2) == (2, 1)
    assert split_prime_power(8) == (2, 3)
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(13) == (13, 1)
    assert split_prime_power(7 ** 3) == (7, 3)
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(ValueError):
            split_prime_power(bad)


def test_composite_characteristic_rejected():
    for bad in (1, 4, 6, 9, 15):
        with pytest.raises(CompositeP):
            make_field(bad)


def test_reducible_modulus_rejected():
    # t^2 + 1 = (t+1)^2 over F_2
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])
    # t^2 - 1 over F_3
    with pytest.raises(ReducibleModulus):
        make_field(3, 2, [2, 0, 1])
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 1])  # degree mismatch
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 1, 0])  # not monic


def test_default_modulus_is_least_irreducible():
    # sieve order within one degree is the same coefficient order the
    # constructor minimizes, so the default must be the first hit
    for p, e in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)):
        ctx = make_field(p, e)
        base = make_field(p)
        first = next(g for g in irreducibles_up_to(base, e)
                     if g.degree() == e)
        assert list(ctx.modulus) == first.to_dense()


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 25])
def test_fermat_and_inverses(q):
    ctx = make_field(*split_prime_power(q))
    for a in ctx.elements():
        assert ctx.pow(a, q) == a
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    assert ctx.frob(ctx.p if ctx.e > 1 else 1) == ctx.pow(
        ctx.p if ctx.e > 1 else 1, ctx.p)


@pytest.mark.parametrize("q", [4, 9, 27])
def test_field_axioms_random(q):
    ctx = make_field(*split_prime_power(q))
    rng = random.Random(q)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b),
                                                    ctx.mul(a, c))
        assert ctx.add(a, ctx.neg(a)) == 0
        assert ctx.sub(a, b) == ctx.add(a, ctx.neg(b))


def test_encode_coeffs_roundtrip():
    ctx = make_field(3, 3)
    for a in range(ctx.q):
        assert ctx.encode(ctx.coeffs(a)) == a


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (4, 2), (9, 2)])
def test_galois_ring_reduction_homomorphism(q, m):
    ctx = make_field(*split_prime_power(q))
    ring = make_galois_ring(ctx, m)
    assert [c % ctx.p for c in ring.modulus] == list(ctx.modulus)
    rng = random.Random(100 * q + m)
    for _ in range(300):
        a = rng.randrange(ring.size)
        b = rng.randrange(ring.size)
        assert ring.to_field(ring.mul(a, b)) == ctx.mul(ring.to_field(a),
                                                        ring.to_field(b))
        assert ring.to_field(ring.add(a, b)) == ctx.add(ring.to_field(a),
                                                        ring.to_field(b))


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 3)])
def test_galois_ring_units(q, m):
    ctx = make_field(*split_prime_power(q))
    ring = make_galois_ring(ctx, m)
    for a in ring.elements():
        unit = ring.to_field(a) != 0
        assert ring.is_unit(a) == unit
        if unit:
            assert ring.mul(a, ring.inv(a)) == 1


def test_galois_ring_lift_roundtrip():
    ctx = make_field(2, 2)
    ring = make_galois_ring(ctx, 3)
    for a in ctx.elements():
        assert ring.to_field(ring.from_field(a)) == a


def test_field_cache_returns_same_context():
    assert make_field(3, 2) is make_field(3, 2)
    assert make_field(5) is make_field(5, 1)

import random

import pytest

from conftest import field, rand_monic
from ffzeta import (DependentPair, Factorization, OperatorKind, QTooLarge,
                    ZeroConstantTerm, admissible_basis, distinct_factor_count,
                    factorize, irreducibles_up_to, split, trial_factorize)
from ffzeta.poly import SparsePoly


def dense_factors(fac):
    return [(g.to_dense(), m) for g, m in fac.factors]


def test_worked_factorizations():
    ctx3 = field(3)
    f = SparsePoly.from_dense(ctx3, [2, 0, 1])  # x^2 - 1
    fac = factorize(f)
    assert dense_factors(fac) == [([1, 1], 1), ([2, 1], 1)]
    ctx2 = field(2)
    g = SparsePoly.from_dense(ctx2, [0, 1, 0, 1])  # x (x+1)^2
    fac2 = factorize(g)
    assert dense_factors(fac2) == [([0, 1], 1), ([1, 1], 2)]
    assert str(fac2) == "(x) * (x + 1)^2"


def test_irreducible_input_returns_itself():
    ctx = field(2)
    f = SparsePoly.from_dense(ctx, [1, 1, 0, 0, 1])  # x^4 + x + 1
    for kind in OperatorKind:
        fac = factorize(f, kind)
        assert dense_factors(fac) == [([1, 1, 0, 0, 1], 1)]


def test_admissible_basis_dimension_counts_factors():
    # the fixed space of the q-power map has one basis vector per
    # distinct irreducible factor
    ctx = field(2)
    f = SparsePoly.from_dense(ctx, [1, 0, 1, 1, 1, 1])
    basis = admissible_basis(f, OperatorKind.FROBENIUS)
    assert len(basis) == len(trial_factorize(f).factors)


def test_split_produces_nontrivial_pieces():
    from ffzeta.poly import gcd_uni
    ctx = field(3)
    rng = random.Random(33)
    done = full_identity = 0
    while done < 40:
        f = rand_monic(ctx, rng, rng.randrange(3, 9), nonzero_const=True)
        basis = admissible_basis(f, OperatorKind.FROBENIUS)
        if len(basis) < 2:
            continue
        pieces = split(f, basis[0], basis[1])
        done += 1
        assert len(pieces) >= 2
        for g in pieces:
            assert 0 < g.degree() < f.degree()
            _, rem = divmod_dense(ctx, f, g)
            assert rem == []
        # when the second element is a unit in every component the
        # gcd buckets multiply back to f exactly
        if gcd_uni(f, basis[1]).degree() == 0:
            full_identity += 1
            prod = SparsePoly.one(ctx)
            for g in pieces:
                prod = prod * g
            assert prod == f
    assert full_identity >= 10


def divmod_dense(ctx, f, g):
    from ffzeta.poly import dense_divmod
    return dense_divmod(ctx, f.to_dense(), g.to_dense())


def test_split_rejects_dependent_pair():
    ctx = field(2)
    f = SparsePoly.from_dense(ctx, [1, 1, 1, 1])  # (x+1)(x^2+x+1)? no:
    # x^3+x^2+x+1 = (x+1)^3 over F_2; any two kernel vectors are dependent
    basis = admissible_basis(f, OperatorKind.FROBENIUS)
    assert len(basis) == 1
    with pytest.raises(DependentPair):
        split(f, basis[0], basis[0])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_reconstruction_random(q):
    ctx = field(q)
    rng = random.Random(q * 7)
    for _ in range(100):
        f = rand_monic(ctx, rng, rng.randrange(2, 13), nonzero_const=True)
        fac = factorize(f)
        assert fac.expand() == f
        assert sum(m * g.degree() for g, m in fac.factors) == f.degree()


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_method_agreement(q):
    ctx = field(q)
    rng = random.Random(q * 11)
    for _ in range(60):
        f = rand_monic(ctx, rng, rng.randrange(2, 11), nonzero_const=True)
        per_kind = [dense_factors(factorize(f, kind))
                    for kind in OperatorKind]
        assert per_kind[0] == per_kind[1] == per_kind[2]
        assert per_kind[0] == dense_factors(trial_factorize(f))


def test_factors_without_constant_term():
    # Frobenius and derivative methods handle f(0) = 0; psi refuses
    ctx = field(3)
    f = SparsePoly.from_dense(ctx, [0, 0, 2, 1])
    a = dense_factors(factorize(f, OperatorKind.FROBENIUS))
    b = dense_factors(factorize(f, OperatorKind.NIEDERREITER))
    assert a == b == dense_factors(trial_factorize(f))
    with pytest.raises(ZeroConstantTerm):
        factorize(f, OperatorKind.PSI_MUL)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_outputs_certified_irreducible(q):
    ctx = field(q)
    rng = random.Random(q * 13)
    sieve = None
    for _ in range(30):
        f = rand_monic(ctx, rng, rng.randrange(2, 7), nonzero_const=True)
        for g, _ in factorize(f).factors:
            assert distinct_factor_count(g) == 1
            if sieve is None:
                sieve = {tuple(h.to_dense())
                         for h in irreducibles_up_to(ctx, 6)}
            assert tuple(g.to_dense()) in sieve


def test_high_multiplicity_and_repeated_blocks():
    ctx = field(2)
    x = SparsePoly.variable(ctx)
    one = SparsePoly.one(ctx)
    quad = SparsePoly.from_dense(ctx, [1, 1, 1])
    f = (x + one) ** 5 * quad ** 3
    for kind in (OperatorKind.FROBENIUS, OperatorKind.NIEDERREITER,
                 OperatorKind.PSI_MUL):
        fac = factorize(f, kind)
        assert dense_factors(fac) == [([1, 1], 5), ([1, 1, 1], 3)]


def test_frobenius_twist_multiplicities():
    # f(x^p) style inputs make every factor multiplicity p
    ctx = field(3)
    f = SparsePoly.from_dense(ctx, [1, 0, 0, 1, 0, 0, 1, 0, 0, 1])
    fac = factorize(f)
    assert fac.expand() == f
    assert all(m % 3 == 0 for _, m in fac.factors)


def test_factorization_value_object():
    ctx = field(3)
    f = SparsePoly.from_dense(ctx, [1, 1])
    with pytest.raises(ValueError):
        Factorization(1, ((f, 0),))
    g = SparsePoly.from_dense(ctx, [1, 2])  # not monic
    with pytest.raises(ValueError):
        Factorization(1, ((g, 1),))


def test_large_field_rejected():
    ctx = field(121)
    f = SparsePoly.from_dense(ctx, [1, 0, 1])
    with pytest.raises(QTooLarge):
        factorize(f)


def test_sorted_output_order():
    ctx = field(2)
    # x^6+...: product of x+1, x, x^2+x+1, sorted by (degree, coeffs)
    x = SparsePoly.variable(ctx)
    one = SparsePoly.one(ctx)
    quad = SparsePoly.from_dense(ctx, [1, 1, 1])
    f = quad * x * (x + one)
    fac = factorize(f)
    assert dense_factors(fac) == [([0, 1], 1), ([1, 1], 1), ([1, 1, 1], 1)]

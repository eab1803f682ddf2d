import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggc.galois import gf_make_ctx
from ggc.polyring import (
    Poly,
    count_irreducibles,
    enumerate_irreducibles,
    mobius,
    poly_derivative,
    poly_eea,
    poly_eea_partial,
    poly_gcd,
    poly_inv_mod,
    poly_is_irreducible,
    squarefree_decomposition,
)
from helpers import random_poly, sieve_irreducibles

F2 = gf_make_ctx(1)


def P(F, *coeffs):
    return Poly(F, coeffs)


def test_zero_degree_is_sentinel():
    z = Poly.zero(F2)
    assert z.deg == float("-inf")
    assert z.deg < 0
    assert (z * P(F2, 1, 1)).is_zero()


def test_derivative_examples():
    assert poly_derivative(P(F2, 1, 1, 1)) == P(F2, 1)
    assert poly_derivative(P(F2, 0, 0, 0, 1)) == P(F2, 0, 0, 1)
    assert poly_derivative(P(gf_make_ctx(3), 5)).is_zero()


polys_gf8 = st.lists(st.integers(0, 7), max_size=12).map(lambda c: Poly(gf_make_ctx(3), c))


@settings(max_examples=200)
@given(polys_gf8, polys_gf8)
def test_leibniz(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@settings(max_examples=200)
@given(polys_gf8, polys_gf8.filter(lambda p: not p.is_zero()))
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


def check_eea(a, b):
    d, s, t = poly_eea(a, b)
    assert d == a * s + b * t
    assert poly_gcd(s, t).is_one()
    assert t.deg + d.deg < a.deg
    assert d.is_monic()
    return d, s, t


def test_eea_examples():
    d, s, t = check_eea(P(F2, 1, 1, 1), P(F2, 0, 1))
    assert d == P(F2, 1)
    # b | a: one division step, t is the scaled identity
    F = gf_make_ctx(4)
    b = P(F, 3, 7, 5)
    a = b * P(F, 1, 2, 9)
    d, s, t = check_eea(a, b)
    assert d == b.monic()
    assert t == Poly(F, [F.inv(b.lead)])


def test_eea_gcd_of_product(rng):
    F = gf_make_ctx(3)
    for _ in range(200):
        g = random_poly(F, rng.randint(1, 5), rng)
        f = random_poly(F, rng.randint(1, 5), rng)
        d, _, _ = check_eea(f * g, g)
        # d must be a monic multiple of g dividing f*g
        assert (d % g.monic()).is_zero() and ((f * g) % d).is_zero()
        assert d == poly_gcd(f * g, g)


def test_eea_precondition():
    with pytest.raises(ValueError):
        poly_eea(P(F2, 0, 1), P(F2, 1, 1))
    with pytest.raises(ValueError):
        poly_eea(Poly.zero(F2), Poly.zero(F2))


def test_inv_mod_examples():
    a = P(F2, 1, 1, 1)
    assert poly_inv_mod(P(F2, 1), a) == P(F2, 1)
    assert poly_inv_mod(P(F2, 0, 1), a) == P(F2, 1, 1)
    with pytest.raises(ValueError):
        poly_inv_mod(P(F2, 0, 1), P(F2, 0, 0, 1))


def test_inv_mod_random_pairs():
    rng = random.Random(7)
    checked = 0
    while checked < 1000:
        F = gf_make_ctx(rng.choice([1, 2, 4, 8]))
        a = random_poly(F, rng.randint(1, 50), rng, monic=False)
        b = random_poly(F, rng.randint(0, a.deg - 1), rng, monic=False) if a.deg > 1 else Poly.one(F)
        if not poly_gcd(a, b).is_one():
            continue
        t = poly_inv_mod(b, a)
        assert ((b * t) % a).is_one()
        assert t.deg < a.deg
        checked += 1


def test_eea_partial_trivial_cases():
    F = gf_make_ctx(4)
    a = P(F, 1, 2, 3, 4, 5, 1)
    b = P(F, 7, 1)
    assert poly_eea_partial(a, b, 3) == (b, Poly.one(F))
    c = P(F, 3, 9, 1, 0, 2)
    assert poly_eea_partial(a, c, a.deg) == (c, Poly.one(F))


@settings(max_examples=100)
@given(st.lists(st.integers(0, 15), min_size=2, max_size=14), st.lists(st.integers(0, 15), max_size=13), st.integers(0, 13))
def test_eea_partial_contract(ac, bc, dstop):
    F = gf_make_ctx(4)
    a, b = Poly(F, ac), Poly(F, bc)
    if a.is_zero() or not a.deg > b.deg:
        return
    dstop = min(dstop, a.deg)
    omega, lam = poly_eea_partial(a, b, dstop)
    assert omega.deg < dstop or (omega == b and dstop > b.deg)
    assert ((lam * b) % a) == omega % a
    assert lam.deg <= a.deg - dstop


def test_irreducible_examples(gf4):
    assert poly_is_irreducible(P(F2, 1, 1, 1))
    assert not poly_is_irreducible(P(F2, 1, 0, 1))
    # x^2 + x + alpha over GF(4): irreducible iff it has no root
    f = P(gf4, 2, 1, 1)
    has_root = any(f(a) == 0 for a in range(4))
    assert poly_is_irreducible(f) == (not has_root)
    with pytest.raises(ValueError):
        poly_is_irreducible(P(gf4, 3))


def test_count_examples():
    assert count_irreducibles(1, 2) == 2
    assert count_irreducibles(2, 2) == 1
    assert count_irreducibles(3, 2) == 2
    assert count_irreducibles(2, 4) == 6
    assert count_irreducibles(2, gf_make_ctx(2)) == len(sieve_irreducibles(gf_make_ctx(2), 2)) == 6


def test_count_q128_quadratics():
    F = gf_make_ctx(7)
    # a monic quadratic is reducible iff it is (x+a)(x+b)
    reducible = {(F.mul(a, b), a ^ b) for a in range(128) for b in range(128)}
    assert 128 * 128 - len(reducible) == 8128
    assert count_irreducibles(2, 128) == 8128
    assert 128 + count_irreducibles(2, 128) == 8256


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_enumerate_examples():
    assert list(enumerate_irreducibles(1, F2)) == [P(F2, 0, 1), P(F2, 1, 1)]
    assert list(enumerate_irreducibles(2, F2)) == [P(F2, 1, 1, 1)]
    assert len(list(enumerate_irreducibles(2, gf_make_ctx(3), limit=5))) == 5


@pytest.mark.parametrize("m,t", [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_enumerate_matches_sieve(m, t):
    F = gf_make_ctx(m)
    got = [f.coeffs for f in enumerate_irreducibles(t, F)]
    assert got == sieve_irreducibles(F, t)
    assert len(got) == count_irreducibles(t, F)


@pytest.mark.parametrize("q", [2, 4])
def test_degree_sum_identity(q):
    for t in range(1, 7):
        assert sum(d * count_irreducibles(d, q) for d in range(1, t + 1) if t % d == 0) == q**t


def test_text_encoding(gf4):
    f = Poly.from_hex(gf4, "3,1,1")
    assert f == P(gf4, 3, 1, 1)
    assert f.to_hex() == "3,1,1"


def test_squarefree_decomposition(rng):
    F = gf_make_ctx(2)
    irr = list(enumerate_irreducibles(1, F)) + list(enumerate_irreducibles(2, F))
    for _ in range(100):
        factors = rng.sample(irr, rng.randint(1, 4))
        exps = [rng.randint(1, 5) for _ in factors]
        f = Poly.one(F)
        for g, e in zip(factors, exps):
            f = f * g**e
        dec = squarefree_decomposition(f)
        expected = {}
        for g, e in zip(factors, exps):
            expected[e] = expected.get(e, Poly.one(F)) * g
        assert {e: s for s, e in dec} == expected

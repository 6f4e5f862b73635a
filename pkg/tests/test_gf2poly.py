from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hre.gf2poly import (
    Gf2Poly,
    Monomial,
    TermLimitError,
    add,
    graded_component,
    invert_series,
    max_terms,
    mul_truncated,
    pow_truncated,
)

from conftest import random_sparse_poly, sparse_polys, weighted_degree


def naive_mul(p: Gf2Poly, q: Gf2Poly, bound: int) -> Gf2Poly:
    """Oracle: schoolbook product over exponent tuples with explicit parity counting."""
    counts = Counter()
    for a in p.exponent_vectors():
        for b in q.exponent_vectors():
            c = tuple(x + y for x, y in zip(a, b))
            if weighted_degree(c) <= bound:
                counts[c] += 1
    return Gf2Poly(p.num_generators, [c for c, v in counts.items() if v % 2])


def horner_inverse(p: Gf2Poly, bound: int) -> Gf2Poly:
    """Oracle: ``sum_{n <= bound} v**n`` with ``v = p + 1``, by Horner's rule."""
    one = Gf2Poly.one(p.num_generators)
    v = p + one
    acc = one
    for _ in range(bound):
        acc = one + naive_mul(v, acc, bound)
    return acc


def complement_inverse(p: Gf2Poly, bound: int) -> Gf2Poly:
    """Oracle: ``p**-1 == p**(2**T - 1)`` once ``2**T > bound``."""
    t = (bound + 1).bit_length()
    return pow_truncated(p, (1 << t) - 1, bound)


# rendering and parsing


def test_canonical_rendering():
    p = Gf2Poly(3, [(0, 0, 1), (1, 0, 0), (0, 0, 0), (2, 0, 1), (0, 1, 0), (3, 0, 0)])
    assert str(p) == "1 + w1 + w2 + w1^3 + w3 + w1^2*w3"
    assert str(Gf2Poly.zero(2)) == "0"
    assert str(Gf2Poly.one(2)) == "1"


@given(sparse_polys())
def test_parse_round_trip(p):
    assert Gf2Poly.parse(str(p), p.num_generators) == p


def test_parse_rejects_bad_generator():
    with pytest.raises(ValueError):
        Gf2Poly.parse("w4", 3)
    with pytest.raises(ValueError):
        Gf2Poly.parse("x1", 3)


def test_repeated_terms_cancel():
    assert Gf2Poly(2, [(1, 0), (1, 0)]) == Gf2Poly.zero(2)
    assert Gf2Poly.parse("w1 + w1 + w2", 2) == Gf2Poly.generator(2, 2)


def test_monomial_degree_and_membership():
    m = Monomial((2, 0, 1))
    assert m.degree == 5
    assert str(m) == "w1^2*w3"
    p = Gf2Poly(3, [m])
    assert m in p and (2, 0, 1) in p and (0, 0, 0) not in p


def test_exponent_overflow_guard():
    with pytest.raises(OverflowError):
        mul_truncated(Gf2Poly.one(1), Gf2Poly.one(1), 1 << 16)
    with pytest.raises(OverflowError):
        Gf2Poly(1, [(1 << 16,)])
    with pytest.raises(ValueError):
        Gf2Poly(1, [(-1,)])


def test_ring_mismatch():
    with pytest.raises(ValueError):
        add(Gf2Poly.one(2), Gf2Poly.one(3))


# ring axioms


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_mul_matches_naive_oracle(data):
    n = data.draw(st.integers(1, 6))
    p = data.draw(sparse_polys(n=n))
    q = data.draw(sparse_polys(n=n))
    bound = data.draw(st.integers(0, 20))
    assert mul_truncated(p, q, bound) == naive_mul(p, q, bound)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_commutative_associative_distributive(data):
    n = data.draw(st.integers(1, 6))
    p, q, r = (data.draw(sparse_polys(n=n, max_terms=6)) for _ in range(3))
    bound = data.draw(st.integers(0, 20))
    assert mul_truncated(p, q, bound) == mul_truncated(q, p, bound)
    assert mul_truncated(mul_truncated(p, q, bound), r, bound) == mul_truncated(
        p, mul_truncated(q, r, bound), bound
    )
    assert mul_truncated(p, q + r, bound) == mul_truncated(p, q, bound) + mul_truncated(p, r, bound)
    assert p + p == Gf2Poly.zero(n)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_frobenius_identity(data):
    n = data.draw(st.integers(1, 6))
    p = data.draw(sparse_polys(n=n))
    bound = data.draw(st.integers(0, 40))
    assert mul_truncated(p, p, bound) == p.frobenius(bound)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_pow_two_power_three_ways(data):
    n = data.draw(st.integers(1, 4))
    p = data.draw(sparse_polys(n=n, max_degree=8, max_terms=5))
    t = data.draw(st.integers(0, 3))
    bound = 20
    squared = p.truncate(bound)
    for _ in range(t):
        squared = squared.frobenius(bound)
    chain = Gf2Poly.one(n)
    for _ in range(1 << t):
        chain = mul_truncated(chain, p, bound)
    assert pow_truncated(p, 1 << t, bound) == squared == chain


def test_truncation_and_components():
    p = Gf2Poly.total_sum(3)
    sq = mul_truncated(p, p, 100)
    assert sq == p.frobenius(100)
    assert str(sq) == "1 + w1^2 + w2^2 + w3^2"
    assert str(sq.truncate(4)) == "1 + w1^2 + w2^2"
    assert str(graded_component(sq, 4)) == "w2^2"
    assert sq.component(6) == Gf2Poly.monomial(3, 3, 2)


# inversion


def test_invert_small_example():
    assert str(invert_series(Gf2Poly.total_sum(3), 3)) == "1 + w1 + w1^2 + w2 + w1^3 + w3"


def test_invert_requires_unit():
    with pytest.raises(ValueError):
        invert_series(Gf2Poly.generator(2, 1), 5)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_invert_round_trip_property(data):
    n = data.draw(st.integers(1, 5))
    p = data.draw(sparse_polys(n=n, max_degree=12, max_terms=5, unit=True))
    bound = data.draw(st.integers(0, 40))
    inv = invert_series(p, bound)
    assert mul_truncated(p, inv, bound).is_one()
    assert inv == complement_inverse(p, bound)


def test_invert_matches_horner_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        bound = rng.randint(0, 14)
        p = random_sparse_poly(rng, n, min(bound, 8) or 1, rng.randint(1, 5), unit=True)
        assert invert_series(p, bound) == horner_inverse(p, bound)


# resource guard


def test_term_limit_env(monkeypatch):
    monkeypatch.setenv("HRE_MAX_TERMS", "10")
    assert max_terms() == 10
    p = Gf2Poly.total_sum(6)
    with pytest.raises(TermLimitError):
        pow_truncated(p, 7, 20)
    monkeypatch.delenv("HRE_MAX_TERMS")
    assert max_terms() == 1 << 20
    monkeypatch.setenv("HRE_MAX_TERMS", "0")
    with pytest.raises(ValueError):
        max_terms()

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from hre.gf2poly import Gf2Poly


def pascal_rows_mod2(limit: int):
    """Row ``m`` of Pascal's triangle mod 2 as a bitmask (bit ``n`` = C(m, n) mod 2)."""
    row = 1
    for m in range(limit + 1):
        yield m, row
        row ^= row << 1


def weighted_degree(exps) -> int:
    return sum((i + 1) * e for i, e in enumerate(exps))


def monomials_up_to(n: int, max_degree: int) -> list[tuple[int, ...]]:
    out = []

    def rec(i, remaining, acc):
        if i == n:
            out.append(tuple(acc))
            return
        for e in range(remaining // (i + 1) + 1):
            acc.append(e)
            rec(i + 1, remaining - (i + 1) * e, acc)
            acc.pop()

    rec(0, max_degree, [])
    return out


@st.composite
def sparse_polys(draw, n=None, max_degree=20, max_terms=8, unit=None):
    n = draw(st.integers(1, 6)) if n is None else n
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: weighted_degree(e) <= max_degree
    )
    terms = draw(st.lists(exps, max_size=max_terms))
    p = Gf2Poly(n, [tuple(t) for t in terms])
    if unit is not None and p.has_unit_term() != unit:
        p = p + Gf2Poly.one(n)
    return p


def random_sparse_poly(rng: random.Random, n: int, max_degree: int, terms: int, unit: bool) -> Gf2Poly:
    pool = monomials_up_to(n, max_degree)
    chosen = [m for m in rng.sample(pool, min(terms, len(pool))) if any(m)]
    p = Gf2Poly(n, chosen)
    return p + Gf2Poly.one(n) if unit else p


@pytest.fixture
def rng():
    return random.Random(20240601)

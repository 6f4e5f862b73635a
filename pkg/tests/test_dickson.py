from __future__ import annotations

from itertools import product

import pytest

from hre.dickson import (
    DicksonAlgebra,
    additive_polynomial,
    dickson_invariants,
    gl_matrices,
    invariants_below_degree,
    is_gl_invariant,
    nonzero_linear_forms_product,
    render,
    substitute,
    verify_gl_invariance,
)


def poly(*monos):
    return frozenset(monos)


def test_m2_invariants_explicit():
    alg = dickson_invariants(2)
    assert alg.q(1) == poly((2, 0), (1, 1), (0, 2))
    assert alg.q(0) == poly((2, 1), (1, 2))
    assert render(alg.q(1)) == "x1^2 + x1*x2 + x2^2"
    assert render(alg.q(0)) == "x1^2*x2 + x1*x2^2"


def test_m1_is_the_square_class():
    alg = dickson_invariants(1)
    assert alg.q(0) == poly((1,))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_degrees(m):
    alg = dickson_invariants(m)
    assert alg.degrees() == tuple(2**m - 2**s for s in range(m - 1, -1, -1))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_top_invariant_is_product_of_nonzero_linear_forms(m):
    assert dickson_invariants(m).q(0) == nonzero_linear_forms_product(m)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_additive_polynomial_has_only_two_power_terms(m):
    coeffs = additive_polynomial(m)
    assert len(coeffs) == 2**m + 1
    for i, c in enumerate(coeffs):
        if c:
            assert i & (i - 1) == 0


@pytest.mark.parametrize("m,count", [(1, 1), (2, 6), (3, 168)])
def test_gl_group_orders(m, count):
    assert sum(1 for _ in gl_matrices(m)) == count


@pytest.mark.parametrize("m", [1, 2, 3])
def test_gl_invariance_exhaustive(m):
    assert verify_gl_invariance(dickson_invariants(m))


def test_non_invariant_detected():
    assert not is_gl_invariant(poly((1, 0)), 2)
    swap = ((0, 1), (1, 0))
    assert substitute(poly((2, 1)), swap) == poly((1, 2))


def test_m4_needs_long_run():
    alg = dickson_invariants(4)
    with pytest.raises(ValueError):
        verify_gl_invariance(alg)


def test_no_invariant_below_degree_two_for_m2():
    assert invariants_below_degree(2, 2) == []
    found = invariants_below_degree(2, 3)
    assert dickson_invariants(2).q(1) in found


def test_algebra_validation():
    with pytest.raises(ValueError):
        DicksonAlgebra(2, (poly((1, 0)), poly((2, 1), (1, 2))))
    with pytest.raises(ValueError):
        dickson_invariants(5)
    with pytest.raises(ValueError):
        dickson_invariants(2).q(2)


def test_to_dict():
    d = dickson_invariants(2).to_dict()
    assert d["m"] == 2
    assert [(i["s"], i["degree"]) for i in d["invariants"]] == [(1, 2), (0, 3)]


def test_linear_forms_product_vanishes_nowhere_on_nonzero_vectors_mod_forms():
    # q_{m,0}(v) == 0 for every v in GF(2)^m, since some linear form vanishes at v
    for m in (2, 3):
        q = nonzero_linear_forms_product(m)
        for v in product((0, 1), repeat=m):
            value = sum(all(x or not e for x, e in zip(v, mono)) for mono in q) % 2
            assert value == 0

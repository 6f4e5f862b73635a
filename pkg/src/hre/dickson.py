"""Dickson invariants of ``GF(2)[x_1, ..., x_m]`` for ``m <= 4``.

``prod_{v in GF(2)^m} (X + v.x)`` is an additive polynomial in ``X``; its
coefficient of ``X^(2^s)`` is the Dickson invariant ``q_{m,s}`` of degree
``2^m - 2^s``.  Polynomials here are dense-enough frozensets of exponent
tuples (every variable has degree 1), which is plenty at this size.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from itertools import combinations, product

__all__ = [
    "Poly",
    "DicksonAlgebra",
    "dickson_invariants",
    "verify_gl_invariance",
    "gl_matrices",
    "is_gl_invariant",
    "substitute",
    "render",
    "nonzero_linear_forms_product",
    "invariants_below_degree",
]

Poly = frozenset  # frozenset[tuple[int, ...]]; coefficient 1 for each member

MAX_M = 4
EXHAUSTIVE_MAX_M = 3


def _pmul(a: Poly, b: Poly) -> Poly:
    acc: set = set()
    for x in a:
        for y in b:
            acc ^= {tuple(i + j for i, j in zip(x, y))}
    return frozenset(acc)


def _padd(a: Poly, b: Poly) -> Poly:
    return a ^ b


def _one(m: int) -> Poly:
    return frozenset({(0,) * m})


def _linear_form(v: tuple[int, ...]) -> Poly:
    m = len(v)
    return frozenset(tuple(int(i == t) for i in range(m)) for t, bit in enumerate(v) if bit)


def degree(p: Poly) -> int:
    degs = {sum(e) for e in p}
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop()


def render(p: Poly, var: str = "x") -> str:
    """Canonical text: degree, then lexicographically descending exponents."""
    if not p:
        return "0"
    terms = sorted(p, key=lambda e: (sum(e), tuple(-x for x in e)))
    out = []
    for e in terms:
        factors = [
            f"{var}{i + 1}" if a == 1 else f"{var}{i + 1}^{a}" for i, a in enumerate(e) if a
        ]
        out.append("*".join(factors) or "1")
    return " + ".join(out)


@dataclass(frozen=True)
class DicksonAlgebra:
    m: int
    invariants: tuple[Poly, ...]  # q_{m,m-1}, ..., q_{m,0}

    def __post_init__(self) -> None:
        if len(self.invariants) != self.m:
            raise ValueError("need exactly m invariants")
        for s, q in zip(range(self.m - 1, -1, -1), self.invariants):
            if degree(q) != (1 << self.m) - (1 << s):
                raise ValueError(f"q_{{{self.m},{s}}} has the wrong degree")

    def q(self, s: int) -> Poly:
        """``q_{m,s}``."""
        if not 0 <= s < self.m:
            raise ValueError(f"s must lie in 0..{self.m - 1}")
        return self.invariants[self.m - 1 - s]

    def degrees(self) -> tuple[int, ...]:
        return tuple(degree(q) for q in self.invariants)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "invariants": [
                {"s": s, "degree": (1 << self.m) - (1 << s), "polynomial": render(self.q(s))}
                for s in range(self.m - 1, -1, -1)
            ],
        }


def additive_polynomial(m: int) -> list[Poly]:
    """Coefficients (index = power of ``X``) of ``prod_v (X + v.x)``."""
    coeffs: list[Poly] = [_one(m)]
    for v in product((0, 1), repeat=m):
        lin = _linear_form(v)
        new = [frozenset()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = _padd(new[i + 1], c)
            new[i] = _padd(new[i], _pmul(lin, c))
        coeffs = new
    return coeffs


def dickson_invariants(m: int) -> DicksonAlgebra:
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must lie in 1..{MAX_M}")
    coeffs = additive_polynomial(m)
    powers = {1 << s for s in range(m + 1)}
    for i, c in enumerate(coeffs):
        if i not in powers and c:
            raise AssertionError(f"additive polynomial has a term at X^{i}")
    if coeffs[1 << m] != _one(m):
        raise AssertionError("additive polynomial is not monic")
    return DicksonAlgebra(m, tuple(coeffs[1 << s] for s in range(m - 1, -1, -1)))


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if pivot:
            rank += 1
            low = pivot & -pivot
            rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def gl_matrices(m: int):
    """Yield every invertible ``m x m`` matrix over GF(2) as a tuple of row tuples."""
    for bits in product((0, 1), repeat=m * m):
        rows = tuple(tuple(bits[i * m:(i + 1) * m]) for i in range(m))
        masks = [sum(b << j for j, b in enumerate(r)) for r in rows]
        if _rank_gf2(masks) == m:
            yield rows


def substitute(p: Poly, matrix) -> Poly:
    """Image of ``p`` under ``x_i -> sum_j A[i][j] x_j``."""
    m = len(matrix)
    images = [_linear_form(row) for row in matrix]
    cache: dict[tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        if (i, e) not in cache:
            cache[(i, e)] = _one(m) if e == 0 else _pmul(power(i, e - 1), images[i])
        return cache[(i, e)]

    acc: set = set()
    for mono in p:
        acc ^= set(_fold(_pmul, (power(i, e) for i, e in enumerate(mono)), _one(m)))
    return frozenset(acc)


def is_gl_invariant(p: Poly, m: int) -> bool:
    return all(substitute(p, a) == p for a in gl_matrices(m))


def verify_gl_invariance(alg: DicksonAlgebra, long_run: bool = False) -> bool:
    """Check every ``q_{m,s}`` against every invertible matrix.

    ``m = 4`` means 20160 matrices and is refused unless ``long_run`` is set.
    """
    if alg.m > EXHAUSTIVE_MAX_M and not long_run:
        raise ValueError("exhaustive GL check for m = 4 requires long_run=True")
    return all(is_gl_invariant(q, alg.m) for q in alg.invariants)


def nonzero_linear_forms_product(m: int) -> Poly:
    forms = (_linear_form(v) for v in product((0, 1), repeat=m) if any(v))
    return _fold(_pmul, forms, _one(m))


def _monomials_of_degree(m: int, n: int) -> list[tuple[int, ...]]:
    return [e for e in product(range(n + 1), repeat=m) if sum(e) == n]


def invariants_below_degree(m: int, bound: int) -> list[Poly]:
    """Every nonzero GL-invariant homogeneous polynomial of degree ``1..bound-1``.

    Brute force over all subsets of the monomial basis; only sensible for tiny
    ``m`` and ``bound``.
    """
    found = []
    for n in range(1, bound):
        basis = _monomials_of_degree(m, n)
        for size in range(1, len(basis) + 1):
            for subset in combinations(basis, size):
                p = frozenset(subset)
                if is_gl_invariant(p, m):
                    found.append(p)
    return found

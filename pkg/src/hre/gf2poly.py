"""Sparse polynomials over GF(2) in generators ``w_1, ..., w_n`` with ``deg w_i = i``.

Coefficients are implicit: a polynomial is the set of monomials present, so
addition is symmetric difference.  Internally a monomial is packed into one
int with a 16-bit field per generator, which turns monomial multiplication
into integer addition.  Products are truncated eagerly by weighted degree.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Monomial",
    "Gf2Poly",
    "TermLimitError",
    "add",
    "mul_truncated",
    "pow_truncated",
    "invert_series",
    "graded_component",
    "max_terms",
]

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
EXPONENT_LIMIT = 1 << FIELD_BITS
DEFAULT_MAX_TERMS = 1 << 20


class TermLimitError(RuntimeError):
    """A computation exceeded the polynomial term-count guard."""


def max_terms() -> int:
    """Current term-count guard; ``HRE_MAX_TERMS`` overrides the default ``2**20``."""
    raw = os.environ.get("HRE_MAX_TERMS")
    if raw is None or raw == "":
        return DEFAULT_MAX_TERMS
    value = int(raw)
    if value < 1:
        raise ValueError("HRE_MAX_TERMS must be positive")
    return value


def _check_degree_bound(max_degree: int) -> None:
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    # Non-unit monomials have every exponent <= their degree.
    if max_degree >= EXPONENT_LIMIT:
        raise OverflowError(f"truncation degree must be < {EXPONENT_LIMIT}")


def _pack(exponents: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exponents):
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e >= EXPONENT_LIMIT:
            raise OverflowError(f"exponent {e} exceeds {EXPONENT_LIMIT - 1}")
        key |= e << (FIELD_BITS * i)
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (FIELD_BITS * i)) & FIELD_MASK for i in range(n))


def _key_degree(key: int) -> int:
    deg = 0
    weight = 1
    while key:
        deg += weight * (key & FIELD_MASK)
        key >>= FIELD_BITS
        weight += 1
    return deg


@dataclass(frozen=True, order=False)
class Monomial:
    """Exponent vector; ``exponents[i]`` is the power of ``w_{i+1}``."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def power(cls, n: int, i: int, e: int) -> "Monomial":
        """``w_i ** e`` in ``n`` generators (``i`` is 1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = e
        return cls(tuple(exps))

    @property
    def num_generators(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum((i + 1) * e for i, e in enumerate(self.exponents))

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return _render_exponents(self.exponents)


def _render_exponents(exps: tuple[int, ...], var: str = "w") -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"{var}{i + 1}")
        elif e > 1:
            factors.append(f"{var}{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


def _sort_key(exps: tuple[int, ...]) -> tuple:
    # weighted degree, then lexicographically descending exponents
    return (sum((i + 1) * e for i, e in enumerate(exps)), tuple(-e for e in exps))


MonomialLike = Union[Monomial, Iterable[int]]

_TERM_RE = re.compile(r"^w(\d+)(?:\^(\d+))?$")


class Gf2Poly:
    """Immutable sparse polynomial over GF(2).

    Build one from exponent vectors or :class:`Monomial` objects::

        >>> p = Gf2Poly(3, [(0, 0, 0), (1, 0, 0)])
        >>> str(p)
        '1 + w1'
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, num_generators: int, terms: Iterable[MonomialLike] = ()):
        if num_generators < 1:
            raise ValueError("num_generators must be positive")
        acc: dict[int, int] = {}
        for t in terms:
            exps = t.exponents if isinstance(t, Monomial) else tuple(t)
            if len(exps) != num_generators:
                raise ValueError(
                    f"monomial has {len(exps)} exponents, expected {num_generators}"
                )
            key = _pack(exps)
            if key in acc:
                del acc[key]
            else:
                acc[key] = sum((i + 1) * e for i, e in enumerate(exps))
        self._n = num_generators
        self._terms = acc
        self._hash: int | None = None

    @classmethod
    def _raw(cls, n: int, terms: dict[int, int]) -> "Gf2Poly":
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, n: int) -> "Gf2Poly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "Gf2Poly":
        return cls._raw(n, {0: 0})

    @classmethod
    def generator(cls, n: int, i: int) -> "Gf2Poly":
        return cls(n, [Monomial.power(n, i, 1)])

    @classmethod
    def monomial(cls, n: int, i: int, e: int) -> "Gf2Poly":
        """The single monomial ``w_i ** e``."""
        return cls(n, [Monomial.power(n, i, e)])

    @classmethod
    def total_sum(cls, n: int) -> "Gf2Poly":
        """``1 + w_1 + ... + w_n``."""
        return cls(n, [Monomial.unit(n)] + [Monomial.power(n, i, 1) for i in range(1, n + 1)])

    @classmethod
    def parse(cls, text: str, n: int) -> "Gf2Poly":
        """Inverse of the canonical rendering (``"1 + w1^2*w3"``)."""
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        terms = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            exps = [0] * n
            if chunk != "1":
                for factor in chunk.split("*"):
                    m = _TERM_RE.match(factor.strip())
                    if m is None:
                        raise ValueError(f"cannot parse factor {factor!r}")
                    i = int(m.group(1))
                    if not 1 <= i <= n:
                        raise ValueError(f"generator w{i} out of range for n={n}")
                    exps[i - 1] += int(m.group(2) or 1)
            terms.append(tuple(exps))
        return cls(n, terms)

    # basic protocol

    @property
    def num_generators(self) -> int:
        return self._n

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        for exps in self.exponent_vectors():
            yield Monomial(exps)

    def __contains__(self, mono: object) -> bool:
        if isinstance(mono, Monomial):
            exps = mono.exponents
        else:
            exps = tuple(mono)  # type: ignore[arg-type]
        return len(exps) == self._n and _pack(exps) in self._terms

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        """Exponent vectors in canonical order."""
        vecs = [_unpack(k, self._n) for k in self._terms]
        vecs.sort(key=_sort_key)
        return vecs

    def degrees(self) -> set[int]:
        return set(self._terms.values())

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms.values())

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms.values())

    def has_unit_term(self) -> bool:
        return 0 in self._terms

    def is_one(self) -> bool:
        return len(self._terms) == 1 and 0 in self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._n == other._n and self._terms.keys() == other._terms.keys()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms)))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_exponents(e) for e in self.exponent_vectors())

    def __repr__(self) -> str:
        return f"Gf2Poly({self._n}, {str(self)!r})"

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return add(self, other)

    __sub__ = __add__

    def truncate(self, max_degree: int) -> "Gf2Poly":
        return Gf2Poly._raw(self._n, {k: d for k, d in self._terms.items() if d <= max_degree})

    def component(self, degree: int) -> "Gf2Poly":
        return graded_component(self, degree)

    def filter(self, keep) -> "Gf2Poly":
        """Sub-polynomial of the monomials for which ``keep(exponents)`` is true."""
        return Gf2Poly._raw(
            self._n,
            {k: d for k, d in self._terms.items() if keep(_unpack(k, self._n))},
        )

    def frobenius(self, max_degree: int) -> "Gf2Poly":
        """Square via ``(sum m)^2 = sum m^2``, truncated."""
        _check_degree_bound(max_degree)
        return Gf2Poly._raw(
            self._n, {2 * k: 2 * d for k, d in self._terms.items() if 2 * d <= max_degree}
        )

    def to_dict(self) -> Mapping[tuple[int, ...], int]:
        return {_unpack(k, self._n): d for k, d in self._terms.items()}


def _same_ring(p: Gf2Poly, q: Gf2Poly) -> None:
    if p.num_generators != q.num_generators:
        raise ValueError(
            f"generator-count mismatch: {p.num_generators} vs {q.num_generators}"
        )


def add(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    _same_ring(p, q)
    acc = dict(p._terms)
    for k, d in q._terms.items():
        if k in acc:
            del acc[k]
        else:
            acc[k] = d
    return Gf2Poly._raw(p._n, acc)


def mul_truncated(p: Gf2Poly, q: Gf2Poly, max_degree: int) -> Gf2Poly:
    """``p * q`` with every monomial of weighted degree > ``max_degree`` dropped."""
    _same_ring(p, q)
    _check_degree_bound(max_degree)
    if len(p) > len(q):
        p, q = q, p
    limit = max_terms()
    right = sorted(q._terms.items(), key=lambda kv: kv[1])
    acc: dict[int, int] = {}
    for a, da in p._terms.items():
        room = max_degree - da
        if room < 0:
            continue
        for b, db in right:
            if db > room:
                break
            key = a + b
            if acc.pop(key, None) is None:
                acc[key] = da + db
        if len(acc) > limit:
            raise TermLimitError(
                f"product exceeds {limit} terms (set HRE_MAX_TERMS to raise the guard)"
            )
    return Gf2Poly._raw(p._n, acc)


def pow_truncated(p: Gf2Poly, e: int, max_degree: int) -> Gf2Poly:
    """``p ** e`` by binary exponentiation through :func:`mul_truncated`."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    _check_degree_bound(max_degree)
    result = Gf2Poly.one(p.num_generators)
    base = p.truncate(max_degree)
    while e:
        if e & 1:
            result = mul_truncated(result, base, max_degree)
        e >>= 1
        if e:
            base = mul_truncated(base, base, max_degree)
    return result


def invert_series(p: Gf2Poly, max_degree: int) -> Gf2Poly:
    """Truncated inverse of a power series with constant term 1.

    Evaluates the geometric series ``sum_{n<=D} v**n`` with ``v = p + 1``.
    Over GF(2), ``sum_{n<2**T} v**n = prod_{i<T} (1 + v**(2**i))`` and each
    ``v**(2**i)`` is a termwise Frobenius power, so ``log2 D`` products suffice.
    """
    _check_degree_bound(max_degree)
    if not p.has_unit_term():
        raise ValueError("series without constant term 1 is not invertible")
    one = Gf2Poly.one(p.num_generators)
    v = add(p, one).truncate(max_degree)
    result = one
    while v:
        result = mul_truncated(result, add(one, v), max_degree)
        v = v.frobenius(max_degree)
    return result


def graded_component(p: Gf2Poly, degree: int) -> Gf2Poly:
    return Gf2Poly._raw(p._n, {k: d for k, d in p._terms.items() if d == degree})

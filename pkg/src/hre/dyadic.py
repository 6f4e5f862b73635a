"""Dyadic digit counts, the gamma functions and mod-2 binomial tests.

Everything here is exact integer arithmetic; ``floor(log2 n)`` is always
taken from ``int.bit_length`` so nothing misrounds at powers of two.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DyadicProfile",
    "dyadic_profile",
    "alpha",
    "gamma",
    "gamma2",
    "binom_mod2",
    "multinom_mod2",
    "is_power_of_two",
]


def _check_int(name: str, value: int, minimum: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass(frozen=True)
class DyadicProfile:
    """Binary expansion ``n = sum(2**r for r in powers)``."""

    n: int
    alpha: int
    powers: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.alpha != len(self.powers):
            raise ValueError("alpha must equal the number of powers")
        if sum(1 << r for r in self.powers) != self.n:
            raise ValueError("powers do not sum to n")
        if any(a >= b for a, b in zip(self.powers, self.powers[1:])):
            raise ValueError("powers must be strictly ascending")

    @property
    def parts(self) -> tuple[int, ...]:
        """The summands ``2**r``, ascending."""
        return tuple(1 << r for r in self.powers)


def dyadic_profile(n: int) -> DyadicProfile:
    _check_int("n", n, 1)
    powers = tuple(r for r in range(n.bit_length()) if n >> r & 1)
    return DyadicProfile(n=n, alpha=len(powers), powers=powers)


def alpha(k: int) -> int:
    """Number of ones in the binary expansion of ``k`` (``k >= 1``)."""
    _check_int("k", k, 1)
    return bin(k).count("1")


def gamma(d: int) -> int:
    """``floor(log2 d) + 1``: the unique ``t`` with ``2**(t-1) <= d < 2**t``."""
    _check_int("d", d, 1)
    return d.bit_length()


def gamma2(d: int, l: int) -> int:
    """Smallest ``t`` with ``2**t > (d-1)*(l-1)``."""
    _check_int("d", d, 2)
    _check_int("l", l, 2)
    return ((d - 1) * (l - 1)).bit_length()


def binom_mod2(m: int, n: int) -> int:
    """``C(m, n) mod 2`` by Lucas: odd iff the bits of ``n`` are a subset of those of ``m``."""
    _check_int("m", m, 0)
    _check_int("n", n, 0)
    return int(n & ~m == 0)


def multinom_mod2(parts: Iterable[int]) -> int:
    """Multinomial coefficient ``C(sum(parts); parts) mod 2``.

    Odd iff adding the parts in binary produces no carry, i.e. the parts
    have pairwise disjoint bit sets.
    """
    seen = 0
    for p in parts:
        _check_int("part", p, 0)
        if seen & p:
            return 0
        seen |= p
    return 1


def nested_binomials(parts: Sequence[int]) -> list[tuple[int, int]]:
    """The binomials ``C(p_1+...+p_i, p_i)`` whose product is the multinomial."""
    out = []
    total = 0
    for p in parts:
        total += p
        out.append((total, p))
    return out

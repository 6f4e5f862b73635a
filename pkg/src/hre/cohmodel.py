"""Vanishing-relation model for the mod-2 cohomology of unordered configurations.

For ``k = 2**m`` the ring is generated (for our purposes) by the
Stiefel-Whitney classes ``w_1, ..., w_{k-1}`` of the permutation bundle.  A
monomial ``w_1^{j_1} ... w_{k-1}^{j_{k-1}}`` of weighted degree ``D`` is
known to vanish when

* R1: ``D > (d-1)(k-1)`` (cohomology is zero above the top degree);
* R2: ``j_{k-1} = 0`` and ``D >= (d-1)(k-1)``;
* R3: ``1 <= j_{k-1} <= d-2`` and ``D >= (d-1)(k-1)``.

The model is a sound filter, not a presentation: a monomial that survives
``reduce`` is only a *formal* survivor.  Nonvanishing is certified solely by
:func:`detect_pure_power`, which multiplies into the top degree where the
single class ``w_{k-1}^{d-1}`` spans.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dyadic import is_power_of_two
from .gf2poly import Gf2Poly, Monomial, mul_truncated

__all__ = ["QuotientModel", "vanishes", "reduce", "detect_pure_power"]


@dataclass(frozen=True)
class QuotientModel:
    d: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"model needs d >= 2, got {self.d}")
        if self.k < 2 or not is_power_of_two(self.k):
            raise ValueError(f"model needs k a power of 2 with k >= 2, got {self.k}")

    @classmethod
    def projective(cls, d: int) -> "QuotientModel":
        """The ``k = 2`` model, checked against ``GF(2)[w_1]/(w_1^d)``."""
        model = cls(d, 2)
        for e in range(2 * d + 2):
            if model.vanishes(Monomial((e,))) != (e >= d):
                raise AssertionError(f"k=2 model disagrees with RP^{d - 1} at w1^{e}")
        return model

    @property
    def num_generators(self) -> int:
        return self.k - 1

    @property
    def top_degree(self) -> int:
        return (self.d - 1) * (self.k - 1)

    def top_class(self) -> Gf2Poly:
        """``w_{k-1}^{d-1}``, the generator of the top-degree group."""
        return Gf2Poly.monomial(self.num_generators, self.k - 1, self.d - 1)

    def pure_power(self, j: int) -> Gf2Poly:
        return Gf2Poly.monomial(self.num_generators, self.k - 1, j)

    def vanishes(self, mono: Monomial) -> bool:
        return vanishes(mono, self)

    def reduce(self, p: Gf2Poly) -> Gf2Poly:
        return reduce(p, self)

    def detect_pure_power(self, p: Gf2Poly, j: int) -> bool:
        return detect_pure_power(p, j, self)


def _vanishes_exps(exps: tuple[int, ...], model: QuotientModel) -> bool:
    top = model.top_degree
    deg = sum((i + 1) * e for i, e in enumerate(exps))
    if deg > top:
        return True
    if deg < top:
        return False
    last = exps[-1]
    if last == 0:
        return any(exps)  # the unit only reaches here if top == 0
    return 1 <= last <= model.d - 2


def vanishes(mono: Monomial, model: QuotientModel) -> bool:
    """True iff ``mono`` lies in the relation set R1/R2/R3 of ``model``."""
    if mono.num_generators != model.num_generators:
        raise ValueError(
            f"monomial has {mono.num_generators} generators, model needs {model.num_generators}"
        )
    return _vanishes_exps(mono.exponents, model)


def reduce(p: Gf2Poly, model: QuotientModel) -> Gf2Poly:
    """Delete every vanishing monomial of ``p``."""
    if p.num_generators != model.num_generators:
        raise ValueError(
            f"polynomial has {p.num_generators} generators, model needs {model.num_generators}"
        )
    return p.filter(lambda exps: not _vanishes_exps(exps, model))


def detect_pure_power(p: Gf2Poly, j: int, model: QuotientModel) -> bool:
    """Certify ``p != 0`` by pushing it to the top degree.

    ``p`` must be homogeneous of degree ``(k-1)*j``.  Returns true iff
    ``reduce(p * w_{k-1}^{d-1-j}) == w_{k-1}^{d-1}``, which happens exactly
    when the pure power ``w_{k-1}^j`` occurs in ``p``.
    """
    if not 0 <= j <= model.d - 1:
        raise ValueError(f"j must lie in 0..{model.d - 1}, got {j}")
    target = (model.k - 1) * j
    bad = p.degrees() - {target}
    if bad:
        raise ValueError(f"p must be homogeneous of degree {target}, found degrees {sorted(bad)}")
    lifted = mul_truncated(p, model.pure_power(model.d - 1 - j), model.top_degree)
    return reduce(lifted, model) == model.top_class()

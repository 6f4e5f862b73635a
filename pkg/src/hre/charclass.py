"""Total and dual Stiefel-Whitney classes of ``m * xi_{R^d, count}`` and certificates.

For ``count = 2**m`` the total class of the permutation bundle is
``1 + w_1 + ... + w_{count-1}`` in the generators of
:class:`~hre.cohmodel.QuotientModel`.  Composite counts are handled one
binary digit at a time: the bundle over a product of smaller configuration
spaces splits, and a cross product of nonzero classes sitting in distinct
Kunneth summands is nonzero.  So a composite certificate is the list of its
2-power factor certificates and is never computed in a product ring.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Literal, Union

from .cohmodel import QuotientModel, detect_pure_power, reduce
from .dyadic import (
    alpha,
    binom_mod2,
    dyadic_profile,
    gamma,
    gamma2,
    is_power_of_two,
    multinom_mod2,
)
from .gf2poly import Gf2Poly, graded_component, invert_series, pow_truncated

__all__ = [
    "Verdict",
    "ClassQuery",
    "FactorCertificate",
    "Certificate",
    "ChisholmAuditError",
    "total_class",
    "dual_class",
    "dual_class_by_complement",
    "certify_regular",
    "certify_skew",
    "certify_regular_skew",
    "chisholm_coefficient_audit",
    "skew_exponent",
]


class Verdict(str, enum.Enum):
    NONVANISHING_CERTIFIED = "NONVANISHING_CERTIFIED"
    NOT_CERTIFIED = "NOT_CERTIFIED"


def _require_power_of_two(count: int) -> None:
    if count < 2 or not is_power_of_two(count):
        raise ValueError(f"count must be a power of 2 with count >= 2, got {count}")


def _effective_multiplicity(d: int, multiplicity: int) -> int:
    if multiplicity < 0:
        raise ValueError("multiplicity must be nonnegative")
    # 2 xi_{R^2, l} is trivial, so only the parity of the multiplicity matters
    return multiplicity % 2 if d == 2 else multiplicity


def total_class(d: int, count: int, multiplicity: int, truncation_degree: int) -> Gf2Poly:
    """``(1 + w_1 + ... + w_{count-1}) ** multiplicity``, truncated."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    _require_power_of_two(count)
    mult = _effective_multiplicity(d, multiplicity)
    return pow_truncated(Gf2Poly.total_sum(count - 1), mult, truncation_degree)


@lru_cache(maxsize=256)
def dual_class(d: int, count: int, multiplicity: int, truncation_degree: int) -> Gf2Poly:
    """Truncated inverse of :func:`total_class` by series inversion."""
    return invert_series(total_class(d, count, multiplicity, truncation_degree), truncation_degree)


def dual_class_by_complement(
    d: int, count: int, multiplicity: int, truncation_degree: int
) -> Gf2Poly:
    """Independent route: ``(1+u)^(-m) = (1+u)^(2^T - m)`` once ``2^T > D + m``."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    _require_power_of_two(count)
    mult = _effective_multiplicity(d, multiplicity)
    exponent_bits = (truncation_degree + mult).bit_length()
    return pow_truncated(
        Gf2Poly.total_sum(count - 1), (1 << exponent_bits) - mult, truncation_degree
    )


@dataclass(frozen=True)
class ClassQuery:
    """One graded piece of a dual class: degree ``target_degree`` of ``w-bar(m xi)``."""

    d: int
    count: int
    multiplicity: int
    target_degree: int

    def __post_init__(self) -> None:
        if self.d < 2 or self.count < 1 or self.multiplicity < 1 or self.target_degree < 0:
            raise ValueError(f"invalid query {self}")
        if is_power_of_two(self.count) and self.target_degree > (self.d - 1) * (self.count - 1):
            raise ValueError("target degree exceeds the top degree of the configuration space")

    def factor_degrees(self) -> list[int]:
        return [(self.d - 1) * (p - 1) for p in dyadic_profile(self.count).parts]

    def component(self) -> Gf2Poly:
        """The graded piece (2-power counts only)."""
        _require_power_of_two(self.count)
        dual = dual_class(self.d, self.count, self.multiplicity, self.target_degree)
        return graded_component(dual, self.target_degree)


@dataclass(frozen=True)
class FactorCertificate:
    """Certificate for a single 2-power factor ``count`` of a binary decomposition."""

    count: int
    degree: int
    j: int
    case: str
    certified: bool
    witness: Gf2Poly
    component: Gf2Poly | None = None
    lucas_coefficient: int | None = None
    pure_coefficient: int | None = None

    def __post_init__(self) -> None:
        if self.certified and self.count > 1:
            expected = Gf2Poly.monomial(self.count - 1, self.count - 1, self.j)
            if self.witness != expected:
                raise ValueError("a certified factor must carry the pure power as witness")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "count": self.count,
            "degree": self.degree,
            "j": self.j,
            "case": self.case,
            "certified": self.certified,
            "witness": str(self.witness),
        }
        if self.component is not None:
            out["component_terms"] = len(self.component)
        if self.lucas_coefficient is not None:
            out["lucas_coefficient"] = self.lucas_coefficient
        if self.pure_coefficient is not None:
            out["pure_coefficient"] = self.pure_coefficient
        return out


@dataclass(frozen=True)
class Certificate:
    problem: Literal["regular", "skew", "regular-skew"]
    d: int
    degree: int
    verdict: Verdict
    witness: tuple[Gf2Poly, ...]
    trace: tuple[Union[FactorCertificate, "Certificate"], ...]
    k: int | None = None
    l: int | None = None
    r: int | None = None
    s: int | None = None

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.NONVANISHING_CERTIFIED

    @property
    def witness_text(self) -> str:
        return " x ".join(str(w) for w in self.witness)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"problem": self.problem, "d": self.d}
        for name in ("k", "l", "r", "s"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        out["degree"] = self.degree
        out["verdict"] = self.verdict.value
        out["witness"] = self.witness_text
        out["trace"] = [t.to_dict() for t in self.trace]
        return out

    def to_text(self, trace: bool = False) -> str:
        params = ", ".join(
            f"{n}={getattr(self, n)}" for n in ("d", "k", "l") if getattr(self, n) is not None
        )
        lines = [
            f"certify {self.problem} ({params})",
            f"  degree:  {self.degree}",
            f"  verdict: {self.verdict.value}",
            f"  witness: {self.witness_text}",
        ]
        if self.r is not None:
            lines.append(f"  r = {self.r}, s = {self.s}")
        if trace:
            lines.extend("  " + line for line in _trace_lines(self.trace))
        return "\n".join(lines)


def _trace_lines(trace) -> list[str]:
    lines = []
    for t in trace:
        if isinstance(t, Certificate):
            lines.append(f"[{t.problem}] {t.verdict.value}: {t.witness_text}")
            lines.extend("  " + line for line in _trace_lines(t.trace))
        else:
            extra = ""
            if t.lucas_coefficient is not None:
                extra = f", lucas={t.lucas_coefficient}"
            lines.append(
                f"factor {t.count}: degree {t.degree}, j={t.j}, case={t.case}, "
                f"certified={t.certified}, witness={t.witness}{extra}"
            )
    return lines


def _trivial_factor(count: int, case: str) -> FactorCertificate:
    n = max(count - 1, 1)
    return FactorCertificate(
        count=count, degree=0, j=0, case=case, certified=True, witness=Gf2Poly.one(n)
    )


def _certify_factor(
    d: int, count: int, multiplicity: int, j: int, case: str, lucas: int | None = None
) -> FactorCertificate:
    model = QuotientModel(d, count)
    degree = (count - 1) * j
    comp = graded_component(dual_class(d, count, multiplicity, degree), degree)
    ok = detect_pure_power(comp, j, model)
    pure = model.pure_power(j)
    return FactorCertificate(
        count=count,
        degree=degree,
        j=j,
        case=case,
        certified=ok,
        witness=pure if ok else reduce(comp, model),
        component=comp,
        lucas_coefficient=lucas,
        pure_coefficient=int(pure.exponent_vectors()[0] in comp),
    )


def _combine(problem, d, degree, factors, **params) -> Certificate:
    ok = all(f.certified for f in factors)
    return Certificate(
        problem=problem,
        d=d,
        degree=degree,
        verdict=Verdict.NONVANISHING_CERTIFIED if ok else Verdict.NOT_CERTIFIED,
        witness=tuple(f.witness for f in factors),
        trace=tuple(factors),
        **params,
    )


def certify_regular(d: int, k: int) -> Certificate:
    """Certify ``w-bar_{(d-1)(k-alpha(k))}(xi_{R^d,k}) != 0``.

    Each binary digit ``2**r`` of ``k`` contributes the top-degree component
    of ``w-bar(xi_{R^d, 2**r})``, which must reduce to ``w_{2^r-1}^{d-1}``.
    """
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    factors = []
    for part in dyadic_profile(k).parts:
        if part == 1 or d == 1:
            factors.append(_trivial_factor(part, "trivial"))
        else:
            case = "projective" if part == 2 else "power-of-two"
            factors.append(_certify_factor(d, part, 1, d - 1, case))
    return _combine("regular", d, (d - 1) * (k - alpha(k)), factors, k=k)


def skew_exponent(d: int) -> int:
    """``2**gamma(d) - d - 1``, the per-factor pure-power exponent of the skew class."""
    return (1 << gamma(d)) - d - 1


def certify_skew(d: int, l: int) -> Certificate:
    """Certify ``w-bar_{(2^gamma(d)-d-1)(l-alpha(l))}((d+1) xi_{R^d,l}) != 0``."""
    if d < 1 or l < 1:
        raise ValueError("d and l must be positive")
    if d == 1 or l == 1:
        return _combine("skew", d, 0, [_trivial_factor(l, "trivial")], l=l)
    j = skew_exponent(d)
    factors = []
    for part in dyadic_profile(l).parts:
        if part == 1:
            factors.append(_trivial_factor(part, "trivial"))
            continue
        if d == 2:
            case = "d=2, 2xi trivial"
        elif part == 2:
            case = "projective"
        else:
            case = "power-of-two"
        lucas = None
        if part >= 4:
            lucas = binom_mod2((1 << gamma2(d, part)) - d - 1, j)
        factors.append(_certify_factor(d, part, d + 1, j, case, lucas))
    return _combine("skew", d, j * (l - alpha(l)), factors, l=l)


def certify_regular_skew(d: int, k: int, l: int) -> Certificate:
    """Certify the cross product of the regular and skew classes."""
    reg = certify_regular(d, k)
    sk = certify_skew(d, l)
    ok = reg.certified and sk.certified
    return Certificate(
        problem="regular-skew",
        d=d,
        k=k,
        l=l,
        r=reg.degree,
        s=sk.degree,
        degree=reg.degree + sk.degree,
        verdict=Verdict.NONVANISHING_CERTIFIED if ok else Verdict.NOT_CERTIFIED,
        witness=reg.witness + sk.witness,
        trace=(reg, sk),
    )


class ChisholmAuditError(AssertionError):
    """Raised when an audited multinomial coefficient is odd."""

    def __init__(self, d: int, k: int, audit: list[tuple[tuple[int, ...], int]]):
        self.audit = audit
        self.odd = [j for j, parity in audit if parity]
        shown = ", ".join(str(j) for j in self.odd[:5])
        super().__init__(
            f"(d={d}, k={k}): {len(self.odd)} of {len(audit)} coefficients are odd, e.g. {shown}"
        )


def _exponent_vectors(
    k: int, total: int, last_max: int, allowed: set[int]
) -> list[tuple[int, ...]]:
    """All ``(j_1..j_{k-1})`` with ``sum i*j_i == total``, ``j_{k-1} <= last_max``,
    and ``j_i = 0`` for ``i`` outside ``allowed``."""
    out: list[tuple[int, ...]] = []
    n = k - 1
    if last_max < 0:
        return out
    exps = [0] * n

    def rec(i: int, remaining: int) -> None:
        if i < 0:
            if remaining == 0:
                out.append(tuple(exps))
            return
        weight = i + 1
        cap = remaining // weight if weight in allowed else 0
        if i == n - 1:
            cap = min(cap, last_max)
        for e in range(cap, -1, -1):
            exps[i] = e
            rec(i - 1, remaining - weight * e)
        exps[i] = 0

    rec(n - 1, total)
    out.sort()
    return out


def chisholm_coefficient_audit(
    d: int, k: int, generators: Literal["all", "dickson"] = "all"
) -> list[tuple[tuple[int, ...], int]]:
    """Parities of the multinomials ``C(j_1+...+j_{k-1}; j_1, ..., j_{k-1})``.

    Enumerates every exponent vector with ``sum i*j_i = (d-1)(k-1)`` and
    ``0 <= j_{k-1} <= d-2``.  With ``generators="dickson"`` only the classes
    ``w_i`` with ``i = k - 2**s`` (the Dickson degrees) may occur.  Raises
    :class:`ChisholmAuditError` if any coefficient is odd.
    """
    for name, value in (("d", d), ("k", k)):
        if not is_power_of_two(value):
            raise ValueError(f"{name} must be a power of 2, got {value}")
    if k < 2:
        raise ValueError("k must be >= 2")
    if generators == "all":
        allowed = set(range(1, k))
    elif generators == "dickson":
        allowed = {k - (1 << s) for s in range(k.bit_length() - 1)}
    else:
        raise ValueError(f"unknown generator set {generators!r}")
    vectors = _exponent_vectors(k, (d - 1) * (k - 1), d - 2, allowed)
    audit = [(j, multinom_mod2(j)) for j in vectors]
    if any(parity for _, parity in audit):
        raise ChisholmAuditError(d, k, audit)
    return audit

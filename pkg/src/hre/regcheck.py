"""Sampling checks for explicit k-regular map constructions.

Sampling can refute regularity but never prove it, so a report says either
``NO_COUNTEREXAMPLE_FOUND`` or ``COUNTEREXAMPLE``.  Exact mode evaluates the
maps over the rationals and decides rank by fraction-free elimination; float
mode uses an SVD threshold on row-normalized value matrices.

Conventions fixed here:

* stereographic projection is taken from the north pole ``(0, ..., 0, 1)``:
  ``x -> (2x, |x|^2 - 1) / (|x|^2 + 1)``;
* the complex moment curve realifies ``z^j`` as ``(Re z^j, Im z^j)`` after a
  leading constant 1, so it lands in ``R^(2k-1)``;
* point separation is measured in the max norm, which keeps it rational.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Iterator, Sequence

import numpy as np

__all__ = [
    "MapFamily",
    "RandomSampler",
    "GridSampler",
    "Failure",
    "RegularityReport",
    "evaluate",
    "check_k_regular",
    "check_affinely_regular",
    "rank_exact",
    "rank_float",
    "det_exact",
    "singular_value_proxy_sq",
    "vandermonde",
    "parse_family",
    "format_rational",
]

Point = tuple[Fraction, ...]
RNG_NAME = "python-random-MT19937"
FLOAT_MIN_SEPARATION = 1e-6


# map families


@dataclass(frozen=True)
class MapFamily:
    """A named polynomial or rational map ``R^domain_dim -> R^target_dim``.

    ``CUSTOM`` maps are given as one row per output coordinate, each row a
    tuple of ``(exponent tuple, coefficient)`` terms.
    """

    kind: str
    param: int | None = None
    inner: "MapFamily | None" = None
    rows: tuple[tuple[tuple[tuple[int, ...], Fraction], ...], ...] | None = None
    custom_domain: int | None = None
    label: str | None = None

    # constructors

    @classmethod
    def real_moment(cls, k: int) -> "MapFamily":
        _positive("k", k)
        return cls("REAL_MOMENT", k)

    @classmethod
    def complex_moment(cls, k: int) -> "MapFamily":
        _positive("k", k)
        return cls("COMPLEX_MOMENT", k)

    @classmethod
    def inverse_stereographic(cls, n: int) -> "MapFamily":
        _positive("n", n)
        return cls("INVERSE_STEREOGRAPHIC", n)

    @classmethod
    def sphere_lift(cls, n: int) -> "MapFamily":
        _positive("n", n)
        return cls("SPHERE_LIFT", n)

    @classmethod
    def affine_lift(cls, inner: "MapFamily") -> "MapFamily":
        return cls("AFFINE_LIFT", inner=inner)

    @classmethod
    def custom(cls, rows, domain_dim: int, label: str | None = None) -> "MapFamily":
        _positive("domain_dim", domain_dim)
        frozen = []
        for row in rows:
            items = row.items() if isinstance(row, dict) else row
            terms = []
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != domain_dim or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps} for domain dimension {domain_dim}")
                terms.append((exps, Fraction(coeff)))
            frozen.append(tuple(sorted(terms)))
        if not frozen:
            raise ValueError("a custom map needs at least one output coordinate")
        return cls("CUSTOM", rows=tuple(frozen), custom_domain=domain_dim, label=label)

    @classmethod
    def identity(cls, d: int) -> "MapFamily":
        rows = [{tuple(int(i == j) for j in range(d)): 1} for i in range(d)]
        return cls.custom(rows, d, label=f"IDENTITY({d})")

    @classmethod
    def constant(cls, d: int) -> "MapFamily":
        return cls.custom([{(0,) * d: 1}], d, label=f"CONSTANT({d})")

    # shape

    @property
    def domain_dim(self) -> int:
        if self.kind == "REAL_MOMENT":
            return 1
        if self.kind == "COMPLEX_MOMENT":
            return 2
        if self.kind in ("SPHERE_LIFT", "INVERSE_STEREOGRAPHIC"):
            return self.param
        if self.kind == "AFFINE_LIFT":
            return self.inner.domain_dim
        return self.custom_domain

    @property
    def target_dim(self) -> int:
        if self.kind == "REAL_MOMENT":
            return self.param
        if self.kind == "COMPLEX_MOMENT":
            return 2 * self.param - 1
        if self.kind == "SPHERE_LIFT":
            return self.param + 2
        if self.kind == "INVERSE_STEREOGRAPHIC":
            return self.param + 1
        if self.kind == "AFFINE_LIFT":
            return self.inner.target_dim + 1
        return len(self.rows)

    @property
    def id(self) -> str:
        if self.kind == "AFFINE_LIFT":
            return f"AFFINE_LIFT({self.inner.id})"
        if self.kind == "CUSTOM":
            return self.label or f"CUSTOM({self.custom_domain}->{len(self.rows)})"
        return f"{self.kind}({self.param})"

    def __call__(self, point: Sequence) -> Point:
        return evaluate(self, point)


def _positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")


def _complex_powers(x: Fraction, y: Fraction, count: int) -> list[tuple[Fraction, Fraction]]:
    out = []
    re_, im = Fraction(1), Fraction(0)
    for _ in range(count):
        out.append((re_, im))
        re_, im = re_ * x - im * y, re_ * y + im * x
    return out


def _stereographic(point: Point) -> Point:
    s = sum(c * c for c in point)
    denom = s + 1
    return tuple(2 * c / denom for c in point) + ((s - 1) / denom,)


def evaluate(family: MapFamily, point: Sequence) -> Point:
    """Exact value of ``family`` at a rational point."""
    pt = tuple(Fraction(c) for c in point)
    if len(pt) != family.domain_dim:
        raise ValueError(f"point has dimension {len(pt)}, {family.id} expects {family.domain_dim}")
    kind = family.kind
    if kind == "REAL_MOMENT":
        x = pt[0]
        out, acc = [], Fraction(1)
        for _ in range(family.param):
            out.append(acc)
            acc *= x
        return tuple(out)
    if kind == "COMPLEX_MOMENT":
        powers = _complex_powers(pt[0], pt[1], family.param)
        out = [Fraction(1)]
        for re_, im in powers[1:]:
            out.extend((re_, im))
        return tuple(out)
    if kind == "INVERSE_STEREOGRAPHIC":
        return _stereographic(pt)
    if kind == "SPHERE_LIFT":
        return (Fraction(1),) + _stereographic(pt)
    if kind == "AFFINE_LIFT":
        return (Fraction(1),) + evaluate(family.inner, pt)
    out = []
    for row in family.rows:
        total = Fraction(0)
        for exps, coeff in row:
            term = coeff
            for c, e in zip(pt, exps):
                if e:
                    term *= c**e
            total += term
        out.append(total)
    return tuple(out)


_FAMILY_RE = re.compile(r"^\s*([A-Za-z_-]+)\s*(?:\((.*)\))?\s*$")


def parse_family(text: str, default_param: int | None = None) -> MapFamily:
    """Build a family from an id such as ``AFFINE_LIFT(IDENTITY(2))``.

    Also accepts the CLI spelling, e.g. ``sphere-lift:2``.
    """
    text = text.strip()
    if ":" in text and "(" not in text:
        name, arg = text.split(":", 1)
        text = f"{name}({arg})"
    m = _FAMILY_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse map family {text!r}")
    name = m.group(1).upper().replace("-", "_")
    arg = m.group(2)
    if name == "AFFINE_LIFT":
        if not arg:
            raise ValueError("AFFINE_LIFT needs an inner family")
        return MapFamily.affine_lift(parse_family(arg, default_param))
    if name == "AFFINE_IDENTITY":
        return MapFamily.affine_lift(MapFamily.identity(_int_arg(arg, default_param, name)))
    simple = {
        "REAL_MOMENT": MapFamily.real_moment,
        "COMPLEX_MOMENT": MapFamily.complex_moment,
        "SPHERE_LIFT": MapFamily.sphere_lift,
        "INVERSE_STEREOGRAPHIC": MapFamily.inverse_stereographic,
        "STEREOGRAPHIC": MapFamily.inverse_stereographic,
        "IDENTITY": MapFamily.identity,
        "CONSTANT": MapFamily.constant,
    }
    if name not in simple:
        raise ValueError(f"unknown map family {name!r}")
    return simple[name](_int_arg(arg, default_param, name))


def _int_arg(arg: str | None, default: int | None, name: str) -> int:
    if arg:
        return int(arg)
    if default is None:
        raise ValueError(f"{name} needs a parameter")
    return default


# samplers


def _linf(p: Point, q: Point) -> Fraction:
    return max(abs(a - b) for a, b in zip(p, q))


@dataclass(frozen=True)
class RandomSampler:
    """``trials`` random k-tuples of rationals ``a/b`` with ``|a| <= bound``, ``1 <= b <= bound``."""

    seed: int
    trials: int
    bound: int = 1000

    def describe(self) -> str:
        return f"RANDOM(seed={self.seed}, trials={self.trials}, bound={self.bound})"

    def tuples(self, dim: int, k: int, exact: bool) -> Iterator[tuple[Point, ...]]:
        rng = random.Random(self.seed)
        b = self.bound
        for _ in range(self.trials):
            while True:
                pts = tuple(
                    tuple(Fraction(rng.randint(-b, b), rng.randint(1, b)) for _ in range(dim))
                    for _ in range(k)
                )
                if _separated(pts, exact):
                    break
            yield pts


@dataclass(frozen=True)
class GridSampler:
    """Every k-subset of a fixed point list."""

    points: tuple[Point, ...]

    @classmethod
    def lattice(cls, values: Sequence, dim: int) -> "GridSampler":
        vals = [Fraction(v) for v in values]
        return cls(tuple(product(vals, repeat=dim)))

    @classmethod
    def of(cls, points: Sequence[Sequence]) -> "GridSampler":
        return cls(tuple(tuple(Fraction(c) for c in p) for p in points))

    def describe(self) -> str:
        return f"GRID({len(self.points)} points)"

    def tuples(self, dim: int, k: int, exact: bool) -> Iterator[tuple[Point, ...]]:
        if any(len(p) != dim for p in self.points):
            raise ValueError(f"grid points must have dimension {dim}")
        for pts in combinations(self.points, k):
            if _separated(pts, exact):
                yield pts


def _separated(pts: Sequence[Point], exact: bool) -> bool:
    for p, q in combinations(pts, 2):
        if exact:
            if p == q:
                return False
        elif float(_linf(p, q)) < FLOAT_MIN_SEPARATION:
            return False
    return True


# linear algebra


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of the scales."""
    out = []
    scale = 1
    for row in rows:
        lcm = math.lcm(*(c.denominator for c in row)) if row else 1
        out.append([c.numerator * (lcm // c.denominator) for c in row])
        scale *= lcm
    return out, scale


def _bareiss(m: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, signed last pivot)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, rows):
            mi = m[i]
            f = mi[c]
            for j in range(c + 1, cols):
                mi[j] = (p * mi[j] - f * m[r][j]) // prev
            mi[c] = 0
        prev = p
        r += 1
    return r, sign * prev if r else 0


def _as_fractions(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[c if isinstance(c, Fraction) else Fraction(c) for c in row] for row in rows]


def _rank_det(rows: Sequence[Sequence]) -> tuple[int, Fraction | None]:
    """Rank, plus the determinant when the matrix is square."""
    ints, scale = _integer_rows(_as_fractions(rows))
    if not ints:
        return 0, None
    square = len(ints) == len(ints[0])
    rank, last = _bareiss(ints)
    if not square:
        return rank, None
    return rank, Fraction(last, scale) if rank == len(ints) else Fraction(0)


def rank_exact(rows: Sequence[Sequence]) -> int:
    return _rank_det(rows)[0]


def det_exact(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    return _rank_det(rows)[1]


def rank_float(rows: Sequence[Sequence], tolerance: float) -> int:
    """Number of singular values above ``tolerance`` after scaling rows to unit length."""
    a = np.array([[float(c) for c in row] for row in rows], dtype=float)
    if a.size == 0:
        return 0
    norms = np.linalg.norm(a, axis=1)
    norms[norms == 0] = 1.0
    s = np.linalg.svd(a / norms[:, None], compute_uv=False)
    return int(np.sum(s > tolerance))


def singular_value_proxy_sq(rows: Sequence[Sequence]) -> Fraction:
    """Exact squared lower bound on the smallest singular value of the row-normalized matrix.

    With unit rows every singular value is at most ``sqrt(k)``, so for any
    ``k x k`` minor ``|det| <= sigma_min * k^((k-1)/2)``.  The proxy is the
    largest such minor divided by ``k^((k-1)/2)``.
    """
    mat = [[Fraction(c) for c in row] for row in rows]
    k = len(mat)
    n = len(mat[0])
    if k > n:
        return Fraction(0)
    norms_sq = [sum(c * c for c in row) for row in mat]
    if any(v == 0 for v in norms_sq):
        return Fraction(0)
    best = Fraction(0)
    for cols in combinations(range(n), k):
        det = det_exact([[row[c] for c in cols] for row in mat])
        best = max(best, det * det)
    denom = Fraction(1)
    for v in norms_sq:
        denom *= v
    return best / (denom * Fraction(k) ** (k - 1))


def vandermonde(xs: Sequence[Fraction]) -> Fraction:
    """``prod_{i<j} (x_j - x_i)``, accumulated over a common denominator."""
    xs = [Fraction(x) for x in xs]
    num = den = 1
    for i, j in combinations(range(len(xs)), 2):
        a, b = xs[i], xs[j]
        num *= b.numerator * a.denominator - a.numerator * b.denominator
        den *= a.denominator * b.denominator
    return Fraction(num, den)


# reports


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Failure:
    trial: int
    points: tuple[Point, ...]
    rank: int
    defect: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial": self.trial,
            "points": [[format_rational(c) for c in p] for p in self.points],
            "rank": self.rank,
            "defect": self.defect,
        }


@dataclass(frozen=True)
class RegularityReport:
    family: str
    k: int
    trials: int
    failures: tuple[Failure, ...]
    min_separation: Fraction | None
    arithmetic: str  # "EXACT_RATIONAL" or "FLOAT(<tolerance>)"
    sampler: str
    automatic_failure: bool = False
    reduction: str | None = None
    vandermonde_checks: int = 0
    vandermonde_mismatches: int = 0
    rng: str = RNG_NAME
    notes: tuple[str, ...] = field(default=())

    @property
    def verdict(self) -> str:
        return "COUNTEREXAMPLE" if self.failures else "NO_COUNTEREXAMPLE_FOUND"

    @property
    def clean(self) -> bool:
        return not self.failures and not self.automatic_failure

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "k": self.k,
            "trials": self.trials,
            "arithmetic": self.arithmetic,
            "sampler": self.sampler,
            "rng": self.rng,
            "verdict": self.verdict,
            "automatic_failure": self.automatic_failure,
            "reduction": self.reduction,
            "min_separation": None
            if self.min_separation is None
            else format_rational(self.min_separation),
            "vandermonde_checks": self.vandermonde_checks,
            "vandermonde_mismatches": self.vandermonde_mismatches,
            "failure_count": len(self.failures),
            "failures": [f.to_dict() for f in self.failures],
        }

    def to_text(self, max_failures: int = 5) -> str:
        lines = [
            f"verify {self.family}, k={self.k}: {self.verdict}",
            f"  trials: {self.trials} ({self.sampler}, {self.rng})",
            f"  arithmetic: {self.arithmetic}",
            f"  failures: {len(self.failures)}",
        ]
        if self.min_separation is not None:
            lines.append(f"  min separation (max norm): {format_rational(self.min_separation)}")
        if self.automatic_failure:
            lines.append("  automatic failure: k exceeds the target dimension")
        if self.reduction:
            lines.append(f"  reduction: {self.reduction}")
        if self.vandermonde_checks:
            lines.append(
                f"  Vandermonde cross-checks: {self.vandermonde_checks}, "
                f"mismatches: {self.vandermonde_mismatches}"
            )
        for f in self.failures[:max_failures]:
            pts = "; ".join("(" + ", ".join(format_rational(c) for c in p) + ")" for p in f.points)
            lines.append(f"  counterexample #{f.trial}: rank {f.rank} (defect {f.defect}) at {pts}")
        return "\n".join(lines)


def check_k_regular(
    family: MapFamily,
    k: int,
    sampler: RandomSampler | GridSampler,
    arithmetic: str = "exact",
    tolerance: float = 1e-9,
) -> RegularityReport:
    """Test sampled k-tuples of distinct points for linearly independent images."""
    _positive("k", k)
    exact = arithmetic.lower() in ("exact", "exact_rational")
    if not exact and arithmetic.lower() != "float":
        raise ValueError(f"unknown arithmetic {arithmetic!r}")
    automatic = k > family.target_dim
    cross_check = exact and family.kind == "REAL_MOMENT" and k == family.param
    failures = []
    min_sep: Fraction | None = None
    trials = checks = mismatches = 0
    for trial, pts in enumerate(sampler.tuples(family.domain_dim, k, exact)):
        trials += 1
        for p, q in combinations(pts, 2):
            sep = _linf(p, q)
            if min_sep is None or sep < min_sep:
                min_sep = sep
        rows = [evaluate(family, p) for p in pts]
        if exact:
            rank, det = _rank_det(rows)
        else:
            rank, det = rank_float(rows, tolerance), None
        if rank < k:
            failures.append(Failure(trial, tuple(pts), rank, k - rank))
        if cross_check:
            checks += 1
            if det != vandermonde([p[0] for p in pts]):
                mismatches += 1
    return RegularityReport(
        family=family.id,
        k=k,
        trials=trials,
        failures=tuple(failures),
        min_separation=min_sep,
        arithmetic="EXACT_RATIONAL" if exact else f"FLOAT({tolerance:g})",
        sampler=sampler.describe(),
        automatic_failure=automatic,
        vandermonde_checks=checks,
        vandermonde_mismatches=mismatches,
    )


def check_affinely_regular(
    family: MapFamily,
    k: int,
    sampler: RandomSampler | GridSampler,
    arithmetic: str = "exact",
    tolerance: float = 1e-9,
) -> RegularityReport:
    """Affine k-regularity of ``f`` as (k+1)-regularity of ``x -> (1, f(x))``."""
    lifted = MapFamily.affine_lift(family)
    report = check_k_regular(lifted, k + 1, sampler, arithmetic, tolerance)
    return RegularityReport(
        **{
            **report.__dict__,
            "family": family.id,
            "k": k,
            "reduction": f"affinely {k}-regular {family.id} <=> {k + 1}-regular {lifted.id}",
        }
    )

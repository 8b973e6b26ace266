"""Weight distributions: exhaustive enumeration, closed forms, and moment checks.

Counts are exact Python ints throughout; the closed-form table evaluators
work in exact rationals and refuse to return anything that is not an
integer, which is the designed tripwire for transcription slips in the
table formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codebuild import (
    CodeSpec,
    TooLarge,
    cyclic_generator_basis,
    generator_basis,
    weight_histogram,
)
from .gf2m import Field


class InapplicableParameters(ValueError):
    """Closed form does not cover the requested parameters."""


class NonIntegerCount(ArithmeticError):
    """A table row evaluated to a non-integer (transcription bug tripwire)."""


class WeightCollision(ValueError):
    """Distribution cannot be extended consistently."""


class OddSum(ValueError):
    """Exponential sum must be even to convert to a weight."""


class ZeroForm(ValueError):
    """Quadratic-form profile is undefined for (a, b) = (0, 0)."""


@dataclass
class WeightDistribution:
    """Exact weight -> count map of a code."""

    entries: dict[int, int]
    length: int
    dimension: int

    def total(self) -> int:
        return sum(self.entries.values())

    def validate(self) -> None:
        assert self.total() == 1 << self.dimension, "counts must sum to 2^dimension"
        assert all(0 <= w <= self.length for w in self.entries), "weight out of range"
        assert self.entries.get(0) == 1, "exactly one zero-weight word expected"

    def weights(self) -> list[int]:
        return sorted(self.entries)

    def min_distance(self) -> int:
        return min(w for w in self.entries if w > 0)

    def to_json_obj(self) -> dict:
        return {
            "length": self.length,
            "dimension": self.dimension,
            "weights": [{"w": w, "count": str(self.entries[w])} for w in self.weights()],
        }


# -- enumeration --------------------------------------------------------------


def weight_distribution(spec: CodeSpec, field: Field, threads: int = 1) -> WeightDistribution:
    """Exact distribution of the extended code by full enumeration."""
    basis = generator_basis(spec, field)
    counts = weight_histogram(basis, spec.length, threads)
    dist = WeightDistribution(counts, spec.length, len(basis))
    dist.validate()
    return dist


def cyclic_weight_distribution(spec: CodeSpec, field: Field, threads: int = 1) -> WeightDistribution:
    """Exact distribution of the length-n cyclic relative by full enumeration."""
    basis = cyclic_generator_basis(spec, field)
    counts = weight_histogram(basis, spec.n, threads)
    dist = WeightDistribution(counts, spec.n, len(basis))
    dist.validate()
    return dist


# -- closed forms ---------------------------------------------------------------


def _p2(e: int) -> Fraction:
    """2^e as an exact rational, negative e allowed."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def _as_count(x: Fraction, row: str) -> int:
    if x.denominator != 1:
        raise NonIntegerCount(f"row {row}: {x} is not an integer")
    if x < 0:
        raise NonIntegerCount(f"row {row}: {x} is negative")
    return int(x)


def _build(rows: dict[int, Fraction], length: int, dimension: int) -> WeightDistribution:
    entries = {}
    for w, count in rows.items():
        if not 0 < w <= length:
            raise InapplicableParameters(f"weight {w} outside (0, {length}]")
        if w in entries:
            raise InapplicableParameters(f"weight {w} produced by two rows")
        c = _as_count(count, f"weight {w}")
        if c:
            entries[w] = c
    entries[0] = 1
    dist = WeightDistribution(entries, length, dimension)
    dist.validate()
    return dist


def closed_form_c1(s: int) -> WeightDistribution:
    """Closed-form distribution of the extended c1 code, s >= 3."""
    if s < 3:
        raise InapplicableParameters(f"closed form for family c1 needs s >= 3, got {s}")
    w0 = 1 << (2 * s - 1)
    rows = {
        w0: _p2(6 * s - 5) * 29 - _p2(4 * s - 5) * 33 + _p2(2 * s - 3) * 17 - 2,
        1 << (2 * s): Fraction(1),
    }
    mid = Fraction(2, 15) * _p2(2 * s) * (3 * _p2(4 * s) + 5 * _p2(2 * s) - 8)
    rows[w0 - (1 << (s - 1))] = mid
    rows[w0 + (1 << (s - 1))] = mid
    outer = Fraction(7, 3) * _p2(4 * s - 4) * (_p2(2 * s) - 1)
    rows[w0 - (1 << s)] = outer
    rows[w0 + (1 << s)] = outer
    tail = Fraction(1, 15) * _p2(2 * s - 4) * (_p2(4 * s - 2) - 5 * _p2(2 * s - 2) + 1)
    rows[w0 - (1 << (s + 1))] = tail
    rows[w0 + (1 << (s + 1))] = tail
    return _build(rows, 1 << (2 * s), 6 * s + 1)


def _c2_params(s: int, l: int) -> CodeSpec:
    return CodeSpec("c2", s, l)


def closed_form_c2_extended(s: int, l: int) -> WeightDistribution:
    """Closed-form distribution of the extended c2 code, split on d' = d vs 2d."""
    spec = _c2_params(s, l)
    d, dp = spec.d, spec.dprime
    w0 = 1 << (2 * s - 1)
    rows: dict[int, Fraction] = {1 << (2 * s): Fraction(1)}
    if dp == d:
        k_term = (
            _p2(2 * (s + d)) - _p2(2 * s + d) - _p2(2 * s) + _p2(s + 2 * d) - _p2(s + d) + _p2(2 * d)
        )
        inner = _p2(2 * s) * (_p2(s) - 1) * k_term / (_p2(2 * d) - 1)
        rows[w0 - (1 << (s - 1))] = inner
        rows[w0 + (1 << (s - 1))] = inner
        outer = _p2(2 * (s - d)) * (_p2(s + d) - 1) * (_p2(2 * s) - 1) / (_p2(2 * d) - 1)
        rows[w0 - (1 << (s + d - 1))] = outer
        rows[w0 + (1 << (s + d - 1))] = outer
        rows[w0] = 2 * (_p2(3 * s - d) - _p2(2 * (s - d)) + 1) * (_p2(2 * s) - 1)
    elif dp == 2 * d:
        j_term = _p2(2 * s) - _p2(2 * (s - d)) - _p2(2 * s - 3 * d) + _p2(s) - _p2(s - d) + 1
        den = (_p2(2 * d) - 1) * (_p2(d) + 1)
        inner = _p2(2 * s + 3 * d) * (_p2(s) - 1) * j_term / den
        rows[w0 - (1 << (s - 1))] = inner
        rows[w0 + (1 << (s - 1))] = inner
        mid = (
            _p2(2 * s - d)
            * (_p2(2 * s) - 1)
            * (_p2(s) + _p2(s - d) + _p2(s - 2 * d) + 1)
            / (_p2(d) + 1) ** 2
        )
        rows[w0 - (1 << (s + d - 1))] = mid
        rows[w0 + (1 << (s + d - 1))] = mid
        rows[w0] = 2 * (_p2(2 * s) - 1) * _c2_center_term(s, d)
        outer = _p2(2 * s - 4 * d) * (_p2(s - d) - 1) * (_p2(2 * s) - 1) / den
        rows[w0 - (1 << (s + 2 * d - 1))] = outer
        rows[w0 + (1 << (s + 2 * d - 1))] = outer
    else:
        raise InapplicableParameters(f"d'={dp} is neither d nor 2d for (s, l)=({s}, {l})")
    return _build(rows, 1 << (2 * s), 5 * s + 1)


def _c2_center_term(s: int, d: int) -> Fraction:
    return (
        _p2(3 * s - d)
        - _p2(3 * s - 2 * d)
        + _p2(3 * s - 3 * d)
        - _p2(3 * s - 4 * d)
        + _p2(3 * s - 5 * d)
        + _p2(2 * s - d)
        - _p2(2 * s - 2 * d + 1)
        + _p2(2 * s - 3 * d)
        - _p2(2 * s - 4 * d)
        + 1
    )


def closed_form_c2_cyclic(s: int, l: int) -> WeightDistribution:
    """Closed-form distribution of the length-n cyclic c2 code."""
    spec = _c2_params(s, l)
    d, dp = spec.d, spec.dprime
    w0 = 1 << (2 * s - 1)
    rows: dict[int, Fraction] = {}
    if dp == d:
        k_term = (
            _p2(2 * (s + d)) - _p2(2 * s + d) - _p2(2 * s) + _p2(s + 2 * d) - _p2(s + d) + _p2(2 * d)
        )
        den = _p2(2 * d) - 1
        rows[w0 - (1 << (s - 1))] = _p2(s - 1) * (_p2(2 * s) - 1) * k_term / den
        rows[w0 + (1 << (s - 1))] = _p2(s - 1) * (_p2(s) - 1) ** 2 * k_term / den
        common = _p2(s - d - 1) * (_p2(s + d) - 1) * (_p2(2 * s) - 1) / den
        rows[w0 - (1 << (s + d - 1))] = common * (_p2(s - d) + 1)
        rows[w0 + (1 << (s + d - 1))] = common * (_p2(s - d) - 1)
        rows[w0] = (_p2(3 * s - d) - _p2(2 * (s - d)) + 1) * (_p2(2 * s) - 1)
    elif dp == 2 * d:
        j_term = _p2(2 * s) - _p2(2 * (s - d)) - _p2(2 * s - 3 * d) + _p2(s) - _p2(s - d) + 1
        den = (_p2(2 * d) - 1) * (_p2(d) + 1)
        rows[w0 - (1 << (s - 1))] = _p2(s + 3 * d - 1) * (_p2(2 * s) - 1) * j_term / den
        rows[w0 + (1 << (s - 1))] = _p2(s + 3 * d - 1) * (_p2(s) - 1) ** 2 * j_term / den
        mid = (
            _p2(s - 1)
            * (_p2(2 * s) - 1)
            * (_p2(s) + _p2(s - d) + _p2(s - 2 * d) + 1)
            / (_p2(d) + 1) ** 2
        )
        rows[w0 - (1 << (s + d - 1))] = mid * (_p2(s - d) + 1)
        rows[w0 + (1 << (s + d - 1))] = mid * (_p2(s - d) - 1)
        rows[w0] = (_p2(2 * s) - 1) * _c2_center_term(s, d)
        outer = _p2(s - 2 * d - 1) * (_p2(s - d) - 1) * (_p2(2 * s) - 1) / den
        rows[w0 - (1 << (s + 2 * d - 1))] = outer * (_p2(s - 2 * d) + 1)
        rows[w0 + (1 << (s + 2 * d - 1))] = outer * (_p2(s - 2 * d) - 1)
    else:
        raise InapplicableParameters(f"d'={dp} is neither d nor 2d for (s, l)=({s}, {l})")
    return _build(rows, (1 << (2 * s)) - 1, 5 * s)


def extend_distribution(dist: WeightDistribution) -> WeightDistribution:
    """Distribution of the even-weight extension on n+1 coordinates.

    Every input word of weight w contributes weight w (plain copy) and
    weight n+1-w (complement); the input must therefore have even weights
    only, or the result could not be an even-weight code.
    """
    n = dist.length
    out: dict[int, int] = {}
    for w, c in dist.entries.items():
        if w % 2 and (n + 1) % 2 == 0:
            raise WeightCollision(f"odd weight {w} cannot extend to an even-weight code")
        out[w] = out.get(w, 0) + c
        out[n + 1 - w] = out.get(n + 1 - w, 0) + c
    ext = WeightDistribution(out, n + 1, dist.dimension + 1)
    ext.validate()
    return ext


# -- exponential sums and quadratic forms ---------------------------------------


def exp_sum(field: Field, a: int, b: int, c: int) -> int:
    """S(a,b,c) = sum over all x of (-1)^tr(a*x^5 + b*x^3 + c*x), exactly."""
    v = field.scalar_mul_vec(a, field.power_table(5))
    v ^= field.scalar_mul_vec(b, field.power_table(3))
    v ^= field.scalar_mul_vec(c, field.elements_in_order())
    return field.q - 2 * int(field.trace_np[v].sum())


def exp_sum_grid(field: Field) -> np.ndarray:
    """S(a,b,c) for every coefficient triple, indexed by element value (m <= 6)."""
    if field.m > 6:
        raise TooLarge(f"full S grid needs q^3 entries; m={field.m} is too big")
    q = field.q
    xs = field.elements_in_order()
    x5 = field.power_table(5)
    x3 = field.power_table(3)
    # char[c, x] = (-1)^tr(c*x)
    prod = np.zeros((q, q), dtype=np.int64)
    for cval in range(1, q):
        prod[cval] = field.scalar_mul_vec(cval, xs)
    char = (1 - 2 * field.trace_np[prod].astype(np.int32)).astype(np.int32)
    grid = np.empty((q, q, q), dtype=np.int32)
    b_rows = np.zeros((q, q), dtype=np.int64)
    for bval in range(1, q):
        b_rows[bval] = field.scalar_mul_vec(bval, x3)
    for aval in range(q):
        base = field.scalar_mul_vec(aval, x5)
        signs = (1 - 2 * field.trace_np[base[None, :] ^ b_rows].astype(np.int32)).astype(np.int32)
        grid[aval] = signs @ char.T
    return grid


def weight_from_sum(s_value: int, s: int) -> int:
    """Cyclic-word weight 2^(2s-1) - S/2 from an exponential sum."""
    if s_value % 2:
        raise OddSum(f"exponential sum {s_value} is odd")
    return (1 << (2 * s - 1)) - s_value // 2


@dataclass(frozen=True)
class QuadFormProfile:
    a: int
    b: int
    rank: int
    kernel_size: int


def quadform_rank(field: Field, a: int, b: int) -> QuadFormProfile:
    """Rank of the quadratic form tr(a*x^5 + b*x^3) via its radical.

    The radical is the solution set of a^4 x^16 + b^4 x^8 + b^2 x^2 + a x = 0,
    counted exhaustively; rank = m - log2(#solutions).
    """
    if a == 0 and b == 0:
        raise ZeroForm("(a, b) = (0, 0) has no quadratic part")
    a4 = field.pow(a, 4)
    b4 = field.pow(b, 4)
    b2 = field.pow(b, 2)
    v = field.scalar_mul_vec(a4, field.power_table(16))
    v ^= field.scalar_mul_vec(b4, field.power_table(8))
    v ^= field.scalar_mul_vec(b2, field.power_table(2))
    v ^= field.scalar_mul_vec(a, field.elements_in_order())
    kernel = int((v == 0).sum())
    assert kernel & (kernel - 1) == 0, "linearized-polynomial kernel must be a power of 2"
    return QuadFormProfile(a, b, field.m - kernel.bit_length() + 1, kernel)


# -- Pless power moments ---------------------------------------------------------


@dataclass
class PlessResult:
    ok: bool
    first_failure: tuple[int, int, int] | None = None  # (identity index, lhs, rhs)
    checked: int = 7

    def __bool__(self) -> bool:
        return self.ok


def pless_verify(dist: WeightDistribution, n: int, k: int) -> PlessResult:
    """Check the first seven power-moment identities, assuming the dual has
    no nonzero words of weight <= 6 (true for the codes handled here)."""
    rhs = [
        Fraction(2) ** k,
        Fraction(2) ** (k - 1) * n,
        Fraction(2) ** (k - 2) * n * (n + 1),
        Fraction(2) ** (k - 3) * (n**3 + 3 * n**2),
        Fraction(2) ** (k - 4) * (n**4 + 6 * n**3 + 3 * n**2 - 2 * n),
        Fraction(2) ** (k - 5) * (n**5 + 10 * n**4 + 15 * n**3 - 10 * n**2),
        Fraction(2) ** (k - 6) * (n**6 + 15 * n**5 + 45 * n**4 - 15 * n**3 - 30 * n**2 + 16 * n),
    ]
    for j in range(7):
        lhs = sum(i**j * a for i, a in dist.entries.items())
        if Fraction(lhs) != rhs[j]:
            return PlessResult(False, (j + 1, int(lhs), int(rhs[j])))
    return PlessResult(True)

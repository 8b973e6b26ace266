"""Construction and enumeration of the two trace-form code families.

Extended codewords live on 2^m coordinates indexed by field elements in
the order fixed by Field.element(); cyclic relatives live on the n = 2^m-1
coordinates i <-> alpha^i.  A codeword is an int bitmask: bit i is the
value at coordinate i, so Hamming weight is int.bit_count() and the
support is the set of set bits.

Family c1 (extended):  value at x is tr(a*x^5 + b*x^3 + c*x) + h.
Family c2 (extended):  value at x is tr_s(a*x^(2^s+1)) + tr(b*x^(2^l+1) + c*x) + h,
                       with a restricted to the subfield GF(2^s).

Enumeration of a full code walks the span of a row-reduced basis in
lexicographic order of the coefficient index; the index space can be cut
into disjoint ranges so independent workers each sweep a slice and merge
additively, which keeps every result independent of worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

import numpy as np

from .gf2m import Field

# Above this dimension a full sweep (2^dim codewords) is refused.
MAX_ENUM_DIM = 26

# Rows of the low-half table in the split sweep: 2^16 codewords per chunk.
_LOW_BITS = 16


class CoefficientNotInSubfield(ValueError):
    """C2 coefficient a must lie in GF(2^s)."""


class LengthMismatch(ValueError):
    """Word and basis lengths disagree."""


class TooLarge(ValueError):
    """Requested exhaustive computation exceeds the supported size."""


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of one code family instance.

    family "c1" takes s >= 2 and no l; family "c2" takes s >= 2 and
    1 <= l <= m-1 with l != s.  l and m-l give the same code, so l is
    canonicalized to min(l, m-l).
    """

    family: str
    s: int
    l: int | None = None

    def __post_init__(self):
        if self.family not in ("c1", "c2"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.s < 2:
            raise ValueError(f"s must be >= 2, got {self.s}")
        if self.family == "c1":
            if self.l is not None:
                raise ValueError("family c1 takes no l parameter")
        else:
            m = 2 * self.s
            if self.l is None or not 1 <= self.l <= m - 1:
                raise ValueError(f"family c2 needs 1 <= l <= {m - 1}")
            if self.l == self.s:
                raise ValueError("family c2 requires l != s")
            object.__setattr__(self, "l", min(self.l, m - self.l))

    @property
    def m(self) -> int:
        return 2 * self.s

    @property
    def length(self) -> int:
        return 1 << self.m

    @property
    def n(self) -> int:
        return self.length - 1

    @property
    def d(self) -> int:
        if self.family != "c2":
            raise ValueError("d is defined for family c2 only")
        return gcd(self.s, self.l)

    @property
    def dprime(self) -> int:
        if self.family != "c2":
            raise ValueError("d' is defined for family c2 only")
        return gcd(self.s + self.l, 2 * self.l)

    def label(self) -> str:
        if self.family == "c1":
            return f"c1(s={self.s})"
        return f"c2(s={self.s}, l={self.l})"


def _pack_bits(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


# -- codeword builders -------------------------------------------------------


def build_codeword_c1(field: Field, a: int, b: int, c: int, h: int = 0) -> int:
    """Extended-family word (tr(a*x^5 + b*x^3 + c*x) + h) over all x."""
    v = field.scalar_mul_vec(a, field.power_table(5))
    v ^= field.scalar_mul_vec(b, field.power_table(3))
    v ^= field.scalar_mul_vec(c, field.elements_in_order())
    return _pack_bits(field.trace_np[v] ^ (h & 1))


def build_codeword_c2(field: Field, l: int, a: int, b: int, c: int, h: int = 0) -> int:
    """Extended-family word tr_s(a*x^(2^s+1)) + tr(b*x^(2^l+1) + c*x) + h."""
    if not field.in_subfield(a):
        raise CoefficientNotInSubfield(f"a={a:#x} is not in GF(2^{field.s})")
    xs = field.scalar_mul_vec(a, field.power_table((1 << field.s) + 1))
    bits = field.sub_trace_np[xs].copy()
    v = field.scalar_mul_vec(b, field.power_table((1 << l) + 1))
    v ^= field.scalar_mul_vec(c, field.elements_in_order())
    bits ^= field.trace_np[v]
    return _pack_bits(bits ^ (h & 1))


def build_cyclic_codeword_c1(field: Field, a: int, b: int, c: int) -> int:
    """Length-n cyclic word, coordinate i = tr(a*alpha^(5i) + b*alpha^(3i) + c*alpha^i)."""
    i = np.arange(field.n, dtype=np.int64)
    v = field.scalar_mul_vec(a, field.exp_np[(5 * i) % field.n])
    v ^= field.scalar_mul_vec(b, field.exp_np[(3 * i) % field.n])
    v ^= field.scalar_mul_vec(c, field.exp_np[i])
    return _pack_bits(field.trace_np[v])


def build_cyclic_codeword_c2(field: Field, l: int, a: int, b: int, c: int) -> int:
    """Length-n cyclic relative of the c2 family."""
    if not field.in_subfield(a):
        raise CoefficientNotInSubfield(f"a={a:#x} is not in GF(2^{field.s})")
    i = np.arange(field.n, dtype=np.int64)
    xs = field.scalar_mul_vec(a, field.exp_np[(((1 << field.s) + 1) * i) % field.n])
    bits = field.sub_trace_np[xs].copy()
    v = field.scalar_mul_vec(b, field.exp_np[(((1 << l) + 1) * i) % field.n])
    v ^= field.scalar_mul_vec(c, field.exp_np[i])
    bits ^= field.trace_np[v]
    return _pack_bits(bits)


# -- GF(2) row space machinery ------------------------------------------------


def reduce_rows(rows: list[int]) -> list[int]:
    """Reduced echelon basis of the span, rows sorted by pivot (lowest set bit)."""
    basis: dict[int, int] = {}  # pivot -> row
    for row in rows:
        for p, r in basis.items():
            if (row >> p) & 1:
                row ^= r
        if row:
            p = (row & -row).bit_length() - 1
            # back-substitute into existing rows to keep the form reduced
            for p2 in list(basis):
                if (basis[p2] >> p) & 1:
                    basis[p2] ^= row
            basis[p] = row
    return [basis[p] for p in sorted(basis)]


def membership_test(word: int, basis: list[int], length: int) -> bool:
    """True iff word lies in the span of a reduced basis."""
    if word < 0 or word.bit_length() > length:
        raise LengthMismatch(f"word has {word.bit_length()} bits, code length is {length}")
    for row in basis:
        p = (row & -row).bit_length() - 1
        if (word >> p) & 1:
            word ^= row
    return word == 0


def generator_basis(spec: CodeSpec, field: Field) -> list[int]:
    """Row-reduced basis of the extended code; its size is the dimension.

    The spanning set is the image of the coefficient-space basis (one word
    per basis element of each coefficient slot) plus the all-one word; the
    rank is always computed, never assumed from a dimension formula.
    """
    if field.m != spec.m:
        raise LengthMismatch(f"field has m={field.m}, spec needs m={spec.m}")
    gens = []
    if spec.family == "c1":
        for j in range(field.m):
            beta = field.alpha_pow(j)
            gens.append(build_codeword_c1(field, beta, 0, 0))
            gens.append(build_codeword_c1(field, 0, beta, 0))
            gens.append(build_codeword_c1(field, 0, 0, beta))
    else:
        sub_gen = field.alpha_pow((1 << field.s) + 1)  # primitive element of GF(2^s)
        for j in range(field.s):
            gens.append(build_codeword_c2(field, spec.l, field.pow(sub_gen, j), 0, 0))
        for j in range(field.m):
            beta = field.alpha_pow(j)
            gens.append(build_codeword_c2(field, spec.l, 0, beta, 0))
            gens.append(build_codeword_c2(field, spec.l, 0, 0, beta))
    gens.append((1 << spec.length) - 1)  # h = 1
    return reduce_rows(gens)


def cyclic_generator_basis(spec: CodeSpec, field: Field) -> list[int]:
    """Row-reduced basis of the length-n cyclic relative."""
    if field.m != spec.m:
        raise LengthMismatch(f"field has m={field.m}, spec needs m={spec.m}")
    gens = []
    if spec.family == "c1":
        for j in range(field.m):
            beta = field.alpha_pow(j)
            gens.append(build_cyclic_codeword_c1(field, beta, 0, 0))
            gens.append(build_cyclic_codeword_c1(field, 0, beta, 0))
            gens.append(build_cyclic_codeword_c1(field, 0, 0, beta))
    else:
        sub_gen = field.alpha_pow((1 << field.s) + 1)
        for j in range(field.s):
            gens.append(build_cyclic_codeword_c2(field, spec.l, field.pow(sub_gen, j), 0, 0))
        for j in range(field.m):
            beta = field.alpha_pow(j)
            gens.append(build_cyclic_codeword_c2(field, spec.l, 0, beta, 0))
            gens.append(build_cyclic_codeword_c2(field, spec.l, 0, 0, beta))
    return reduce_rows(gens)


# -- span enumeration ---------------------------------------------------------


def _span_word_at(basis: list[int], index: int) -> int:
    out = 0
    j = 0
    while index:
        if index & 1:
            out ^= basis[j]
        index >>= 1
        j += 1
    return out


def enumerate_span(basis: list[int], start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Yield span words for coefficient indices [start, stop) in index order.

    Incrementing the index from i-1 to i flips exactly the trailing bits
    through bit ctz(i), so each step XORs one prefix of the basis.
    """
    k = len(basis)
    total = 1 << k
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad range [{start}, {stop}) for 2^{k} words")
    prefix = []
    acc = 0
    for row in basis:
        acc ^= row
        prefix.append(acc)
    w = _span_word_at(basis, start)
    for i in range(start, stop):
        if i > start:
            w ^= prefix[((i ^ (i - 1)).bit_length()) - 1]
        yield w


def enumerate_code(
    spec: CodeSpec,
    field: Field,
    visitor: Callable[[int], None],
    start: int = 0,
    stop: int | None = None,
) -> None:
    """Invoke visitor once per distinct codeword, in coefficient-index order.

    start/stop select a slice of the coefficient index space, the unit of
    deterministic partitioning for concurrent sweeps.
    """
    basis = generator_basis(spec, field)
    if len(basis) > MAX_ENUM_DIM:
        raise TooLarge(f"dimension {len(basis)} exceeds the enumeration cap {MAX_ENUM_DIM}")
    for w in enumerate_span(basis, start, stop):
        visitor(w)


# -- vectorized weight sweep --------------------------------------------------


def _low_table(basis_low: list[int], n_words: int) -> np.ndarray:
    """All 2^kl span words of the low basis slice, packed, in index order."""
    kl = len(basis_low)
    buf = bytearray((1 << kl) * 8 * n_words)
    step = 8 * n_words
    prefix = []
    acc = 0
    for row in basis_low:
        acc ^= row
        prefix.append(acc)
    w = 0
    for i in range(1 << kl):
        if i:
            w ^= prefix[((i ^ (i - 1)).bit_length()) - 1]
        buf[i * step : (i + 1) * step] = w.to_bytes(step, "little")
    return np.frombuffer(bytes(buf), dtype=np.uint64).reshape(1 << kl, n_words)


def _sweep_ranges(n_high: int, threads: int) -> list[tuple[int, int]]:
    threads = max(1, min(threads, n_high))
    bounds = [n_high * i // threads for i in range(threads + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(threads)]


def weight_histogram(basis: list[int], length: int, threads: int = 1) -> dict[int, int]:
    """Exact weight -> count map over the full span of a reduced basis.

    The sweep splits the basis into a tabulated low half and a streamed
    high half; each high word XORs against the low table and the weights
    are popcounted in bulk.  Results are identical for any thread count.
    """
    k = len(basis)
    if k > MAX_ENUM_DIM:
        raise TooLarge(f"dimension {k} exceeds the enumeration cap {MAX_ENUM_DIM}")
    n_words = (length + 63) // 64
    kl = min(k, _LOW_BITS)
    low = _low_table(basis[:kl], n_words)
    high_basis = basis[kl:]
    n_high = 1 << len(high_basis)

    def run(rng: tuple[int, int]) -> np.ndarray:
        lo, hi = rng
        counts = np.zeros(length + 1, dtype=np.int64)
        for w_int in enumerate_span(high_basis, lo, hi):
            hw = np.frombuffer(w_int.to_bytes(8 * n_words, "little"), dtype=np.uint64)
            weights = np.bitwise_count(low ^ hw).sum(axis=1, dtype=np.int64)
            counts += np.bincount(weights, minlength=length + 1)
        return counts

    ranges = _sweep_ranges(n_high, threads)
    if len(ranges) == 1:
        total = run(ranges[0])
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(run, ranges))
        total = np.sum(parts, axis=0)
    return {int(w): int(c) for w, c in enumerate(total) if c}


def stream_weight_class(basis: list[int], length: int, weight: int) -> Iterator[np.ndarray]:
    """Stream all span words of one weight as packed-uint64 row chunks."""
    k = len(basis)
    if k > MAX_ENUM_DIM:
        raise TooLarge(f"dimension {k} exceeds the enumeration cap {MAX_ENUM_DIM}")
    n_words = (length + 63) // 64
    kl = min(k, _LOW_BITS)
    low = _low_table(basis[:kl], n_words)
    for w_int in enumerate_span(basis[kl:]):
        hw = np.frombuffer(w_int.to_bytes(8 * n_words, "little"), dtype=np.uint64)
        rows = low ^ hw
        mask = np.bitwise_count(rows).sum(axis=1, dtype=np.int64) == weight
        if mask.any():
            yield rows[mask]


def packed_row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(row.tobytes(), "little")

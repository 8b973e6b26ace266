"""Brute-force verification of the t-designs held by the code families.

Blocks are codeword supports.  Verification counts, for every t-subset of
the 2^m points, how many blocks contain it; the weight class is a design
exactly when that count is one constant lambda.  Pair counting (t = 2) is
an accumulated Gram matrix over 0/1 block-incidence chunks; triple
counting (t = 3) uses a flat array indexed by colex rank.

Enumerated lambdas are the ground truth; the closed-form lambdas derived
from the distribution tables are cross-checked against them and mismatches
are flagged, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

from .codebuild import CodeSpec, generator_basis, packed_row_to_int, stream_weight_class
from .gf2m import Field
from .spectrum import (
    InapplicableParameters,
    closed_form_c1,
    closed_form_c2_extended,
    weight_distribution,
)

# A weight class is skipped (unless exhaustive is set) above this many
# t-subset increments: blocks * C(k, t).
COST_GATE = 10**9

_CHUNK = 8192


class EmptyWeightClass(ValueError):
    """No codeword has the requested weight."""


class TrivialDesign(ValueError):
    """Block size k in {t, v} gives a trivial design."""


class NotConstant(ValueError):
    """t-subset coverage is not constant; carries two differing subsets."""


class NonIntegerLambda(ArithmeticError):
    """The design identity b*C(k,t) = lambda*C(v,t) does not divide exactly."""


@dataclass
class DesignReport:
    """Outcome of one weight class."""

    t: int
    v: int
    k: int
    b: int
    lam: int | None
    verified: bool
    trivial: bool = False
    witness: tuple | None = None
    theorem_lambda: int | None = None
    match: bool | None = None
    skipped: bool = False

    def to_json_obj(self) -> dict:
        out = {
            "t": self.t,
            "v": self.v,
            "k": self.k,
            "b": str(self.b),
            "lambda": None if self.lam is None else str(self.lam),
            "verified": self.verified,
            "theorem_lambda": None if self.theorem_lambda is None else str(self.theorem_lambda),
            "match": self.match,
        }
        if self.skipped:
            out["skipped"] = True
        return out


def lambda_from_identity(b: int, k: int, v: int, t: int) -> int:
    """lambda = b*C(k,t)/C(v,t), exact or NonIntegerLambda."""
    num = b * comb(k, t)
    den = comb(v, t)
    lam, rem = divmod(num, den)
    if rem:
        raise NonIntegerLambda(f"b={b}, k={k}, v={v}, t={t}: {num}/{den} is not an integer")
    return lam


def blocks_of_weight(
    spec: CodeSpec, field: Field, weight: int, expected_count: int | None = None
) -> Iterator[int]:
    """Stream the supports of all weight-i codewords as bitmask ints.

    Distinct codewords of a binary code have distinct supports, and span
    enumeration never repeats a codeword, so the stream needs no dedup.
    """
    basis = generator_basis(spec, field)
    count = 0
    for rows in stream_weight_class(basis, spec.length, weight):
        for row in rows:
            yield packed_row_to_int(row)
        count += len(rows)
    if count == 0:
        raise EmptyWeightClass(f"no codeword of weight {weight} in {spec.label()}")
    if expected_count is not None and count != expected_count:
        raise AssertionError(f"weight {weight}: streamed {count} blocks, expected {expected_count}")


def _blocks_to_bits(chunk: list[int], v: int) -> np.ndarray:
    nbytes = (v + 7) // 8
    buf = b"".join(x.to_bytes(nbytes, "little") for x in chunk)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(chunk), nbytes)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :v]


def _colex_rank3(a: int, b: int, c: int) -> int:
    return comb(c, 3) + comb(b, 2) + a


def _colex_unrank3(rank: int) -> tuple[int, int, int]:
    c = 2
    while comb(c + 1, 3) <= rank:
        c += 1
    rank -= comb(c, 3)
    b = 1
    while comb(b + 1, 2) <= rank:
        b += 1
    return rank - comb(b, 2), b, c


def verify_t_design(blocks: Iterable[int], v: int, t: int, expected_b: int | None = None) -> DesignReport:
    """Count every t-subset's coverage over the block stream and test constancy.

    Returns a verified report with the constant lambda, or an unverified one
    whose witness holds two t-subsets covered a different number of times.
    Raises TrivialDesign when the block size is t or v.
    """
    if t not in (2, 3):
        raise ValueError(f"t must be 2 or 3, got {t}")
    k = None
    b = 0
    gram = np.zeros((v, v), dtype=np.float64) if t == 2 else None
    triple = np.zeros(comb(v, 3), dtype=np.int64) if t == 3 else None

    chunk: list[int] = []

    def flush():
        nonlocal k, b
        if not chunk:
            return
        bits = _blocks_to_bits(chunk, v)
        sizes = bits.sum(axis=1)
        if k is None:
            k = int(sizes[0])
        if not np.all(sizes == k):
            raise ValueError("blocks of unequal size in one weight class")
        b += len(chunk)
        if t == 2:
            m = bits.astype(np.float64)
            gram[...] += m.T @ m
        else:
            for mask in chunk:
                support = []
                x = mask
                while x:
                    low = x & -x
                    support.append(low.bit_length() - 1)
                    x ^= low
                for i, j, kk in combinations(support, 3):
                    triple[_colex_rank3(i, j, kk)] += 1
        chunk.clear()

    for mask in blocks:
        chunk.append(mask)
        if len(chunk) >= _CHUNK:
            flush()
    flush()

    if b == 0:
        raise EmptyWeightClass("empty block stream")
    if expected_b is not None and b != expected_b:
        raise AssertionError(f"streamed {b} blocks, expected {expected_b}")
    if k in (t, v):
        raise TrivialDesign(f"block size {k} with t={t}, v={v} is trivial")

    if t == 2:
        counts = np.rint(gram).astype(np.int64)
        assert np.array_equal(counts.astype(np.float64), gram), "pair counts exceeded exact range"
        iu = np.triu_indices(v, 1)
        vals = counts[iu]
    else:
        vals = triple

    # conservation: every block contributes exactly C(k, t) subset hits
    assert int(vals.sum()) == b * comb(k, t), "t-subset count conservation failed"

    lam = int(vals[0])
    if np.all(vals == lam):
        assert b * comb(k, t) == lam * comb(v, t)
        return DesignReport(t=t, v=v, k=k, b=b, lam=lam, verified=True)

    other = int(np.argmax(vals != lam))
    if t == 2:
        w1 = (int(iu[0][0]), int(iu[1][0]), lam)
        w2 = (int(iu[0][other]), int(iu[1][other]), int(vals[other]))
    else:
        w1 = (*_colex_unrank3(0), lam)
        w2 = (*_colex_unrank3(other), int(vals[other]))
    return DesignReport(t=t, v=v, k=k, b=b, lam=None, verified=False, witness=(w1, w2))


def theorem_lambda_c1(s: int, i: int) -> int:
    """Closed-form lambda for family c1: the table count fed through the
    design identity (the published per-weight formulas reduce to this)."""
    dist = closed_form_c1(s)
    v = dist.length
    if i not in dist.entries or i in (0, v):
        raise InapplicableParameters(f"weight {i} is not a nontrivial class for c1(s={s})")
    return lambda_from_identity(dist.entries[i], i, v, 2)


def theorem_lambda_c2(s: int, l: int, i: int) -> int:
    """Closed-form lambda for family c2, dispatching on d' internally."""
    dist = closed_form_c2_extended(s, l)
    v = dist.length
    if i not in dist.entries or i in (0, v):
        raise InapplicableParameters(f"weight {i} is not a nontrivial class for c2(s={s}, l={l})")
    return lambda_from_identity(dist.entries[i], i, v, 2)


def _theorem_lambda(spec: CodeSpec, t: int, i: int) -> int | None:
    if t != 2:
        return None
    try:
        if spec.family == "c1":
            return theorem_lambda_c1(spec.s, i)
        return theorem_lambda_c2(spec.s, spec.l, i)
    except InapplicableParameters:
        return None


def full_design_report(
    spec: CodeSpec,
    field: Field,
    t: int = 2,
    threads: int = 1,
    exhaustive: bool = False,
    weights: list[int] | None = None,
) -> list[DesignReport]:
    """Verify every nontrivial weight class, cross-checked against theorem lambdas.

    Classes costing more than COST_GATE t-subset increments are skipped
    unless exhaustive is set.  Weight 0 and the full-support class are
    excluded as trivial.
    """
    dist = weight_distribution(spec, field, threads)
    v = spec.length
    targets = [w for w in dist.weights() if w not in (0, v)]
    if weights is not None:
        missing = set(weights) - set(targets)
        if missing:
            raise EmptyWeightClass(f"no nontrivial class at weights {sorted(missing)}")
        targets = [w for w in targets if w in set(weights)]

    reports = []
    for w in targets:
        b = dist.entries[w]
        theorem = _theorem_lambda(spec, t, w)
        if not exhaustive and b * comb(w, t) > COST_GATE:
            reports.append(
                DesignReport(
                    t=t, v=v, k=w, b=b, lam=None, verified=False,
                    theorem_lambda=theorem, match=None, skipped=True,
                )
            )
            continue
        report = verify_t_design(blocks_of_weight(spec, field, w, expected_count=b), v, t, expected_b=b)
        report.theorem_lambda = theorem
        if theorem is not None and report.lam is not None:
            report.match = report.lam == theorem
        reports.append(report)
    return reports

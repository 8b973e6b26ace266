from __future__ import annotations

from fractions import Fraction

import pytest

from designforge import (
    CodeSpec,
    InapplicableParameters,
    NonIntegerCount,
    OddSum,
    WeightCollision,
    WeightDistribution,
    ZeroForm,
    build_cyclic_codeword_c1,
    closed_form_c1,
    closed_form_c2_cyclic,
    closed_form_c2_extended,
    cyclic_weight_distribution,
    exp_sum,
    extend_distribution,
    pless_verify,
    quadform_rank,
    weight_distribution,
    weight_from_sum,
)
from designforge.spectrum import _as_count, exp_sum_grid
from ref_gf2 import ref_exp_sum

M4_ENUMERATOR = {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1}
C1_S3_ENUMERATOR = {0: 1, 16: 252, 24: 37632, 28: 107520, 32: 233478,
                    36: 107520, 40: 37632, 48: 252, 64: 1}
C2_32_ENUMERATOR = {0: 1, 24: 5040, 28: 12544, 32: 30366, 36: 12544, 40: 5040, 64: 1}
C2_31_ENUMERATOR = {0: 1, 16: 84, 24: 3360, 28: 17920, 32: 22806,
                    36: 17920, 40: 3360, 48: 84, 64: 1}


def test_golden_enumerators_small(f4, f6):
    d = weight_distribution(CodeSpec("c1", 2), f4)
    assert (d.entries, d.dimension) == (M4_ENUMERATOR, 11)
    d = weight_distribution(CodeSpec("c2", 2, 1), f4)
    assert (d.entries, d.dimension) == (M4_ENUMERATOR, 11)
    d = weight_distribution(CodeSpec("c1", 3), f6)
    assert (d.entries, d.dimension) == (C1_S3_ENUMERATOR, 19)
    assert d.min_distance() == 16
    d = weight_distribution(CodeSpec("c2", 3, 2), f6)
    assert (d.entries, d.dimension) == (C2_32_ENUMERATOR, 16)
    d = weight_distribution(CodeSpec("c2", 3, 1), f6)
    assert (d.entries, d.dimension) == (C2_31_ENUMERATOR, 16)


def test_palindrome_symmetry(f6):
    d = weight_distribution(CodeSpec("c2", 3, 1), f6)
    assert all(d.entries[w] == d.entries[64 - w] for w in d.entries)


def test_closed_form_c1_rows():
    d = closed_form_c1(3)
    assert d.entries == C1_S3_ENUMERATOR
    assert (d.length, d.dimension) == (64, 19)
    d4 = closed_form_c1(4)
    assert d4.entries[96] == 17136
    assert d4.entries[128] == 15137310
    assert d4.total() == 1 << 25
    with pytest.raises(InapplicableParameters):
        closed_form_c1(2)


def test_closed_form_c1_matches_enumeration(f6):
    assert closed_form_c1(3) == weight_distribution(CodeSpec("c1", 3), f6)


def test_closed_form_c2_rows():
    assert closed_form_c2_extended(3, 2).entries == C2_32_ENUMERATOR
    assert closed_form_c2_extended(3, 1).entries == C2_31_ENUMERATOR
    assert closed_form_c2_extended(2, 1).entries == M4_ENUMERATOR
    assert closed_form_c2_extended(2, 1).entries[8] == 870


def test_closed_form_c2_matches_enumeration(f4, f6):
    for s, l in [(2, 1), (3, 1), (3, 2)]:
        field = f4 if s == 2 else f6
        assert closed_form_c2_extended(s, l) == weight_distribution(CodeSpec("c2", s, l), field)


def test_closed_form_c2_cyclic_matches_enumeration(f4, f6):
    for s, l in [(2, 1), (3, 1), (3, 2)]:
        field = f4 if s == 2 else f6
        assert closed_form_c2_cyclic(s, l) == cyclic_weight_distribution(CodeSpec("c2", s, l), field)


def test_closed_form_extension_identity():
    # pure closed forms: extending the cyclic table gives the extended table
    for s in range(2, 7):
        for l in range(1, s):
            assert extend_distribution(closed_form_c2_cyclic(s, l)) == closed_form_c2_extended(s, l)


def test_cyclic_c2_sum_checks():
    assert closed_form_c2_cyclic(3, 1).total() == 1 << 15
    assert closed_form_c2_cyclic(3, 2).total() == 1 << 15


def test_non_integer_count_tripwire():
    with pytest.raises(NonIntegerCount):
        _as_count(Fraction(1, 3), "bogus row")
    with pytest.raises(NonIntegerCount):
        _as_count(Fraction(-2), "negative row")


def test_extend_distribution_zero_code():
    ext = extend_distribution(WeightDistribution({0: 1}, 63, 0))
    assert ext.entries == {0: 1, 64: 1}
    assert (ext.length, ext.dimension) == (64, 1)


def test_extend_distribution_cyclic_c1(f6):
    cyc = cyclic_weight_distribution(CodeSpec("c1", 3), f6)
    assert extend_distribution(cyc).entries == C1_S3_ENUMERATOR


def test_extend_weight_collision():
    with pytest.raises(WeightCollision):
        extend_distribution(WeightDistribution({0: 1, 3: 1}, 63, 1))


def test_exp_sum_trivial(f4, f6):
    assert exp_sum(f4, 0, 0, 0) == 16
    assert exp_sum(f6, 0, 0, 0) == 64
    for c in range(1, 16):
        assert exp_sum(f4, 0, 0, c) == 0


def test_exp_sum_against_reference(f4):
    # direct 16-term summation with an independent field implementation
    for a in range(16):
        for b in range(0, 16, 3):
            for c in range(0, 16, 5):
                assert exp_sum(f4, a, b, c) == ref_exp_sum(a, b, c, f4.poly, 4)


def test_exp_sum_grid(f4, f6):
    grid = exp_sum_grid(f4)
    for a, b, c in [(1, 0, 0), (3, 7, 9), (0, 0, 5), (15, 15, 15)]:
        assert grid[a, b, c] == exp_sum(f4, a, b, c)
    grid6 = exp_sum_grid(f6)
    for a, b, c in [(1, 2, 3), (63, 0, 1), (0, 17, 40)]:
        assert grid6[a, b, c] == exp_sum(f6, a, b, c)


def test_quadform_examples(f6, f8):
    p = quadform_rank(f8, 1, 0)
    assert (p.kernel_size, p.rank) == (16, 4)  # kernel is the GF(16) subfield
    p = quadform_rank(f6, 0, 1)
    assert (p.kernel_size, p.rank) == (4, 4)  # {0} plus the three sixth roots of 1
    with pytest.raises(ZeroForm):
        quadform_rank(f6, 0, 0)


def test_quadform_rank_range_exhaustive(f4):
    for a in range(16):
        for b in range(16):
            if (a, b) == (0, 0):
                continue
            p = quadform_rank(f4, a, b)
            assert p.rank in (4, 2, 0)
            assert p.kernel_size == 1 << (4 - p.rank)


def test_exp_sum_value_set_m4(f4):
    grid = exp_sum_grid(f4)
    for a in range(16):
        for b in range(16):
            if (a, b) == (0, 0):
                continue
            mag = 1 << (4 - quadform_rank(f4, a, b).rank // 2)
            assert {int(v) for v in grid[a, b]} <= {0, mag, -mag}


def test_weight_from_sum(f4):
    assert weight_from_sum(0, 3) == 32
    assert weight_from_sum(16, 3) == 24  # S = 2^(s+1) row
    assert weight_from_sum(16, 2) == 0  # the all-x-plus-one case S = q
    with pytest.raises(OddSum):
        weight_from_sum(3, 2)


def test_weight_agreement_m4(f4):
    grid = exp_sum_grid(f4)
    for a in range(16):
        for b in range(16):
            for c in range(16):
                w = build_cyclic_codeword_c1(f4, a, b, c).bit_count()
                assert w == weight_from_sum(int(grid[a, b, c]), 2)


def test_pless_cyclic_c1_s3(f6):
    cyc = cyclic_weight_distribution(CodeSpec("c1", 3), f6)
    assert (cyc.length, cyc.dimension) == (63, 18)
    assert bool(pless_verify(cyc, 63, 18))


def test_pless_detects_perturbation(f6):
    cyc = cyclic_weight_distribution(CodeSpec("c1", 3), f6)
    bad = dict(cyc.entries)
    bad[16] += 1
    res = pless_verify(WeightDistribution(bad, 63, 18), 63, 18)
    assert not res
    assert res.first_failure[0] == 1  # sum A_i = 2^k is the first to break


def test_distribution_json_serialization(f4):
    d = weight_distribution(CodeSpec("c1", 2), f4)
    obj = d.to_json_obj()
    assert obj["length"] == 16 and obj["dimension"] == 11
    assert obj["weights"][1] == {"w": 4, "count": "140"}

from fractions import Fraction
from math import comb

import pytest

from hkdual.llv import (
    KUM2_B2,
    HighestWeight,
    Summand,
    betti_table,
    dual_kum2_decomposition,
    kum2_decomposition,
    reduced_middle_dimension,
    spin_summand,
    trivial_summand,
    verbitsky_profile,
    weyl_dim,
)
from oracles import gt_dim


def dominant_weights(series, rank, max_sum_doubled):
    """All dominant doubled weights with sum of |entries| at most the bound."""
    out = []

    def rec(prefix, remaining, parity):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            if series == "D" and prefix[-1] > 0:
                out.append(tuple(prefix[:-1] + [-prefix[-1]]))
            return
        hi = prefix[-1] if prefix else remaining
        for x in range(min(hi, remaining), -1, -1):
            if x % 2 == parity:
                rec(prefix + [x], remaining - x, parity)

    for parity in (0, 1):
        rec([], max_sum_doubled, parity)
    return out


def _n(series, rank):
    return 2 * rank + 1 if series == "B" else 2 * rank


@pytest.mark.parametrize("series,rank", [(s, r) for s in "BD" for r in range(1, 6) if not (s == "D" and r < 2)])
def test_weyl_dim_matches_gelfand_tsetlin(series, rank):
    ws = dominant_weights(series, rank, 6)
    assert ws
    for w in ws:
        hw = HighestWeight(series, w)
        assert weyl_dim(hw) == gt_dim(_n(series, rank), w), (series, w)


@pytest.mark.parametrize(
    "N,weight,dim",
    [
        (9, (1,), 9),
        (9, (1, 1), 36),
        (9, (2,), 44),
        (7, (2,), 27),
        (9, ("1/2",) * 4, 16),
        (8, ("1/2",) * 4, 8),
        (8, ("1/2", "1/2", "1/2", "-1/2"), 8),
        (10, (1, 1), 45),
        (5, (2,), 14),
    ],
)
def test_weyl_dim_known_values(N, weight, dim):
    assert weyl_dim(HighestWeight.for_dimension(N, *weight)) == dim


def test_highest_weight_validation():
    with pytest.raises(ValueError):
        HighestWeight.of("B", 1, 2)
    with pytest.raises(ValueError):
        HighestWeight.of("B", 1, "1/2")
    with pytest.raises(ValueError):
        HighestWeight.of("B", "1/3")
    with pytest.raises(ValueError):
        HighestWeight.of("B", 1, -1)
    with pytest.raises(ValueError):
        HighestWeight("C", (0,))
    with pytest.raises(ValueError):
        HighestWeight("B", ())
    w = HighestWeight.of("D", 1, -1)
    assert w.weight == (Fraction(1), Fraction(-1)) and w.algebra == "so(4)"


@pytest.mark.parametrize("b2,n", [(7, 2), (23, 2), (5, 1), (7, 3), (23, 3)])
def test_verbitsky_profile(b2, n):
    prof = verbitsky_profile(b2, n)
    assert prof.is_symmetric(4 * n)
    assert prof.dims[0] == 1 and prof.dims[2] == b2
    assert prof.dims[2 * n] == comb(b2 + n - 1, n)


def test_verbitsky_total_matches_weyl_for_n2():
    for b2 in (3, 7, 23):
        prof = verbitsky_profile(b2, 2)
        assert prof.total == weyl_dim(HighestWeight.for_dimension(b2 + 2, 2))


def test_verbitsky_profile_validation():
    with pytest.raises(ValueError):
        verbitsky_profile(0, 2)


def test_kum2_totals():
    bt = betti_table(kum2_decomposition())
    assert bt.betti == (1, 0, 7, 8, 108, 8, 7, 0, 1)
    assert bt.total == 140
    assert bt.euler == 108
    assert bt.betti[4] == reduced_middle_dimension(KUM2_B2, 81) == 27 + 81


def test_dual_kum2_totals():
    bt = betti_table(dual_kum2_decomposition())
    assert bt.betti == (1, 0, 7, 8, 36, 8, 7, 0, 1)
    assert bt.total == 68
    assert bt.euler == 36


def test_betti_table_validation():
    bad = Summand(None, 1, {0: 2})
    with pytest.raises(ValueError):
        betti_table([bad])
    with pytest.raises(ValueError):
        betti_table([trivial_summand(1, 5)], top=4)
    s = spin_summand(4, "B", (3, 5))
    assert s.placement == {3: 8, 5: 8}

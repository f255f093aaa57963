import random
from itertools import combinations

import pytest

from bottsamelson import (
    TooLarge,
    ToricDivisor,
    Word,
    all_sign_vectors,
    build_bott_data,
    cartan_of_type,
    cech_complex,
    cech_table,
    cech_weight,
    classify_weight,
    cohomology_table,
    weight_box,
)
from conftest import random_coeffs, random_instance

P1 = build_bott_data(cartan_of_type("A", 1), Word((1,)))
SL3 = build_bott_data(cartan_of_type("A", 2), Word((1, 2)))


def test_line_tables_via_cech():
    assert cech_table(P1, ToricDivisor.upper((3,))).dims == (4, 0)
    assert cech_table(P1, ToricDivisor.upper((-2,))).dims == (0, 1)
    assert cech_table(P1, ToricDivisor.upper((0,))).dims == (1, 0)


def test_cech_weight_on_the_line():
    d = ToricDivisor.upper((3,))
    assert cech_weight(P1, d, (-2,)) == {0: 1}
    assert cech_weight(P1, d, (1,)) == {}
    assert cech_weight(P1, ToricDivisor.upper((-2,)), (1,)) == {1: 1}


def test_common_rays_of_chart_subsets():
    d = ToricDivisor.upper((0, 0))
    cc = cech_complex(SL3, d, (0, 0))
    cover = cc.cover
    assert cover == all_sign_vectors(2)
    # a single chart keeps all of its rays
    one = cover.index((1, -1))
    assert cc.common_rays((one,)) == ((1, 1), (2, -1))
    # two charts differing only at index 2 share the index-1 ray
    other = cover.index((1, 1))
    assert cc.common_rays((one, other)) == ((1, 1),)
    # opposite charts share nothing, so every weight is active there
    opposite = cover.index((-1, 1))
    assert cc.common_rays((one, opposite)) == ()
    assert cc.active((one, opposite))


def test_activity_is_monotone_under_enlarging_subsets():
    rng = random.Random(41)
    for _ in range(20):
        bott, a = random_instance(rng, max_rank=3, max_length=3, coeff_bound=3)
        divisor = ToricDivisor.upper(a)
        m = random_coeffs(rng, bott.length, 4)
        cc = cech_complex(bott, divisor, m)
        charts = range(len(cc.cover))
        for size in (1, 2):
            for s in combinations(charts, size):
                if not cc.active(s):
                    continue
                extras = [t for t in charts if t not in s]
                for extra in extras:
                    assert cc.active(tuple(sorted(s + (extra,))))


def test_cover_order_does_not_change_dimensions():
    rng = random.Random(42)
    for _ in range(10):
        bott, a = random_instance(rng, max_rank=2, max_length=3, coeff_bound=3)
        divisor = ToricDivisor.upper(a)
        m = random_coeffs(rng, bott.length, 3)
        default = cech_weight(bott, divisor, m)
        cover = list(all_sign_vectors(bott.length))
        rng.shuffle(cover)
        assert cech_weight(bott, divisor, m, cover=tuple(cover)) == default


def test_cech_matches_closed_form_per_weight():
    rng = random.Random(43)
    for _ in range(15):
        bott, a = random_instance(rng, max_rank=3, max_length=3,
                                  coeff_bound=3, box_limit=500)
        divisor = ToricDivisor.upper(a)
        for m in weight_box(bott, divisor).points():
            assert cech_weight(bott, divisor, m) == \
                classify_weight(bott, divisor, m).dims()


def test_cech_tables_match_closed_form_with_nonzero_b():
    rng = random.Random(44)
    checked = 0
    while checked < 8:
        bott, a = random_instance(rng, max_rank=3, max_length=3, coeff_bound=2)
        b = random_coeffs(rng, bott.length, 2)
        divisor = ToricDivisor(a=a, b=b)
        if weight_box(bott, divisor).num_points > 400:
            continue
        assert cech_table(bott, divisor).dims == \
            cohomology_table(bott, divisor).dims
        checked += 1


def test_dimension_limit_is_refused():
    big = build_bott_data(cartan_of_type("A", 1), Word((1,) * 5))
    d = ToricDivisor.upper((0,) * 5)
    with pytest.raises(TooLarge):
        cech_weight(big, d, (0,) * 5)
    with pytest.raises(TooLarge):
        cech_complex(big, d, (0,) * 5)
    with pytest.raises(TooLarge):
        cech_table(big, d)


def test_fully_active_weight_has_one_global_section():
    cc = cech_complex(SL3, ToricDivisor.upper((0, 0)), (0, 0))
    assert cc.dims() == {0: 1}
    for size in (1, 2, 3, 4):
        for s in combinations(range(4), size):
            assert cc.active(s)

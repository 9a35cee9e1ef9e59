"""Secant dimension engines, expected dimensions, and the generic rank map."""

from math import comb

import pytest

from apolar import secant
from apolar.secant import (Segre, Veronese, big_waring_g, defect_report,
                           expected_dim, terracini_dim_segre,
                           terracini_dim_veronese)


def test_ambient_and_variety_dims():
    v = Veronese(2, 4)
    assert v.ambient_dim == 14 and v.variety_dim == 2
    s = Segre((1, 1, 1, 1))
    assert s.ambient_dim == 15 and s.variety_dim == 4


def test_expected_dim_examples():
    assert expected_dim(Veronese(2, 2), 2) == 5
    assert expected_dim(Veronese(2, 2), 1) == 2
    assert expected_dim(Segre((1, 1, 1)), 1) == 3
    # honest parameter count: 3 * 4 + 2 = 14, capped by the ambient 15
    assert expected_dim(Segre((1, 1, 1, 1)), 3) == 14
    with pytest.raises(ValueError):
        expected_dim(Veronese(1, 1), 0)


def test_veronese_dimensions_small():
    assert terracini_dim_veronese(2, 2, 2, seed=0, trials=3).computed_dim == 4
    assert terracini_dim_veronese(1, 3, 2, seed=0, trials=3).computed_dim == 3
    assert terracini_dim_veronese(2, 4, 5, seed=0, trials=3).computed_dim == 13


def test_segre_dimensions_small():
    assert terracini_dim_segre((1, 1, 1), 2, seed=0, trials=3).computed_dim == 7
    report = terracini_dim_segre((1, 1, 1, 1), 3, seed=0, trials=3)
    # the four-factor product of lines is honestly defective here: three
    # distinct flattening determinants vanish, so the dimension is 13
    assert report.computed_dim == 13
    assert report.defect == 1
    assert report.certified


def test_defect_reports():
    r = defect_report(Veronese(2, 2), 2, seed=0, trials=3)
    assert (r.computed_dim, r.expected_dim, r.defect) == (4, 5, 1)
    assert r.certified
    r = defect_report(Veronese(3, 2), 2, seed=0, trials=3)
    assert (r.computed_dim, r.expected_dim, r.defect) == (6, 7, 1)
    r = defect_report(Segre((1, 1, 1)), 2, seed=0, trials=3)
    assert r.defect == 0 and r.certified


def test_big_waring_g():
    assert big_waring_g(2, 4) == 6
    assert big_waring_g(3, 4) == 10
    assert big_waring_g(4, 3) == 8
    assert big_waring_g(4, 4) == 15
    assert big_waring_g(1, 3) == 2
    for n in range(1, 6):
        assert big_waring_g(n, 2) == n + 1
    for d in range(1, 10):
        assert big_waring_g(1, d) == (d + 2) // 2
    with pytest.raises(ValueError):
        big_waring_g(0, 3)


def test_monotonicity_in_s():
    prev = -1
    for s in range(1, 7):
        cur = terracini_dim_veronese(2, 3, s, seed=5, trials=2).computed_dim
        if prev >= 0:
            assert prev <= cur <= prev + 3
        assert cur <= expected_dim(Veronese(2, 3), s)
        prev = cur


def test_quadric_veronese_rank_stratification():
    for n in range(1, 5):
        for s in range(1, n + 2):
            want = comb(n + 2, 2) - comb(n + 2 - s, 2) - 1
            got = terracini_dim_veronese(n, 2, s, seed=1, trials=2).computed_dim
            assert got == want


def test_trials_aggregation_is_monotone():
    one = terracini_dim_veronese(3, 3, 4, seed=9, trials=1).computed_dim
    three = terracini_dim_veronese(3, 3, 4, seed=9, trials=3).computed_dim
    assert one <= three


def test_determinism_given_seed():
    a = terracini_dim_segre((2, 2), 3, seed=1234, trials=3)
    b = terracini_dim_segre((2, 2), 3, seed=1234, trials=3)
    assert a == b


def test_modular_mode_never_exceeds_exact():
    for (n, d, s) in [(2, 3, 4), (3, 2, 2), (2, 4, 5)]:
        exact = terracini_dim_veronese(n, d, s, seed=3, trials=2).computed_dim
        modular = terracini_dim_veronese(n, d, s, seed=3, trials=2,
                                         arithmetic=secant.MODULAR).computed_dim
        assert modular <= exact
    for (dims, s) in [((1, 1, 1), 2), ((2, 2), 3)]:
        exact = terracini_dim_segre(dims, s, seed=3, trials=2).computed_dim
        modular = terracini_dim_segre(dims, s, seed=3, trials=2,
                                      arithmetic=secant.MODULAR).computed_dim
        assert modular <= exact


def test_fill_threshold_matches_generic_rank_small():
    for n in range(1, 3):
        for d in range(2, 4):
            g = big_waring_g(n, d)
            ambient = Veronese(n, d).ambient_dim
            assert terracini_dim_veronese(n, d, g, seed=7, trials=2).computed_dim == ambient
            if g > 1:
                below = terracini_dim_veronese(n, d, g - 1, seed=7, trials=2).computed_dim
                assert below < ambient


def test_known_true_dim_table():
    assert secant.known_true_dim(Veronese(2, 4), 5) == 13
    assert secant.known_true_dim(Veronese(4, 3), 7) == 33
    assert secant.known_true_dim(Segre((1, 1, 1, 1)), 3) == 13
    assert secant.known_true_dim(Veronese(3, 2), 2) == 6

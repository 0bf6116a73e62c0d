import math

import pytest

import lcmquad


def test_constant_x2_plus_1():
    b = lcmquad.B_f((1, 0, 1))
    assert abs(b.B - -0.06627563421306070638) < 1e-12
    assert b.d == -4
    assert b.max_tail_bound <= 1e-12


def test_exact_and_log():
    assert lcmquad.lcm_exact("1,0,1", 3) == 10
    assert lcmquad.lcm_exact(lcmquad.QuadPoly(1, 1, 1), 3) == 273
    assert lcmquad.log_lcm((1, 0, 1), 3).log_lcm == pytest.approx(math.log(10))
    assert lcmquad.beta_map((1, 0, 1), 7)[5] == 2


def test_beta_map_matches_exact():
    f = (2, -1, -2)
    value = 1
    for p, e in lcmquad.beta_map(f, 300).items():
        value *= p**e
    assert value == lcmquad.lcm_exact(f, 300)


def test_error_term_and_ladder():
    assert abs(lcmquad.error_term((1, 0, 1), 100) - -18) <= 1
    rows = lcmquad.log_lcm_ladder((1, 0, 1), [100, 1000], workers=2)
    assert [r.n for r in rows] == [100, 1000]


def test_classify_and_counts():
    p = lcmquad.classify((1, 0, -2))
    assert (p.D, p.d, p.shift) == (8, 8, 1)
    assert p.irreducible
    assert lcmquad.solution_count((1, 0, 1), 5, 7) == 2
    assert lcmquad.kronecker(-4, 5) == 1


def test_equidistribution():
    samples = lcmquad.root_samples((1, 0, 1), 100)
    assert len(samples) == 23
    d = lcmquad.star_discrepancy([s[2] for s in samples])
    assert 0 < d < 1
    assert lcmquad.t_sums((1, 0, 1), 1000).T1 == 0.0
    assert lcmquad.pairing_check((2, 1, 1), 1000) == 0


def test_reducible():
    assert lcmquad.log_lcm_reducible((1, 3, 2), 4) == pytest.approx(math.log(60))
    assert lcmquad.ap_constant(4, 1) == pytest.approx(8 / 3)


def test_errors():
    with pytest.raises(lcmquad.Error):
        lcmquad.B_f((1, 0, -1))
    with pytest.raises(lcmquad.Error):
        lcmquad.QuadPoly(0, 1, 1)

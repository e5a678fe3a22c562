import numpy as np
import pytest

from dsegap import ParameterError, build_grid
from dsegap.grid import merge_bracket_indices


def test_hand_worked_three_by_two_grid():
    # external [1, e^4] with 3 points: {1, e^2, e^4}; radial GL(2) in
    # s over [0, 4]: s = 2 -/+ 2/sqrt(3), q2 = exp(s) ~ {2.294, 23.14}
    g = build_grid(3, 2, 4, 1.0, np.exp(4.0))
    assert g.p2_ext == pytest.approx([1.0, np.exp(2.0), np.exp(4.0)], rel=1e-14)
    assert g.s_nodes == pytest.approx([2.0 - 2.0 / np.sqrt(3.0), 2.0 + 2.0 / np.sqrt(3.0)], rel=1e-14)
    assert g.q2_int == pytest.approx(
        [np.exp(2.0 - 2.0 / np.sqrt(3.0)), np.exp(2.0 + 2.0 / np.sqrt(3.0))], rel=1e-14)
    assert g.q2_int == pytest.approx([2.3286751, 23.4460149], rel=1e-6)
    # q2[0] in (p2[0], p2[1]), q2[1] in (p2[1], p2[2])
    assert list(g.bracket_idx) == [0, 1]


def test_bracket_indices_match_binary_search():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(2, 60))
        m = int(rng.integers(2, 60))
        p2 = np.sort(rng.uniform(0.1, 50.0, size=n))
        p2 += np.arange(n) * 1e-9  # guarantee strictly increasing
        q2 = np.sort(rng.uniform(0.05, 55.0, size=m))
        idx = merge_bracket_indices(p2, q2)
        ref = np.clip(np.searchsorted(p2, q2, side="right") - 1, -1, n - 1)
        assert np.array_equal(idx, ref)
        assert np.all(np.diff(idx) >= 0)


def test_bracket_invariant_on_production_grid():
    g = build_grid(150, 100, 32, 1e-6, 1e4)
    n = g.n_ext
    for j in range(g.m_rad):
        i = g.bracket_idx[j]
        if i < 0:
            assert g.q2_int[j] < g.p2_ext[0]
        elif i < n - 1:
            assert g.p2_ext[i] <= g.q2_int[j] < g.p2_ext[i + 1]
        else:
            assert g.q2_int[j] >= g.p2_ext[n - 1]


def test_exact_float_collision_is_shifted_and_stays_equivalent():
    # exp() can round an internal s-node onto the same double as an external
    # node; construction must detect it, shift, and keep both interpolation
    # strategies in bitwise agreement afterwards
    from dsegap import interp_indexed, interp_search

    g = build_grid(7, 25, 1, 0.0020367687289653013, 593.0604288644452)
    rel = np.abs(g.q2_int[:, None] - g.p2_ext[None, :]) / np.maximum(
        g.q2_int[:, None], g.p2_ext[None, :])
    assert rel.min() > 1e-12
    values = np.sin(np.arange(7.0))
    for j in range(g.m_rad):
        assert interp_indexed(g, values, j) == interp_search(g.p2_ext, values, g.q2_int[j])


def test_no_coincidence_on_random_sizes():
    rng = np.random.default_rng(11)
    pairs = [(int(rng.integers(2, 301)), int(rng.integers(2, 301))) for _ in range(1000)]
    for n, m in pairs:
        g = build_grid(n, m, 1, 1e-6, 1e4)
        rel = np.abs(g.q2_int[:, None] - g.p2_ext[None, :]) / np.maximum(
            g.q2_int[:, None], g.p2_ext[None, :])
        assert rel.min() > 1e-12


def test_table_one_grid_builds_cleanly():
    g = build_grid(150, 100, 32, 1e-6, 1e4)
    assert g.n_ext == 150 and g.m_rad == 100 and g.m_ang == 32
    assert g.p2_ext[0] == pytest.approx(1e-6, rel=1e-12)
    assert g.p2_ext[-1] == pytest.approx(1e4, rel=1e-12)
    assert np.all(g.q2_int > 0)
    assert np.all(np.diff(g.p2_ext) > 0) and np.all(np.diff(g.q2_int) > 0)
    assert np.all(g.z_nodes > -1) and np.all(g.z_nodes < 1)


def test_grid_arrays_are_immutable():
    g = build_grid(10, 8, 4, 1e-2, 1e2)
    for arr in (g.p2_ext, g.q2_int, g.bracket_idx, g.z_nodes, g.z_weights, g.weight_jk):
        with pytest.raises(ValueError):
            arr[0] = 0.0


def test_build_grid_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        build_grid(1, 10, 4, 1e-2, 1e2)
    with pytest.raises(ParameterError):
        build_grid(10, 1, 4, 1e-2, 1e2)
    with pytest.raises(ParameterError):
        build_grid(10, 10, 0, 1e-2, 1e2)
    with pytest.raises(ParameterError):
        build_grid(10, 10, 4, 1e2, 1e-2)
    with pytest.raises(ParameterError):
        build_grid(10, 10, 4, -1.0, 1e2)

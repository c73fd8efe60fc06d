import numpy as np
import pytest

from spinsim import Spin
from spinsim.tables import (
    best_protocol2_cbits,
    noise_threshold,
    physical_xi_range,
    staircase_rows,
    table2_rows,
    table3_rows,
    xi_violation_windows,
)


def test_physical_xi_range():
    assert physical_xi_range(Spin(1)) == (1.0, 1.0)
    assert physical_xi_range(Spin(2)) == (0.0, 1.0)
    lo, hi = physical_xi_range(Spin(3))
    assert lo == pytest.approx(1 / 9)
    assert hi == 1.0


def test_xi_windows_spin_half_and_one():
    assert xi_violation_windows(Spin(1)) == [(1.0, 1.0)]
    windows = xi_violation_windows(Spin(2))
    assert len(windows) == 2
    (lo0, hi0), (lo1, hi1) = windows
    assert lo0 == pytest.approx(0.0)
    assert hi1 == pytest.approx(1.0)
    assert hi0 == pytest.approx(0.3177, abs=2e-3)
    assert lo1 == pytest.approx(0.7678, abs=2e-3)


def test_xi_window_spin_three_half():
    windows = xi_violation_windows(Spin(3))
    assert len(windows) == 1
    assert windows[0][0] == pytest.approx(0.824, abs=5e-3)
    assert windows[0][1] == pytest.approx(1.0)


def test_noise_thresholds():
    assert noise_threshold(Spin(1)) == 1.0
    assert noise_threshold(Spin(2)) == pytest.approx(0.696, abs=5e-3)
    assert noise_threshold(Spin(4)) == pytest.approx(0.321, abs=5e-3)


def test_table2_rows_within_tolerance():
    rows = table2_rows()
    assert [r["s"] for r in rows[:3]] == ["1/2", "1", "3/2"]
    for row in rows:
        tol = 1e-2 if row["s"] == "inf" else 1e-3
        assert row["abs_diff"] < tol


def test_table3_rows_within_tolerance():
    for row in table3_rows():
        assert row["abs_diff"] < 5e-3


def test_best_protocol2_cbits():
    assert best_protocol2_cbits(Spin.of(4)) == 2      # d = 9 = 3^2
    assert best_protocol2_cbits(Spin.of("3/2")) == 2  # d = 4 = 2^2 (or P=4, n=1)
    assert best_protocol2_cbits(Spin.of("1/2")) == 1
    assert best_protocol2_cbits(Spin.of(1)) == 1      # d = 3 prime
    assert best_protocol2_cbits(Spin.of(3)) == 2      # d = 7 prime, P=7 n=1


def test_staircase_rows():
    rows = staircase_rows("1/2", "3")
    assert [r["protocol1_cbits"] for r in rows] == [1, 1, 2, 2, 2, 2]
    assert [r["s"] for r in rows] == ["1/2", "1", "3/2", "2", "5/2", "3"]
    # the count jumps from n to n+1 when s + 1 crosses a power of two
    long_rows = staircase_rows("1/2", "8")
    by_s = {r["s"]: r["protocol1_cbits"] for r in long_rows}
    assert by_s["3"] == 2
    assert by_s["7/2"] == 3
    assert by_s["7"] == 3
    assert by_s["15/2"] == 4
    # s = 4: the P-adic protocol undercuts the binary one
    row4 = {r["s"]: r for r in long_rows}["4"]
    assert row4["protocol1_cbits"] == 3
    assert row4["protocol2_cbits"] == 2

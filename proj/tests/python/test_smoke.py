import numpy as np
import pytest

import dualspline as ds


def test_knot_vector():
    kv = ds.KnotVector(3, [(0.25, 1), (0.5, 2)])
    assert kv.dimension == 3 + 3 + 1
    assert len(kv.full) == 2 * 3 + 3 + 2
    assert kv.knot(-5) == 0.0 and kv.knot(99) == 1.0
    with pytest.raises(ValueError):
        ds.KnotVector(2, [(0.5, 3)])


def test_dual_matrix_inverts_gram():
    kv = ds.KnotVector.random(3, 5, 42)
    g = ds.gram(kv)
    d = ds.dual_matrix(kv)
    assert np.abs(d @ g - np.eye(kv.dimension)).max() <= 1e-8
    assert ds.duality_residual(kv) <= 1e-8


def test_legendre_norms():
    _, norms = ds.orthogonal_basis(ds.KnotVector.random(4, 6, 3))
    for i in range(5):
        assert abs(norms[i] - 1 / (2 * i + 1)) <= 1e-12


def test_clenshaw():
    # L_2(t) = 6t^2 - 6t + 1
    assert ds.clenshaw([0, 0, 1], 0.3) == pytest.approx(6 * 0.09 - 1.8 + 1)


def test_pear_reduce3():
    pear = ds.pear_curve()
    case = next(c for c in ds.pear_cases() if c["name"] == "reduce3")
    curve, report = ds.reduce_and_remove(pear, case["degree"], case["target"])
    assert curve.kv.degree == 3
    assert f"{report['e2']:.2e}" == "2.76e-03"
    assert f"{report['einf']:.2e}" == "3.41e-02"


def test_truncated_power_round_trip():
    kv = ds.KnotVector(2, [(0.3, 1), (0.6, 1)])
    pts = np.array([[0, 0], [1, 2], [2, -1], [3, 1], [4, 0]], dtype=float)
    curve = ds.SplineCurve(kv, pts)
    tp = ds.to_truncated_power(curve)
    for t in np.linspace(0, 1, 11):
        assert np.abs(tp(t) - curve(t)).max() <= 1e-9


def test_dual_truncated():
    d = ds.dual_truncated(1, [0.5])
    assert len(d) == 3
    assert d(0, 0.25) == pytest.approx(sum(d.psi[k, 0] * ds.shifted_legendre(k, 0.25) for k in range(2)))
    with pytest.raises(ValueError):
        ds.dual_truncated(2, [0.5, 0.5])

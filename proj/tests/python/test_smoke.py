import json

import numpy as np
import pytest

import meantransform as mt

SHIFT = np.array([[0, 1], [0, 0]], dtype=complex)


def ginibre(n, seed):
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def test_mean_of_shift_is_halved():
    np.testing.assert_allclose(mt.mean_transform(SHIFT), SHIFT / 2, atol=1e-15)


def test_mean_matches_numpy_polar_route():
    t = ginibre(5, 1)
    u, s, vh = np.linalg.svd(t)
    v = u @ vh
    p = vh.conj().T @ np.diag(s) @ vh
    np.testing.assert_allclose(mt.mean_transform(t), (v @ p + p @ v) / 2, atol=1e-10)


def test_polar_and_svd_roundtrip():
    t = ginibre(4, 2)
    v, p, rank = mt.polar_decompose(t)
    assert rank == 4
    np.testing.assert_allclose(v @ p, t, atol=1e-12)
    u, s, vh = mt.svd(t)
    np.testing.assert_allclose(u @ np.diag(s) @ vh, t, atol=1e-12)


def test_other_transforms():
    np.testing.assert_allclose(mt.aluthge_transform(SHIFT), np.zeros((2, 2)), atol=1e-15)
    np.testing.assert_allclose(mt.duggal_transform(SHIFT), np.zeros((2, 2)), atol=1e-15)
    a = ginibre(3, 3)
    np.testing.assert_allclose(mt.jordan_product(a, np.eye(3)), a, atol=1e-15)


def test_iterate_halves_shift():
    tr = mt.iterate_mean(SHIFT, max_steps=5)
    assert tr["steps"] == 5 and not tr["converged"]
    np.testing.assert_allclose(tr["deltas"], [2.0 ** -(k + 1) for k in range(5)])


def test_rank_one_formula_matches_numpy():
    rng = np.random.default_rng(4)
    x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    t = np.outer(x, y.conj())
    left = 0.5 * (x + (np.vdot(y, x) / np.vdot(y, y)) * y)
    expected = np.outer(left, y.conj())
    np.testing.assert_allclose(mt.rank_one_mean(x, y), expected, atol=1e-13)
    np.testing.assert_allclose(mt.mean_transform(t), expected, atol=1e-10)


def test_classifiers():
    v = mt.is_partial_isometry(np.diag([2.0, 0.0]).astype(complex))
    assert v["holds"] is False and v["verdict"] == "false"
    assert v["residual"] == pytest.approx(6.0)
    assert mt.is_partial_isometry(SHIFT)["holds"] is True
    assert mt.is_quasinormal(SHIFT)["holds"] is False
    assert mt.is_nilpotent2(SHIFT)["holds"] is True


def test_generate_is_seeded_and_certified():
    p = mt.generate("projection", 4, seed=3, rank=2)
    np.testing.assert_allclose(p @ p, p, atol=1e-12)
    np.testing.assert_allclose(np.trace(p).real, 2.0, atol=1e-12)
    np.testing.assert_array_equal(mt.generate("ginibre", 3, seed=9), mt.generate("ginibre", 3, seed=9))


def test_falsify_and_verify():
    report = mt.falsify("nilpotent_iff", dim=5, trials=50)
    assert report["failures"] == 0 and report["trials"] == 50
    bad = mt.falsify("mean_is_linear", dim=4, trials=20)
    assert bad["failures"] > 0 and bad["witness"][0]["label"] == "A"
    a = mt.verify("all", trials=5, dims=[3, 4])
    b = mt.verify("all", trials=5, dims=[3, 4])
    assert a["failures"] == 0
    assert json.dumps(a) == json.dumps(b)
    ids = {p["id"] for p in mt.properties()}
    assert {"forward_theorem", "mean_is_linear"} <= ids


def test_maps_and_theorem():
    eye = np.eye(3, dtype=complex)
    assert mt.commuting_residual(mt.scale_map(2), eye, eye) == pytest.approx(2.0, abs=1e-12)
    u = mt.generate("haar_unitary", 3, seed=1)
    a, b = ginibre(3, 5), ginibre(3, 6)
    assert mt.commuting_residual(mt.unitary_map(u), a, b) < 1e-9 * max(1, np.linalg.norm(a, 2) * np.linalg.norm(b, 2))
    assert mt.commuting_residual(mt.antiunitary_map(u), a, b) < 1e-9 * max(1, np.linalg.norm(a, 2) * np.linalg.norm(b, 2))
    np.testing.assert_allclose(mt.apply_phi(mt.antiunitary_map(eye), np.diag([1j, -1j, 0])),
                               np.diag([-1j, 1j, 0]))
    assert mt.verify_forward_theorem(3, trials=20)["failures"] == 0
    x = np.array([1, 0, 0], dtype=complex)
    xp = np.array([1, 1, 0], dtype=complex) / np.sqrt(2)
    assert mt.adjoint_counterexample(x, xp) == pytest.approx(0.25, abs=1e-12)


def test_input_errors_raise_value_error():
    with pytest.raises(ValueError):
        mt.mean_transform(np.zeros((2, 3), dtype=complex))
    with pytest.raises(ValueError):
        mt.verify_forward_theorem(2)
    with pytest.raises(ValueError):
        mt.falsify("no_such_property", dim=3)
    with pytest.raises(ValueError):
        mt.adjoint_counterexample(np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex))

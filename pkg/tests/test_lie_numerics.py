import math

import numpy as np
import pytest

from flagsheaf.lie_numerics import (
    BranchAmbiguityError,
    SkewHermitian,
    SpectrumVector,
    aligned_partner,
    check_interval_product,
    check_klyachko,
    check_pairing_bound,
    check_triangle,
    coroot_spectrum,
    eig_unitary,
    exp_skew,
    hermitian_eigs,
    jacobi_eigh,
    log_unitary_small,
    norm_spectrum,
    random_skew_hermitian,
    rescaled_to_bound,
    run_trials,
    sample_unitary_in_window,
    spectrum_pairing,
)


def test_skew_hermitian_validation():
    with pytest.raises(ValueError):
        SkewHermitian(np.eye(3))  # Hermitian, not skew
    with pytest.raises(ValueError):
        SkewHermitian(1j * np.eye(3))  # nonzero trace
    SkewHermitian(1j * np.diag([1.0, -1.0]))


def test_spectrum_vector_validation():
    with pytest.raises(ValueError):
        SpectrumVector(np.array([0.0, 1.0]))
    with pytest.raises(ValueError):
        SpectrumVector(np.array([1.0, 0.0]))
    s = SpectrumVector(np.array([1.0, 0.0, -1.0]))
    assert np.allclose(s.partial_sums(), [1.0, 1.0])


def test_jacobi_matches_lapack():
    rng = np.random.default_rng(0)
    for n in (2, 3, 5, 8):
        m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (m + m.conj().T) / 2
        w, u = jacobi_eigh(h)
        assert np.abs(h @ u - u @ np.diag(w)).max() < 1e-9
        assert np.abs(np.sort(w) - np.linalg.eigvalsh(h)).max() < 1e-10


def test_hermitian_eigs_zero_and_diagonal():
    z = SkewHermitian(np.zeros((3, 3)))
    spec, _ = hermitian_eigs(z)
    assert np.allclose(spec.lambdas, 0.0)
    a = SkewHermitian(1j * np.diag([0.5, -0.5]) * 2 * math.pi)
    spec, _ = hermitian_eigs(a)
    assert np.allclose(spec.lambdas, [math.pi, -math.pi])


def test_norm_conjugation_invariance():
    rng = np.random.default_rng(5)
    for n in (3, 5):
        a = random_skew_hermitian(n, rng)
        u = exp_skew(random_skew_hermitian(n, rng))
        b = SkewHermitian(u @ a.entries @ u.conj().T)
        drift = np.abs(
            norm_spectrum(a).lambdas - norm_spectrum(b).lambdas
        ).max()
        assert drift < 1e-8


def test_triangle_trivia():
    rng = np.random.default_rng(1)
    x = random_skew_hermitian(4, rng)
    zero = SkewHermitian(np.zeros((4, 4)))
    r = check_triangle(x, zero)
    assert r.ok and r.residual <= 1e-9
    r2 = check_triangle(x, SkewHermitian(-x.entries))
    assert r2.ok


def test_pairing_bound_cases():
    rng = np.random.default_rng(2)
    x = random_skew_hermitian(4, rng)
    self_pair = check_pairing_bound(x, x)
    assert self_pair.ok
    sx = norm_spectrum(x)
    assert abs(
        float(np.real(-np.trace(x.entries @ x.entries)))
        - spectrum_pairing(sx, sx)
    ) < 1e-9
    omega = random_skew_hermitian(4, rng)
    aligned = aligned_partner(omega, sx)
    r = check_pairing_bound(omega, aligned)
    assert r.ok


def test_klyachko_trivial_cases():
    rng = np.random.default_rng(3)
    n = 3
    bound = coroot_spectrum(n, 1).scale(0.9 / (100 * n))
    x = rescaled_to_bound(random_skew_hermitian(n, rng), bound)
    zero = SkewHermitian(np.zeros((n, n)))
    r = check_klyachko(x, zero, bound)
    assert r.ok
    # commuting diagonal case: Z = X + Y
    d1 = SkewHermitian(1j * np.diag([1e-3, 0, -1e-3]))
    d2 = SkewHermitian(1j * np.diag([5e-4, -5e-4, 0]))
    r2 = check_klyachko(d1, d2, bound)
    assert r2.ok


def test_klyachko_precondition():
    rng = np.random.default_rng(4)
    n = 3
    bound = coroot_spectrum(n, 1).scale(0.9 / (100 * n))
    big = random_skew_hermitian(n, rng)
    with pytest.raises(ValueError):
        check_klyachko(big, big, bound)
    with pytest.raises(ValueError):
        check_klyachko(big, big, coroot_spectrum(n, 1))  # bound too large


def test_log_unitary_branch_guard():
    with pytest.raises(BranchAmbiguityError):
        log_unitary_small(np.diag([-1.0 + 0j, -1.0 + 0j, 1.0 + 0j]))
    z = log_unitary_small(np.diag(np.exp(1j * np.array([0.01, -0.01, 0.0]))))
    assert np.abs(np.trace(z.entries)) < 1e-12


def test_eig_unitary_clusters():
    rng = np.random.default_rng(6)
    # conjugate phases share a cosine: the cluster pass must separate
    phis = np.array([0.3, -0.3, 0.0, 0.0])
    frame = exp_skew(random_skew_hermitian(4, rng))
    g = frame @ np.diag(np.exp(1j * phis)) @ frame.conj().T
    eig, u = eig_unitary(g)
    assert np.abs(np.sort(np.angle(eig)) - np.sort(phis)).max() < 1e-8


def test_interval_product_trivia():
    rng = np.random.default_rng(7)
    n = 3
    g = sample_unitary_in_window(n, (-0.4, 0.4), rng)
    ident = np.eye(n, dtype=complex)
    r = check_interval_product(g, ident, (-0.4, 0.4), (0.0, 0.0))
    assert r.ok
    # commuting diagonal: arguments add exactly
    d1 = np.diag(np.exp(1j * np.array([0.2, -0.1, -0.1])))
    d2 = np.diag(np.exp(1j * np.array([0.1, 0.1, -0.2])))
    r2 = check_interval_product(d1, d2, (-0.1, 0.2), (-0.2, 0.1))
    assert r2.ok
    wide = check_interval_product(g, g, (-4.0, 4.0), (-4.0, 4.0))
    assert wide.ok and wide.detail == "window >= full turn"


def test_interval_sampler_feasibility_guard():
    rng = np.random.default_rng(8)
    with pytest.raises(ValueError):
        # no multiple of 2*pi inside [N*lo, N*hi]
        sample_unitary_in_window(5, (-1.63, -1.35), rng)


def test_run_trials_small_all_pass():
    for n in (2, 4):
        stats = run_trials(n, 25, seed=n)
        assert all(s.failures == 0 for s in stats)
        assert {s.name for s in stats} == {
            "triangle", "pairing", "log_product", "interval_product"
        }


def test_run_trials_corrupt_fixture_fails():
    stats = run_trials(3, 5, seed=1, corrupt=True)
    assert sum(s.failures for s in stats) >= 1

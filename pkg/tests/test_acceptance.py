"""Acceptance gate: fifteen end-to-end checks with explicit tolerances and budgets.

Each test prints one PASS line (with its runtime) when it succeeds; a failure
shows up as the usual pytest FAILED line for that criterion.
"""

import time

import numpy as np

from speclab import (
    BorelSet,
    FiniteMeasure,
    SturmLiouvilleProblem,
    cayley,
    cayley_map,
    dft,
    dirichlet_seminorm,
    dirichlet_seminorm_quad,
    compose_mobius,
    compose_power,
    evolve,
    extract_atoms,
    gauss_legendre_grid,
    gram,
    hausdorff_distance_spectra,
    herglotz_recover,
    hermitian_eig,
    hs_norm,
    inner_product,
    inverse_dft,
    kernel_by_name,
    KERNEL_NAMES,
    measurable_calculus,
    measure_fourier,
    momentum_model,
    multiplier_adjoint_check,
    operator_norm,
    poly_derivative,
    poly_eval,
    pvm,
    halfplane_window,
    sl_eigensolve,
    spectral_measure,
    spectral_radius_gelfand,
    uncertainty,
    volterra,
)


def _random_hermitian(rng, n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (m + m.conj().T) / 2.0


def _random_unitary(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def _random_disc_points(rng, n, radius=0.95):
    r = radius * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(1j * rng.uniform(0, 2 * np.pi, n))


def _done(idx, label, t0, budget):
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, f"criterion {idx}: {elapsed:.2f}s exceeds {budget}s budget"
    print(f"acceptance {idx:02d} {label}: PASS ({elapsed:.2f}s, budget {budget:.0f}s)")


def test_01_sturm_liouville_dirichlet_eigenpairs():
    t0 = time.perf_counter()
    p = SturmLiouvilleProblem(0.0, np.pi, lambda x: np.zeros_like(x))
    modes = sl_eigensolve(p, n_nodes=400, k_wanted=5)
    for k, mode in enumerate(modes, start=1):
        assert abs(mode.lam - k * k) <= 0.005 * k * k
    grid = gauss_legendre_grid(0.0, np.pi, panels=50, per_panel=8)
    samples = np.column_stack([m.samples for m in modes])
    g = samples.conj().T @ (grid.weights[:, None] * samples)
    assert np.max(np.abs(g - np.eye(5))) <= 1e-8
    _done(1, "sturm-liouville dirichlet", t0, 5.0)


def test_02_volterra_square_and_quasinilpotence():
    t0 = time.perf_counter()
    grid = gauss_legendre_grid(0.0, 1.0, panels=50, per_panel=8)
    pair = volterra(grid)
    sym = pair.vstar_v.symmetrized
    mu = np.sort(np.linalg.eigvalsh((sym + sym.conj().T) / 2.0))[::-1]
    for k in range(1, 6):
        want = 4.0 / ((2 * k - 1) ** 2 * np.pi ** 2)
        assert abs(mu[k - 1] - want) <= 1e-3 * want
    v_spec = np.linalg.eigvals(pair.v.symmetrized)
    assert np.max(np.abs(v_spec)) <= 0.05
    _done(2, "volterra", t0, 5.0)


def test_03_poisson_mass_and_fourier():
    t0 = time.perf_counter()
    y = 1.0
    half = halfplane_window(y, tau_tail=5e-7)
    step = 0.4
    t = np.arange(-half, half + step / 2, step)
    mu = FiniteMeasure.from_density(t, (y / np.pi) / (t * t + y * y))
    assert abs(mu.total_mass() - 1.0) <= 1e-6
    del mu, t
    t2 = np.arange(-3.2e4, 3.2e4 + 0.125, 0.25)
    mu2 = FiniteMeasure.from_density(t2, (y / np.pi) / (t2 * t2 + y * y))
    omega = np.linspace(-10.0, 10.0, 81)
    got = measure_fourier(mu2, omega)
    assert np.max(np.abs(got - np.exp(-y * np.abs(omega)))) <= 1e-4
    _done(3, "poisson mass and fourier", t0, 2.0)


def test_04_herglotz_round_trip():
    t0 = time.perf_counter()
    masses = ((-1.0, 2.0), (1.0, 3.0))

    def u(z):
        x, yy = np.real(z), np.imag(z)
        return sum(m * (yy / np.pi) / ((x - a) ** 2 + yy ** 2) for a, m in masses)

    eps = 1e-3
    recovered = extract_atoms(herglotz_recover(u, eps, (-2.0, 2.0)), eps)
    got = sorted((x, m.real) for x, m in recovered.atoms)
    assert len(got) == 2
    assert abs(got[0][1] - 2.0) <= 0.02 * 2.0
    assert abs(got[1][1] - 3.0) <= 0.02 * 3.0
    _done(4, "herglotz round trip", t0, 5.0)


def test_05_gelfand_radius():
    t0 = time.perf_counter()
    rng = np.random.default_rng(105)
    for _ in range(100):
        a = _random_hermitian(rng, 8)
        seq = spectral_radius_gelfand(a, kmax=20)
        radius = float(np.max(np.abs(np.linalg.eigvalsh(a))))
        assert abs(seq[-1] - radius) <= 1e-6
    _done(5, "gelfand radius", t0, 3.0)


def test_06_hausdorff_spectral_stability():
    t0 = time.perf_counter()
    rng = np.random.default_rng(106)
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        a = _random_hermitian(rng, n)
        b = _random_hermitian(rng, n)
        assert hausdorff_distance_spectra(a, b) <= operator_norm(a - b) + 1e-10
    _done(6, "hausdorff stability", t0, 5.0)


def test_07_cayley_transform():
    t0 = time.perf_counter()
    rng = np.random.default_rng(107)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        a = _random_hermitian(rng, n)
        u = cayley(a)
        assert operator_norm(u.conj().T @ u - np.eye(n)) <= 1e-10
        mapped = np.array([cayley_map(lam) for lam in np.linalg.eigvalsh(a)])
        got = np.linalg.eigvals(u)
        d = np.abs(mapped[:, None] - got[None, :])
        assert max(d.min(axis=0).max(), d.min(axis=1).max()) <= 1e-10
    _done(7, "cayley transform", t0, 3.0)


def test_08_evolution_group_and_generator():
    t0 = time.perf_counter()
    rng = np.random.default_rng(108)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        a = _random_hermitian(rng, n)
        s, t = rng.standard_normal(2)
        assert operator_norm(evolve(a, s + t) - evolve(a, s) @ evolve(a, t)) <= 1e-10
        h = 1e-4
        defect = (evolve(a, h) - np.eye(n)) / h - 1j * a
        assert operator_norm(defect) <= operator_norm(a) ** 2 * h
    _done(8, "evolution group", t0, 3.0)


def test_09_uncertainty_inequalities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(109)
    violations = 0
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        a = _random_hermitian(rng, n)
        b = _random_hermitian(rng, n)
        h = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        h /= np.linalg.norm(h)
        rec = uncertainty(a, b, h)
        if rec.lhs > rec.rhs + 1e-10 or rec.robertson_lhs > rec.rhs + 1e-10:
            violations += 1
    assert violations == 0
    pauli_x = np.array([[0.0, 1.0], [1.0, 0.0]])
    pauli_y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
    rec = uncertainty(pauli_x, pauli_y, np.array([1.0, 0.0]))
    assert abs(rec.lhs - rec.rhs) <= 1e-12
    assert abs(rec.robertson_lhs - rec.rhs) <= 1e-12
    _done(9, "uncertainty", t0, 3.0)


def test_10_dft_unitarity():
    t0 = time.perf_counter()
    for n in (1, 2, 3, 8, 64):
        f = np.column_stack([dft(col) for col in np.eye(n, dtype=complex)])
        assert np.max(np.abs(f.conj().T @ f - np.eye(n))) <= 1e-12
        x = np.cos(np.arange(n)) + 1j * np.sin(3.0 * np.arange(n))
        assert np.max(np.abs(inverse_dft(dft(x)) - x)) <= 1e-12
    _done(10, "dft unitarity", t0, 1.0)


def test_11_rkhs_positivity_and_multiplier():
    t0 = time.perf_counter()
    rng = np.random.default_rng(111)
    for trial in range(200):
        k = kernel_by_name(KERNEL_NAMES[trial % len(KERNEL_NAMES)])
        pts = _random_disc_points(rng, int(rng.integers(2, 13)))
        assert np.linalg.eigvalsh(gram(k, pts)).min() >= -1e-9
    hardy = kernel_by_name("hardy")
    pts = list(_random_disc_points(rng, 8, radius=0.5)) + [0.5, -0.5]
    report = multiplier_adjoint_check((0.0, 1.0), hardy, pts, n_trunc=64)
    assert report.max_residual <= 2.0 * 0.5 ** 64
    _done(11, "rkhs positivity and multiplier", t0, 5.0)


def test_12_dirichlet_seminorm_invariance():
    t0 = time.perf_counter()
    rng = np.random.default_rng(112)
    a = rng.standard_normal(17) + 1j * rng.standard_normal(17)
    want = dirichlet_seminorm(a)
    da = poly_derivative(a)
    quad = dirichlet_seminorm_quad(lambda z: poly_eval(da, z))
    assert abs(quad - want) <= 1e-6 * (1 + want)

    f = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    base = dirichlet_seminorm(f)
    center = 0.4 * np.exp(2j * np.pi * rng.uniform())
    composed = compose_mobius(f, center, np.exp(2j * np.pi * rng.uniform()))
    assert abs(dirichlet_seminorm_quad(composed.derivative) - base) <= 1e-6 * (1 + base)

    for n in (2, 3):
        assert abs(dirichlet_seminorm(compose_power(f, n)) - n * base) <= 1e-8 * (1 + base)
    _done(12, "dirichlet seminorm invariance", t0, 5.0)


def test_13_spectral_measures():
    t0 = time.perf_counter()
    rng = np.random.default_rng(113)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        a = _random_hermitian(rng, n)
        res = hermitian_eig(a)
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        pair = spectral_measure(res, x, y)
        assert abs(pair.total_mass() - inner_product(x, y)) <= 1e-12 * (1 + np.linalg.norm(x) * np.linalg.norm(y))

        poly = lambda t: t ** 3 - 2.0 * t + 1.0
        direct = inner_product(x, measurable_calculus(res, poly) @ y)
        assert abs(pair.integrate(poly) - direct) <= 1e-10 * (1 + abs(direct))

        # atom exactly where the point spectrum sits
        for lam in res.eigenvalues:
            assert operator_norm(pvm(res, BorelSet.point(lam))) > 0.5
        gap = float(np.min(np.abs(np.diff(np.sort(res.eigenvalues))))) if len(res.eigenvalues) > 1 else 1.0
        off = float(res.eigenvalues[0]) + max(1.0, 0.5 * gap)
        if not any(abs(off - lam) < 1e-9 for lam in res.eigenvalues):
            assert operator_norm(pvm(res, BorelSet.point(off))) <= 1e-14
    _done(13, "spectral measures", t0, 2.0)


def test_14_hilbert_schmidt_norm():
    t0 = time.perf_counter()
    rng = np.random.default_rng(114)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        u = _random_unitary(rng, n)
        v = _random_unitary(rng, n)
        base = hs_norm(a)
        assert abs(hs_norm(u @ a @ v) - base) <= 1e-10 * (1 + base)
        assert operator_norm(a) <= base + 1e-12
    _done(14, "hilbert-schmidt norm", t0, 1.0)


def test_15_momentum_model():
    t0 = time.perf_counter()
    twist = 0.5  # dyadic: twist + n is exact in floats
    order = 8
    res = momentum_model(twist, order)
    want = twist + np.arange(-order, order + 1)
    assert np.array_equal(np.asarray(res.eigenvalues, dtype=float), want)
    assert np.array_equal(np.diff(np.asarray(res.eigenvalues, dtype=float)), np.ones(2 * order))
    d = res.reconstruct()
    u = evolve(d, 0.83)
    assert operator_norm(u.conj().T @ u - np.eye(res.dim)) <= 1e-12
    _done(15, "momentum model", t0, 1.0)

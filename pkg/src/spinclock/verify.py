"""Property suite: every structural invariant of the library, runnable
from the CLI (`spinclock verify`) with a machine-readable report.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import classical, clock, coherent, fock, symbols
from .grids import radial_grid, sphere_grid


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    tol: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} measured={self.measured:.3e} tol={self.tol:.3e}"


def _check(name: str, measured: float, tol: float) -> CheckResult:
    return CheckResult(name=name, passed=bool(measured < tol), measured=float(measured), tol=tol)


def run_checks(j: float = 5.0, seed: int = 0,
               quad_order: int | None = None) -> list[CheckResult]:
    """Run the full invariant suite at spin j; returns one result per check."""
    rng = np.random.default_rng(seed)
    two_j = int(round(2 * j))
    m_prime = two_j
    grid = sphere_grid(j, n_polar=quad_order)
    results: list[CheckResult] = []

    # classical oracle
    cfg = classical.ClassicalConfig(A=0.6, B=0.8, phi=0.4, phi_prime=0.1, omega=1.0, E=1.0)
    taus = np.linspace(0.0, 10 * 2 * math.pi, 101)
    energies = np.array([classical.energy(cfg, t) for t in taus])
    results.append(_check("classical.energy_conservation",
                          np.max(energies) - np.min(energies), 1e-12))
    xi0 = classical.reduced_coordinate(cfg)
    shifted = classical.ClassicalConfig(A=cfg.A, B=cfg.B, phi=cfg.phi + 0.37,
                                        phi_prime=cfg.phi_prime + 0.37,
                                        omega=cfg.omega, E=cfg.E)
    results.append(_check("classical.gauge_invariant_xi",
                          abs(classical.reduced_coordinate(shifted) - xi0), 1e-15))
    # branch consistency on a half-period where q2 is monotone
    branch_err = 0.0
    for t in np.linspace(0.05, math.pi - 0.05, 25):
        tau = t - cfg.phi_prime
        q1, _, q2, _ = classical.trajectory(cfg, tau)
        branch_err = max(branch_err, abs(classical.classical_clock_readout(cfg, q2) - q1))
    results.append(_check("classical.clock_branch_consistency", branch_err, 1e-12))

    # su(2) structure
    if m_prime >= 1:
        s1, s2, s3 = fock.spin_operators(m_prime)
        comm = max(np.max(np.abs(s1 @ s2 - s2 @ s1 - 1j * s3)),
                   np.max(np.abs(s2 @ s3 - s3 @ s2 - 1j * s1)),
                   np.max(np.abs(s3 @ s1 - s1 @ s3 - 1j * s2)))
        results.append(_check("fock.su2_commutators", comm, 1e-13))
        cas = fock.casimir(m_prime)
        results.append(_check("fock.casimir",
                              np.max(np.abs(cas - j * (j + 1) * np.eye(m_prime + 1))), 1e-12))
        expect = np.arange(-j, j + 1)
        spec_err = max(np.max(np.abs(np.sort(np.linalg.eigvalsh(s)) - expect))
                       for s in (s1, s2, s3))
        results.append(_check("fock.spin_spectrum", spec_err, 1e-10))

    # projection and gauge covariance
    gauge_err = 0.0
    factor_err = 0.0
    for _ in range(50):
        alpha = complex(rng.normal(), rng.normal())
        beta = complex(rng.normal(), rng.normal())
        if abs(beta) < 1e-3:
            continue
        amps, _ = coherent.project_coherent(alpha, beta, m_prime)
        th0 = rng.uniform(0, 2 * math.pi)
        amps_rot, _ = coherent.project_coherent(alpha * np.exp(1j * th0),
                                                beta * np.exp(1j * th0), m_prime)
        gauge_err = max(gauge_err,
                        np.max(np.abs(amps_rot - np.exp(1j * m_prime * th0) * amps)))
        theta, xi = coherent.factor_gauge_phase(alpha, beta, m_prime)
        direction = amps / np.linalg.norm(amps)
        rebuilt = np.exp(1j * m_prime * theta) * coherent.su2_coherent(xi, j)
        factor_err = max(factor_err, np.max(np.abs(direction - rebuilt)))
    results.append(_check("coherent.gauge_covariance", gauge_err, 1e-13))
    results.append(_check("coherent.gauge_phase_factoring", factor_err, 1e-12))

    # overlap closed form vs explicit inner products
    ov_err = 0.0
    bound_err = 0.0
    for _ in range(200):
        x1 = complex(rng.normal(), rng.normal())
        x2 = complex(rng.normal(), rng.normal())
        explicit = complex(coherent.su2_coherent(x1, j).conj()
                           @ coherent.su2_coherent(x2, j))
        closed = coherent.overlap(x1, x2, j)
        ov_err = max(ov_err, abs(closed - explicit))
        bound_err = max(bound_err, abs(closed) - 1.0)
    results.append(_check("coherent.overlap_closed_form", ov_err, 1e-12))
    results.append(_check("coherent.overlap_bound", bound_err, 1e-12))

    # resolution of unity
    res = coherent.resolution_of_unity(j, grid)
    results.append(_check("coherent.resolution_of_unity",
                          np.max(np.abs(res - np.eye(two_j + 1))), 1e-10))

    # radial weight normalization via the quadrature rule itself is
    # circular; integrate on a dense trapezoid grid instead
    from scipy.integrate import simpson
    for m in (0, 5, 50):
        r = np.linspace(0.0, m + 1 + 40 * math.sqrt(m + 1.0), 200001)
        mass = simpson(coherent.radial_weight(r, m), x=r)
        results.append(_check(f"coherent.radial_weight_norm_m{m}", abs(mass - 1.0), 1e-8))

    # symbol transport
    m = m_prime
    reduced_one = symbols.project_lower_symbol(lambda xi, r, th: 1.0, m)
    results.append(_check("symbols.project_unit_symbol",
                          abs(reduced_one(0.3 + 0.4j) - 1.0), 1e-12))
    ident = symbols.reconstruct_operator(lambda xi: 1.0, j, grid)
    results.append(_check("symbols.reconstruct_unit_symbol",
                          np.max(np.abs(ident - np.eye(two_j + 1))), 1e-10))
    # gauge-average null for cos(theta + c) factors
    null_err = 0.0
    for c in (0.0, 0.7, 2.4):
        sym = lambda xi, r, th, c=c: math.sqrt(r) * math.cos(th + c)
        reduced = symbols.project_lower_symbol(sym, m)
        for _ in range(5):
            x = complex(rng.normal(), rng.normal())
            null_err = max(null_err, abs(reduced(x)))
    results.append(_check("symbols.gauge_average_null", null_err, 1e-14))
    # constraint peaking for o = r
    peak_err = 0.0
    for mm in (10, 100, 1000):
        reduced_r = symbols.project_lower_symbol(lambda xi, r, th: r, mm)
        rel = abs(reduced_r(0.5 + 0j) - (mm + 1)) / (mm + 1)
        peak_err = max(peak_err, abs(rel - 1.0 / (mm + 1)))
    results.append(_check("symbols.constraint_peaking", peak_err, 1e-12))
    # spin symbols closed form vs matrix expectations
    if m_prime >= 1:
        sym_err = 0.0
        sphere_err = 0.0
        for _ in range(20):
            x = complex(rng.normal(), rng.normal())
            cf = symbols.spin_symbols_closed_form(x, j)
            mats = fock.spin_operators(m_prime)
            for val, mat in zip(cf, mats):
                sym_err = max(sym_err, abs(symbols.upper_symbol(mat, x, j) - val))
            sphere_err = max(sphere_err, abs(sum(v * v for v in cf) - j * j))
        results.append(_check("symbols.spin_upper_symbols", sym_err, 1e-12))
        results.append(_check("symbols.spin_symbol_sphere", sphere_err, 1e-10))
    # hermiticity of reconstructed operators
    herm = symbols.reconstruct_operator(
        lambda xi: (1.0 - abs(xi) ** 2) / (1.0 + abs(xi) ** 2), j, grid)
    results.append(_check("symbols.reconstruct_hermitian",
                          np.max(np.abs(herm - herm.conj().T)), 1e-13))

    # clock
    xi_c = 0.8 * np.exp(1j * math.pi / 5)
    taus = np.linspace(0.0, 4 * math.pi, 64)
    vals = clock.clock_symbol_q1(xi_c, m, taus, phi_prime=0.2)
    model = np.cos(taus + 0.2 + np.angle(xi_c))
    amp = float(vals @ model) / float(model @ model)
    results.append(_check("clock.sinusoid_fit",
                          np.max(np.abs(vals - amp * model)), 1e-12))
    rgrid = radial_grid(m)
    depar = clock.deparameterize(
        lambda xi, r, th: symbols.q1_position_symbol(xi, r, th), m, 0.0,
        phi_prime=0.2, rgrid=rgrid)
    ratios = []
    for x in (xi_c, 1.5 - 0.3j, 0.2 + 0.9j):
        cs = clock.clock_symbol_q1(x, m, 0.0, phi_prime=0.2)
        if abs(cs) > 1e-12:
            ratios.append(depar(x) / cs)
    results.append(_check("clock.deparameterize_constant_ratio",
                          (max(ratios) - min(ratios)) / abs(np.mean(ratios)), 1e-10))
    if j >= 1:
        cop = clock.clock_operator(j, 0.7, phi_prime=0.2)
        results.append(_check("clock.operator_hermitian",
                              np.max(np.abs(cop - cop.conj().T)), 1e-13))
        results.append(_check("clock.operator_traceless", abs(np.trace(cop)), 1e-12))
    if j >= 5:
        sweep = np.linspace(-1.2, 1.2, 801) + math.pi / 4
        tr = clock.amplitude_correlation(math.pi / 4, j, sweep)
        results.append(_check("clock.amplitude_width_scaling",
                              abs(tr.sigma2_fit / tr.sigma2_pred - 1.0), 0.05))
        trp = clock.phase_correlation(1.0, j, np.linspace(-2.0, 2.0, 801))
        results.append(_check("clock.phase_width_scaling",
                              abs(trp.sigma2_fit / trp.sigma2_pred - 1.0), 0.05))
        i_pk = int(np.argmax(tr.overlap))
        results.append(_check("clock.peak_location",
                              abs(tr.sweep[i_pk] - math.pi / 4), 1e-12))

    return results
